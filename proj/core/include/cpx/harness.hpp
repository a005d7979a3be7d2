#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpx/generators.hpp"
#include "cpx/limits.hpp"
#include "cpx/report.hpp"

namespace cpx {

struct HarnessOptions {
  std::vector<std::string> sections;  // empty means all
  std::size_t threads = 1;
  Limits limits{};
  std::uint64_t seed = 0;
  std::size_t restarts = 32;
};

/// eckmann, duality, signed-map, gap-d2, rough-cheeger, d1d4-equivalence,
/// manifold-diameter, p-family, z2.
const std::vector<std::string>& harness_sections();

/// Comma-separated list or "all". Throws MalformedInput on unknown names.
std::vector<std::string> parse_sections(const std::string& csv);

/// Runs the selected families on one complex. Operations refused by a
/// precondition or a capacity limit appear as report-only entries with the reason.
std::vector<VerificationReport> run_harness(const NamedComplex& c, const HarnessOptions& opt);

nlohmann::json harness_to_json(const NamedComplex& c, const std::vector<VerificationReport>& reports);

}  // namespace cpx
