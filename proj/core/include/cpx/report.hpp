#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpx/rational.hpp"

namespace cpx {

enum class Status { pass, fail, report_only };

const char* to_string(Status s);

/// One asserted (or reported) relation. Both sides are kept as printed values.
struct Check {
  std::string name;
  Status status = Status::pass;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

/// Full-precision decimal rendering used for floating values in reports.
std::string fmt(double x);
inline std::string fmt(const Rational& x) { return x.str(); }
std::string fmt(std::size_t x);

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string section) : section_(std::move(section)) {}

  const std::string& section() const noexcept { return section_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }

  Check& add(Check c) { return checks_.emplace_back(std::move(c)); }
  Check& expect(std::string name, bool ok, std::string lhs, std::string rhs, std::string detail = {}) {
    return add({std::move(name), ok ? Status::pass : Status::fail, std::move(lhs), std::move(rhs), std::move(detail)});
  }
  Check& note(std::string name, std::string lhs, std::string rhs, std::string detail = {}) {
    return add({std::move(name), Status::report_only, std::move(lhs), std::move(rhs), std::move(detail)});
  }
  void merge(const VerificationReport& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failures() const;

  nlohmann::json to_json() const;

 private:
  std::string section_;
  std::vector<Check> checks_;
};

}  // namespace cpx
