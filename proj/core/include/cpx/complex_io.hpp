#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "cpx/complex.hpp"

namespace cpx {

/// Accepts {"facets": [[v,...],...]} or {"simplices": {"0": [...], "1": [...]}}.
/// The second form must already be downward closed; a missing face is reported.
SimplicialComplex complex_from_json(const nlohmann::json& j);
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex load_complex(const std::filesystem::path& path);

/// {"facets": ...} with facets in canonical order.
nlohmann::json complex_to_json(const SimplicialComplex& k);

/// FNV-1a 64 of the canonical facet serialization, as 16 hex digits.
std::string complex_digest(const SimplicialComplex& k);

}  // namespace cpx
