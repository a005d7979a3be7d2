#include "cpx/complex_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cpx/error.hpp"

namespace cpx {

namespace {

Simplex read_simplex(const nlohmann::json& j) {
  if (!j.is_array()) throw MalformedInput("simplex must be an array of vertex ids, got " + j.dump());
  Simplex s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw MalformedInput("vertex id must be an integer, got " + v.dump());
    s.push_back(v.get<std::int64_t>());
  }
  return s;
}

std::string describe(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

}  // namespace

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw MalformedInput("complex must be a JSON object");
  if (j.contains("facets")) {
    const auto& f = j.at("facets");
    if (!f.is_array()) throw MalformedInput("\"facets\" must be an array");
    std::vector<Simplex> facets;
    for (const auto& s : f) facets.push_back(read_simplex(s));
    return build_complex(std::move(facets));
  }
  if (j.contains("simplices")) {
    const auto& by_dim = j.at("simplices");
    if (!by_dim.is_object()) throw MalformedInput("\"simplices\" must be an object keyed by dimension");
    std::vector<Simplex> all;
    for (const auto& [key, list] : by_dim.items()) {
      std::size_t pos = 0;
      int d = -1;
      try {
        d = std::stoi(key, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != key.size() || d < 0) throw MalformedInput("bad dimension key \"" + key + "\"");
      if (!list.is_array()) throw MalformedInput("simplices of dimension " + key + " must be an array");
      for (const auto& s : list) {
        Simplex simplex = read_simplex(s);
        if (static_cast<int>(simplex.size()) != d + 1)
          throw MalformedInput("simplex " + describe(simplex) + " listed under dimension " + key);
        all.push_back(std::move(simplex));
      }
    }
    SimplicialComplex k = build_complex(all);
    std::size_t listed = 0;
    for (auto& s : all) std::sort(s.begin(), s.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    listed = all.size();
    std::size_t total = 0;
    for (int d = 0; d <= k.dim(); ++d) total += k.count(d);
    if (listed != total) {
      for (int d = 0; d <= k.dim(); ++d)
        for (const auto& s : k.simplices(d))
          if (!std::binary_search(all.begin(), all.end(), s))
            throw MalformedInput("simplex list is not closed: face " + describe(s) + " is missing");
    }
    return k;
  }
  throw MalformedInput("expected a \"facets\" or \"simplices\" key");
}

SimplicialComplex parse_complex(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("JSON parse error: ") + e.what());
  }
  return complex_from_json(j);
}

SimplicialComplex load_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

nlohmann::json complex_to_json(const SimplicialComplex& k) {
  nlohmann::json facets = nlohmann::json::array();
  for (const auto& f : k.facets()) facets.push_back(f);
  return {{"facets", facets}};
}

std::string complex_digest(const SimplicialComplex& k) {
  const std::string text = complex_to_json(k).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace cpx
