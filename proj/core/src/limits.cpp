#include "cpx/limits.hpp"

#include <cstdlib>
#include <sstream>

#include "cpx/error.hpp"

namespace cpx {

void Limits::apply_overrides(const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw MalformedInput("capacity override \"" + item + "\" is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    double v = 0;
    try {
      std::size_t pos = 0;
      v = std::stod(val, &pos);
      if (pos != val.size() || v < 0) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw MalformedInput("capacity override \"" + item + "\" has a bad value");
    }
    const auto n = static_cast<std::size_t>(v);
    if (key == "signed_dp") signed_cheeger_dp = n;
    else if (key == "signed_k1") signed_cheeger_k1 = n;
    else if (key == "signed_k2") signed_cheeger_k2 = n;
    else if (key == "signed_k3") signed_cheeger_k3 = n;
    else if (key == "signed_kmore") signed_cheeger_kmore = n;
    else if (key == "grid") grid_points = v;
    else if (key == "z2") z2_bits = n;
    else if (key == "cuts") cut_vertices = n;
    else if (key == "circuits") circuit_supports = v;
    else throw MalformedInput("unknown capacity key \"" + key + "\"");
  }
}

Limits Limits::from_env() {
  Limits l;
  if (const char* env = std::getenv("CPX_CAPACITY")) l.apply_overrides(env);
  return l;
}

}  // namespace cpx
