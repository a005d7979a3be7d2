#pragma once

#include <cstddef>
#include <string>

namespace cpx {

/// Size guards for every exhaustive enumeration in the library.
struct Limits {
  std::size_t signed_cheeger_dp = 16;  // vertices, support search for any k
  std::size_t signed_cheeger_k1 = 12;  // vertices, plain enumeration
  std::size_t signed_cheeger_k2 = 9;
  std::size_t signed_cheeger_k3 = 8;
  std::size_t signed_cheeger_kmore = 7;
  double grid_points = 1e7;            // (2M+1)^n per grid sweep
  std::size_t z2_bits = 22;            // 2^n cochains
  std::size_t cut_vertices = 24;       // 2^n vertex cuts
  double circuit_supports = 5e6;       // candidate supports in circuit enumeration

  std::size_t signed_cheeger_vertices(std::size_t k) const {
    switch (k) {
      case 1:
        return signed_cheeger_k1;
      case 2:
        return signed_cheeger_k2;
      case 3:
        return signed_cheeger_k3;
      default:
        return signed_cheeger_kmore;
    }
  }

  /// Applies "key=value,key=value" overrides. Keys: signed_dp, signed_k1,
  /// signed_k2, signed_k3, signed_kmore, grid, z2, cuts, circuits. Throws MalformedInput.
  void apply_overrides(const std::string& spec);

  /// Defaults with overrides from the CPX_CAPACITY environment variable, if set.
  static Limits from_env();
};

}  // namespace cpx
