#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpx/exact_linalg.hpp"
#include "cpx/rational.hpp"

namespace cpx {

/// minimize c.x subject to A x = b, with x_j >= 0 unless free[j].
struct RationalLP {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<bool> free;  // empty means all nonnegative
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
  bool used_bignum = false;  // solved on the arbitrary-precision path
};

/// Two-phase dense-tableau simplex with Bland's rule, exact throughout.
/// Runs in 64-bit rationals and falls back to arbitrary precision on overflow.
LpSolution solve_lp(const RationalLP& lp);

struct QuotientNorm {
  Rational value;
  std::vector<Rational> representative;  // x + G w at the optimum
};

/// min over w of sum_i weight_i |x_i + (G w)_i|. G's columns span the subspace;
/// an empty G gives the weighted l1 norm of x.
QuotientNorm quotient_norm(std::span<const Rational> x, const IntMatrix& g, std::span<const std::int64_t> weights);
QuotientNorm quotient_norm(std::span<const std::int64_t> x, const IntMatrix& g, std::span<const std::int64_t> weights);

/// min sum_i weight_i |x_i| subject to D x = y; nullopt when y is not in the image of D.
std::optional<QuotientNorm> filling_norm(const IntMatrix& d, std::span<const std::int64_t> y,
                                          std::span<const std::int64_t> weights);

struct Certificate {
  bool feasible = false;
  std::vector<Rational> u;
};

/// Existence of u with u_i = w_i sign(x_i) on supp x, |u_i| <= w_i elsewhere,
/// and G^T u = 0 (u orthogonal to the column space of G).
Certificate l1_orthogonality_certificate(std::span<const Rational> x, const IntMatrix& g,
                                         std::span<const std::int64_t> weights);

Rational weighted_l1(std::span<const Rational> x, std::span<const std::int64_t> weights);

}  // namespace cpx
