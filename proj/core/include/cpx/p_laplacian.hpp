#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cpx/cheeger.hpp"
#include "cpx/complex.hpp"
#include "cpx/report.hpp"

namespace cpx {

enum class Direction { up, down };

/// f -> ||M f||_p^p / sum_i w_i |f_i|^p with M = B_{d+1}^T (up) or B_d (down).
/// Normalized up uses w = up-degree; every other case uses w = 1.
struct PRayleighProblem {
  const SimplicialComplex* complex = nullptr;
  int dim = 0;
  double p = 2.0;
  Direction direction = Direction::up;
  bool normalized = true;

  /// Hoelder conjugate; +inf at p = 1.
  double conjugate() const;
};

struct ExtremeEigenEstimate {
  double value = 0.0;
  std::vector<double> argument;
  std::size_t restarts = 0;
  bool converged = false;
};

double p_rayleigh(const PRayleighProblem& prob, std::span<const double> f);
std::vector<double> p_rayleigh_gradient(const PRayleighProblem& prob, std::span<const double> f);

/// Largest p-Rayleigh critical value found by multi-start ascent. A local maximum:
/// use it only as a lower bound for lambda_n.
ExtremeEigenEstimate max_eig_p(const PRayleighProblem& prob, std::size_t restarts = 32, std::uint64_t seed = 0,
                               std::size_t threads = 1);

/// (min, max) found for (k^{p-1} sum|x_i|^p - |sum x_i|^p) / sum_{i<j} |x_i - x_j|^p
/// over lattice, random and pattern-search points with non-negligible spread.
/// For p < 2 the ratio tends to 0 along x + t 1 as t grows, so the minimum is only
/// that of the sampled region.
std::pair<double, double> estimate_claim_constants(double p, std::size_t k, std::size_t samples = 4000,
                                                   std::uint64_t seed = 0);
double claim_ratio(double p, std::span<const double> x);

struct POptions {
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  std::size_t samples = 4000;
  std::size_t threads = 1;
  GridOptions grid{};
};

/// c h_1^p <= (d+2)^{p-1} - lambda_n <= C h_1 for 1 < p <= 2.
VerificationReport verify_gap_p(const SimplicialComplex& k, int d, double p, const POptions& opt = {});

/// lambda_max(L^up_{d,p})^{1/p} = lambda_max(L^down_{d+1,p*})^{1/p*} on the unnormalized quotients.
VerificationReport verify_p_duality(const SimplicialComplex& k, int d, double p, const POptions& opt = {});

/// h^p/#Sigma_{d+1}^{p-1} <= lambda_{I_d}(Delta^up_{d,p}) <= vol^{p-1} h.
VerificationReport verify_rough_cheeger_p(const SimplicialComplex& k, int d, double p, const POptions& opt = {});

}  // namespace cpx
