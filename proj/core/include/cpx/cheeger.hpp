#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpx/complex.hpp"
#include "cpx/limits.hpp"
#include "cpx/rational.hpp"
#include "cpx/report.hpp"
#include "cpx/signed_graph.hpp"

namespace cpx {

struct CheegerReport {
  Rational value;
  std::string method;
  std::vector<std::int64_t> witness;       // integer cochain / multiset / assignment
  std::vector<std::int64_t> image;         // coboundary of the witness, where meaningful
  std::vector<Rational> representative;    // coset-optimal representative from the LP
  std::size_t stabilized_at_m = 0;         // grid methods only
  bool stabilized = true;
  bool capped = false;      // a grid sweep was refused by capacity; value is an upper bound
  bool vanishing = false;   // a cohomology class forced the value to 0
  std::vector<std::pair<std::size_t, Rational>> sweep;  // (M, value at M)
  std::string note;
};

// ---- gap from d+2 ------------------------------------------------------

/// h_k(Sigma_d) = (d+1) h_k^s of the signed graph with the coboundary sign.
CheegerReport h_k_sigma(const SimplicialComplex& k, int d, std::size_t kway, std::size_t threads = 1,
                        const Limits& limits = {});

/// h_1^2/(2(d+1)) <= d+2-lambda_n <= 2 h_1 and, for 2 <= k <= kmax,
/// (d+2-lambda_{n+1-k})/2 <= h_k. The right side for k >= 2 is reported only.
VerificationReport verify_gap_dplus2(const SimplicialComplex& k, int d, std::size_t kmax, std::size_t threads = 1,
                                     const Limits& limits = {});

/// d+2 - lambda_{n-i+1}(Delta_d^up) = (d+1) lambda_i(signed Laplacian, coboundary sign).
VerificationReport verify_reflection_identity(const SimplicialComplex& k, int d);

/// mu_j = (d+1) lambda_j - d with the Laplacian-convention signed graph.
VerificationReport verify_affine_map(const SimplicialComplex& k, int d);

// ---- gap from 0 ---------------------------------------------------------

struct GridOptions {
  std::int64_t max_m = 6;
  std::size_t threads = 1;
  Limits limits{};
};

/// Multiset definition: ratio |coboundary S| / min vol(S') over S' with the same coboundary.
CheegerReport h_sigma_d_bruteforce(const SimplicialComplex& k, int d, const GridOptions& opt = {});
/// Z-expander definition: ||delta phi||_1 over the quotient norm modulo Im delta.
CheegerReport h_sigma_d_zexpander(const SimplicialComplex& k, int d, const GridOptions& opt = {});
/// Filling definition: ||y||_1 / fill(y) for y = delta x.
CheegerReport h_sigma_d_filling(const SimplicialComplex& k, int d, const GridOptions& opt = {});

/// Exact value through the circuits (minimal-support vectors) of Im delta_d, which
/// are the vertices of the l1 unit ball of that image. Needs vanishing reduced cohomology;
/// returns 0 flagged as vanishing otherwise.
CheegerReport h_sigma_d_circuits(const SimplicialComplex& k, int d, const Limits& limits = {});

/// Best exact value available: graph cuts in degree 0, then the vanishing check and
/// circuits, then the Z-expander grid.
CheegerReport h_sigma_d(const SimplicialComplex& k, int d, const GridOptions& opt = {});

/// The report's representative (or witness) is l1-orthogonal to Im B_d^T and its
/// Rayleigh ratio ||B_{d+1}^T x||_1 / ||x||_{1,deg} equals the reported value.
struct D3Certificate {
  bool certified = false;
  Rational ratio;
  std::vector<Rational> x;
  std::vector<Rational> u;
  std::string reason;
};
D3Certificate certify_d3(const SimplicialComplex& k, int d, const CheegerReport& report);

// ---- closed manifolds ---------------------------------------------------

struct PseudomanifoldInfo {
  bool closed = false;       // every codimension-1 face in exactly two top simplices
  bool connected = false;    // dual graph connected
  bool orientable = false;   // kernel of the top boundary is spanned by a +-1 vector
  std::vector<std::int64_t> fundamental_class;  // +-1 per top simplex when orientable
};
PseudomanifoldInfo pseudomanifold_info(const SimplicialComplex& k);

/// Graph on Sigma_d with an edge for each pair sharing a (d-1)-face.
std::vector<std::vector<std::size_t>> down_adjacency(const SimplicialComplex& k, int d);

/// Graph diameter by BFS; nullopt when disconnected.
std::optional<std::size_t> graph_diameter(const std::vector<std::vector<std::size_t>>& adj);

/// Classical Cheeger constant min |dS| / vol(S) over 0 < vol(S) <= vol/2, by enumeration.
std::pair<Rational, std::vector<std::int64_t>> graph_cheeger(const std::vector<std::vector<std::size_t>>& adj,
                                                             const Limits& limits = {});

/// 1/diam of the dual graph on the top simplices. Requires a closed, connected,
/// orientable pseudomanifold with vanishing first Betti number (PreconditionError otherwise).
Rational diameter_formula(const SimplicialComplex& k);

/// The dual side of the duality equality for d = dim-1 on a closed orientable
/// pseudomanifold: 1 / max_y (max eps.y - min eps.y)/2 subject to |(B y)_t| <= deg t,
/// one exact LP per pair of top simplices.
CheegerReport h_infinity_dual(const SimplicialComplex& k);

/// Down Cheeger constant. On a closed orientable pseudomanifold at the top
/// dimension this is the Cheeger constant of the dual graph (exhaustive cuts);
/// otherwise the grid protocol with B_d as numerator, Im B_{d+1} excluded and weight d+1.
CheegerReport h_down(const SimplicialComplex& k, int d, const GridOptions& opt = {});
/// Always the grid protocol (cross-check for the dual-graph route).
CheegerReport h_down_grid(const SimplicialComplex& k, int d, const GridOptions& opt = {});

/// Hamming-norm constant over Z_2, by enumeration of all 2^n cochains.
CheegerReport z2_cheeger(const SimplicialComplex& k, int d, const Limits& limits = {});

/// h^2/#Sigma_{d+1} <= lambda_{I_d}(Delta_d^up) <= vol(Sigma_d) h.
VerificationReport verify_rough_cheeger(const SimplicialComplex& k, int d, const GridOptions& opt = {});

/// On a closed orientable pseudomanifold of dimension d+1: the eigenvalue chain
/// lambda_{I_d}(Delta_d^up) = L^up/2 = L^down_{d+1}/2 = (d+2)/2 lambda_2(Delta^down_{d+1})
/// and (d+2)/4 h_down^2 <= lambda_{I_d} <= (d+2) h_down. Requires reduced b_d = 0.
VerificationReport verify_down_bounds(const SimplicialComplex& k);

}  // namespace cpx
