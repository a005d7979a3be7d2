#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cpx/complex.hpp"
#include "cpx/limits.hpp"
#include "cpx/numlin.hpp"
#include "cpx/rational.hpp"

namespace cpx {

struct SignedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  int sign = 1;
};

/// Simple undirected graph with edge signs in {+1, -1}.
class SignedGraph {
 public:
  SignedGraph() = default;
  /// Throws MalformedInput on self-loops, repeated pairs, bad signs or out-of-range ends.
  SignedGraph(std::size_t n, std::vector<SignedEdge> edges);

  std::size_t order() const noexcept { return n_; }
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  /// (neighbor, sign) pairs.
  const std::vector<std::pair<std::size_t, int>>& neighbors(std::size_t v) const { return adj_[v]; }

  /// Flips every edge with exactly one endpoint where tau == -1.
  SignedGraph switched(const std::vector<int>& tau) const;
  /// All signs negated.
  SignedGraph opposite() const;

  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;

 private:
  std::size_t n_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::vector<std::pair<std::size_t, int>>> adj_;
};

/// Which sign the up-adjacency carries: `coboundary` is the product
/// sgn([t],d[s]) sgn([t'],d[s]); `laplacian` is its negative, the convention
/// under which the normalized up-Laplacian is an affine image of the signed Laplacian.
enum class SignConvention { coboundary, laplacian };

/// Vertex per d-simplex, edge per pair of d-faces of a common (d+1)-simplex.
/// Throws DimensionError when Sigma_{d+1} is empty or d is out of range.
SignedGraph build_up_signed_graph(const SimplicialComplex& k, int d,
                                  SignConvention convention = SignConvention::coboundary);

/// D^{-1/2} (D - A_s) D^{-1/2}; throws DegenerateDegree on an isolated vertex.
SymmetricMatrix signed_laplacian(const SignedGraph& g);

struct ComponentBalance {
  std::vector<std::size_t> vertices;
  bool balanced = false;
  bool antibalanced = false;
  std::vector<int> balancing_switch;      // over the whole vertex set, +1 off the component
  std::vector<int> antibalancing_switch;
};

/// Per component, BFS-propagated switching towards all +1 and towards all -1.
std::vector<ComponentBalance> balance_decompose(const SignedGraph& g);

/// Same verdicts by trying all 2^{n_c - 1} switchings of each component.
/// Throws CapacityError when a component exceeds `max_vertices`.
std::vector<ComponentBalance> balance_by_enumeration(const SignedGraph& g, std::size_t max_vertices = 20);

/// beta^s(V1, V2) for side labels: 0 unused, 1 in V1, 2 in V2.
Rational signed_bipartiteness(const SignedGraph& g, const std::vector<int>& side);

struct SignedCheegerResult {
  Rational value;
  /// Per vertex: 0 unused, 2i-1 for V_{2i-1}, 2i for V_{2i} (pairs 1-based).
  std::vector<int> assignment;
  std::vector<Rational> pair_ratios;
  std::uint64_t evaluated = 0;
};

/// Exact h_k^s. The least beta over signings is tabulated for every support, then
/// k disjoint supports are packed by a subset recursion. The witness is the
/// lexicographically smallest canonical assignment (pairs opened in vertex order,
/// first vertex of each pair on its odd side) attaining the value. `threads` is
/// accepted for interface symmetry; the search is sequential and deterministic.
SignedCheegerResult signed_cheeger(const SignedGraph& g, std::size_t k, std::size_t threads = 1,
                                   const Limits& limits = {});

/// Same value and witness by exhaustive enumeration of canonical assignments,
/// split over `threads` prefix chunks. Used as a cross-check on small graphs.
SignedCheegerResult signed_cheeger_enumerate(const SignedGraph& g, std::size_t k, std::size_t threads = 1,
                                             const Limits& limits = {});

}  // namespace cpx
