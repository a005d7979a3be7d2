#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cpx/exact_linalg.hpp"

namespace cpx {

/// A simplex as a strictly increasing tuple of vertex ids.
using Simplex = std::vector<std::int64_t>;

/// Downward-closed finite simplicial complex in the ascending-order orientation.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// -1 for the empty complex.
  int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

  const std::vector<std::int64_t>& vertices() const noexcept { return vertices_; }

  /// Sorted d-simplices; empty for d outside [0, dim()].
  const std::vector<Simplex>& simplices(int d) const;
  std::size_t count(int d) const { return simplices(d).size(); }

  /// Dense index of a simplex within its dimension, if present.
  std::optional<std::size_t> index_of(const Simplex& s) const;

  /// Number of (d+1)-cofaces of each d-simplex, in canonical order.
  const std::vector<std::int64_t>& up_degrees(int d) const;

  /// Maximal simplices in (dimension, lexicographic) order.
  std::vector<Simplex> facets() const;

  std::int64_t euler_characteristic() const;

  /// True when every simplex lies in a simplex of dimension dim().
  bool is_pure() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.by_dim_ == b.by_dim_;
  }

 private:
  friend SimplicialComplex build_complex(std::vector<Simplex> facets);

  std::vector<std::int64_t> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<std::vector<std::int64_t>> up_degree_;
};

/// Smallest downward-closed complex containing the facets.
/// Throws MalformedInput on a repeated vertex, a negative id or an empty facet.
SimplicialComplex build_complex(std::vector<Simplex> facets);

/// B_d: rows indexed by Sigma_{d-1}, columns by Sigma_d, entry (-1)^j when the
/// row simplex is the column simplex with its j-th vertex removed.
/// Valid for 1 <= d <= dim(K); throws DimensionError otherwise.
IntMatrix incidence_matrix(const SimplicialComplex& k, int d);

/// Coboundary map at dimension d, i.e. the transpose of B_{d+1}.
/// Has zero rows when d == dim(K).
IntMatrix coboundary(const SimplicialComplex& k, int d);

/// Boundary matrix with the reduced convention: B_0 is the 1 x #Sigma_0
/// augmentation row, and B_{dim+1} is an empty #Sigma_dim x 0 matrix.
IntMatrix reduced_boundary(const SimplicialComplex& k, int d);

/// Rank of B_d with rank(B_0) = 0 and rank beyond the top dimension = 0.
std::size_t boundary_rank(const SimplicialComplex& k, int d);

enum class Field { rationals, gf2 };

/// Unreduced Betti numbers b_0..b_dim over the given field.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& k, Field field = Field::rationals);

/// Reduced Betti number at d (b_0 - 1 at d = 0 for a nonempty complex).
std::size_t reduced_betti(const SimplicialComplex& k, int d, Field field = Field::rationals);

/// All faces of the given simplex with exactly `size` vertices, in lexicographic order.
std::vector<Simplex> faces_of_size(const Simplex& s, std::size_t size);

}  // namespace cpx
