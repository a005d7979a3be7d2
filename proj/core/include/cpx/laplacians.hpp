#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cpx/complex.hpp"
#include "cpx/numlin.hpp"
#include "cpx/report.hpp"

namespace cpx {

enum class LaplacianKind { up, down, full };
enum class Normalization { unnormalized, normalized };

struct LaplacianSpec {
  int dim = 0;
  LaplacianKind kind = LaplacianKind::full;
  Normalization normalization = Normalization::unnormalized;
};

std::string describe(const LaplacianSpec& spec);
LaplacianKind parse_kind(const std::string& s);

/// up = B_{d+1} B_{d+1}^T, down = B_d^T B_d, full = up + down (unnormalized);
/// normalized up = D^{-1/2} B_{d+1} B_{d+1}^T D^{-1/2} with D the up-degree,
/// normalized down = B_d^T B_d / (d+1). Throws DegenerateDegree on a zero up-degree.
SymmetricMatrix assemble_laplacian(const SimplicialComplex& k, const LaplacianSpec& spec);

struct SpectralReport {
  LaplacianSpec spec;
  std::vector<double> eigenvalues;
  std::size_t zero_multiplicity = 0;
  std::size_t first_nontrivial_index = 0;  // I_d, 1-based
  std::size_t n = 0;
};

/// I_d = rank(B_d) + 1, where B_0 is the augmentation row (so I_0 = 2 when Sigma_0 is nonempty).
std::size_t first_nontrivial_index(const SimplicialComplex& k, int d);

SpectralReport spectral_report(const SimplicialComplex& k, const LaplacianSpec& spec);

/// Zero multiplicity of the full unnormalized L_d equals b_d, every d.
VerificationReport verify_eckmann(const SimplicialComplex& k);

/// Nonzero spectra of L_d^up and L_{d+1}^down agree as multisets.
VerificationReport verify_up_down_duality(const SimplicialComplex& k, int d);

/// Nonzero spectrum of L_d is the union of the nonzero up and down spectra.
VerificationReport verify_hodge_union(const SimplicialComplex& k, int d);

/// Spectrum of the normalized up-Laplacian lies in [0, d+2] and, for a pure
/// complex with d < dim, the multiplicity of 0 is at least d+1.
VerificationReport verify_normalized_range(const SimplicialComplex& k, int d);

}  // namespace cpx
