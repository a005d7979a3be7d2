#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cpx {

/// Dense symmetric matrix; writes through set() keep both triangles equal.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }
  void add(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] += v;
    if (i != j) a_[j * n_ + i] += v;
  }

  double frobenius_norm() const;
  double inf_norm() const;
  double trace() const;
  std::vector<double> apply(std::span<const double> x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;                 // ascending
  std::vector<std::vector<double>> eigenvectors;   // eigenvectors[i] pairs with eigenvalues[i]
  std::size_t sweeps = 0;
};

inline constexpr double kZeroTol = 1e-8;
inline constexpr double kResidualTol = 1e-9;

/// Cyclic Jacobi. Eigenvectors are sign-normalized (first component with
/// |v| > 1e-12 is positive); equal eigenvalues are ordered lexicographically by vector.
/// Throws NumericInput on non-finite entries.
EigenDecomposition eigen_symmetric(const SymmetricMatrix& a);

/// Eigenvalues only (same algorithm, no tie ordering work).
std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& a);

std::size_t multiplicity_of(std::span<const double> eigenvalues, double value, double tol = kZeroTol);
inline std::size_t multiplicity_of(const EigenDecomposition& dec, double value, double tol = kZeroTol) {
  return multiplicity_of(dec.eigenvalues, value, tol);
}

/// max_i ||A v_i - lambda_i v_i||_inf.
double max_residual(const SymmetricMatrix& a, const EigenDecomposition& dec);

/// Nonzero entries (|x| > tol) of an ascending spectrum.
std::vector<double> nonzero_part(std::span<const double> eigenvalues, double tol = kZeroTol);

/// Sorted multisets equal element-wise within tol (sizes must match).
bool spectra_match(std::span<const double> a, std::span<const double> b, double tol = kZeroTol);

}  // namespace cpx
