#include "cpx/numlin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cpx/error.hpp"

namespace cpx {

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymmetricMatrix::inf_norm() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n_; ++j) row += std::abs(a_[i * n_ + j]);
    best = std::max(best, row);
  }
  return best;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

std::vector<double> SymmetricMatrix::apply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += a_[i * n_ + j] * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

struct JacobiResult {
  std::vector<double> values;
  std::vector<double> vectors;  // column-major n x n
  std::size_t sweeps = 0;
};

JacobiResult jacobi(const SymmetricMatrix& m, bool want_vectors) {
  const std::size_t n = m.order();
  if (n == 0) throw NumericInput("eigen_symmetric: empty matrix");
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v)) throw NumericInput("eigen_symmetric: non-finite entry");
      a[i * n + j] = v;
    }
  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }
  const double target = 1e-12 * m.frobenius_norm();
  auto off = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };

  JacobiResult r;
  constexpr std::size_t kMaxSweeps = 100;
  while (off() > target && r.sweeps < kMaxSweeps) {
    ++r.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        if (want_vectors)
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
      }
  }
  r.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.values[i] = a[i * n + i];
  r.vectors = std::move(v);
  return r;
}

}  // namespace

EigenDecomposition eigen_symmetric(const SymmetricMatrix& a) {
  const std::size_t n = a.order();
  JacobiResult r = jacobi(a, true);
  EigenDecomposition dec;
  dec.sweeps = r.sweeps;
  std::vector<std::pair<double, std::vector<double>>> pairs;
  pairs.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = r.vectors[i * n + j];
    for (double x : col)
      if (std::abs(x) > 1e-12) {
        if (x < 0)
          for (double& y : col) y = -y;
        break;
      }
    pairs.emplace_back(r.values[j], std::move(col));
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& l, const auto& r2) { return l.first < r2.first; });
  // Clusters of equal eigenvalues get a lexicographic vector order.
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i + 1;
    while (j < pairs.size() && pairs[j].first - pairs[j - 1].first <= kZeroTol) ++j;
    std::sort(pairs.begin() + static_cast<std::ptrdiff_t>(i), pairs.begin() + static_cast<std::ptrdiff_t>(j),
              [](const auto& l, const auto& r2) { return l.second < r2.second; });
    i = j;
  }
  for (auto& [val, vec] : pairs) {
    dec.eigenvalues.push_back(val);
    dec.eigenvectors.push_back(std::move(vec));
  }
  // Keep the value list ascending even after the tie reordering.
  std::sort(dec.eigenvalues.begin(), dec.eigenvalues.end());
  return dec;
}

std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& a) {
  auto r = jacobi(a, false);
  std::sort(r.values.begin(), r.values.end());
  return r.values;
}

std::size_t multiplicity_of(std::span<const double> eigenvalues, double value, double tol) {
  return static_cast<std::size_t>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double x) { return std::abs(x - value) <= tol; }));
}

double max_residual(const SymmetricMatrix& a, const EigenDecomposition& dec) {
  double worst = 0.0;
  for (std::size_t i = 0; i < dec.eigenvalues.size(); ++i) {
    const auto av = a.apply(dec.eigenvectors[i]);
    for (std::size_t k = 0; k < av.size(); ++k)
      worst = std::max(worst, std::abs(av[k] - dec.eigenvalues[i] * dec.eigenvectors[i][k]));
  }
  return worst;
}

std::vector<double> nonzero_part(std::span<const double> eigenvalues, double tol) {
  std::vector<double> out;
  for (double x : eigenvalues)
    if (std::abs(x) > tol) out.push_back(x);
  return out;
}

bool spectra_match(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace cpx
