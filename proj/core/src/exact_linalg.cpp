#include "cpx/exact_linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>

namespace cpx {

namespace mp = boost::multiprecision;

std::vector<std::int64_t> IntMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::vector<std::int64_t> apply(const IntMatrix& a, std::span<const std::int64_t> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("apply: shape mismatch");
  std::vector<std::int64_t> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::int64_t acc = 0;
    const auto row = a.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

using BigMatrix = std::vector<std::vector<mp::cpp_int>>;

BigMatrix to_big(const IntMatrix& a) {
  BigMatrix m(a.rows(), std::vector<mp::cpp_int>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  return m;
}

// Bareiss elimination in place; returns the pivot column of each pivot row.
std::vector<std::size_t> bareiss(BigMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  mp::cpp_int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Reduced row echelon form over the rationals, kept as integer rows:
// each pivot row is scaled so that its pivot divides nothing else; we only
// need the null space, so rows are normalized by their content.
struct Rref {
  std::vector<std::vector<mp::cpp_int>> rows;  // pivot rows, fully reduced
  std::vector<std::size_t> pivots;
};

mp::cpp_int content(const std::vector<mp::cpp_int>& v) {
  mp::cpp_int g = 0;
  for (const auto& x : v) g = gcd(g, mp::cpp_int(abs(x)));
  return g;
}

Rref rref(const IntMatrix& a) {
  BigMatrix m = to_big(a);
  const std::size_t cols = a.cols();
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const mp::cpp_int f = m[r][col];
      const mp::cpp_int p = m[row][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] = m[r][c] * p - m[row][c] * f;
      const auto g = content(m[r]);
      if (g > 1)
        for (auto& x : m[r]) x /= g;
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

}  // namespace

std::size_t rank_rational(const IntMatrix& a) {
  if (a.empty()) return 0;
  BigMatrix m = to_big(a);
  return bareiss(m, a.cols()).size();
}

std::size_t rank_gf2(const IntMatrix& a) {
  if (a.empty()) return 0;
  const std::size_t words = (a.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(a.rows(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if ((a(r, c) % 2) != 0) rows[r][c / 64] |= (std::uint64_t{1} << (c % 64));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t sel = rank;
    while (sel < rows.size() && !(rows[sel][c / 64] & bit)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][c / 64] & bit))
        for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
    }
    ++rank;
  }
  return rank;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) {
    IntMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    return id;
  }
  const Rref r = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  IntMatrix basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    // x_f = L, x_pivot(i) = -L * m[i][f] / m[i][pivot(i)], L = lcm of pivots.
    mp::cpp_int l = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const mp::cpp_int p = abs(r.rows[i][r.pivots[i]]);
      l = lcm(l, p);
    }
    std::vector<mp::cpp_int> v(n, 0);
    v[f] = l;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const auto& row = r.rows[i];
      v[r.pivots[i]] = -l * row[f] / row[r.pivots[i]];
    }
    const auto g = content(v);
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      const mp::cpp_int q = g > 0 ? mp::cpp_int(v[i] / g) : v[i];
      out[i] = q.convert_to<std::int64_t>();
    }
    make_primitive(out);
    for (std::size_t i = 0; i < n; ++i) basis(i, k) = out[i];
  }
  return basis;
}

IntMatrix annihilator(const IntMatrix& a) {
  // Orthogonal complement of col(a) is ker(a^T).
  if (a.cols() == 0) {
    IntMatrix id(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) id(i, i) = 1;
    return id;
  }
  return integer_kernel(a.transposed()).transposed();
}

bool in_column_space(const IntMatrix& a, std::span<const std::int64_t> x) {
  if (a.rows() != x.size()) throw std::invalid_argument("in_column_space: shape mismatch");
  if (a.cols() == 0) {
    for (auto v : x)
      if (v != 0) return false;
    return true;
  }
  IntMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = x[r];
  }
  return rank_rational(aug) == rank_rational(a);
}

std::int64_t make_primitive(std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) return 0;
  std::int64_t sign = 1;
  for (auto x : v)
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  const std::int64_t s = g * sign;
  for (auto& x : v) x /= s;
  return s;
}

}  // namespace cpx
