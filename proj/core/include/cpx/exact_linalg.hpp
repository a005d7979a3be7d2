#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cpx/rational.hpp"

namespace cpx {

/// Dense row-major integer matrix. Small by assumption; no expression templates.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<std::int64_t> column(std::size_t c) const;

  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Integer product; throws std::invalid_argument on shape mismatch.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// y = A x for an integer vector.
std::vector<std::int64_t> apply(const IntMatrix& a, std::span<const std::int64_t> x);

/// Exact rank over the rationals (fraction-free elimination on big integers).
std::size_t rank_rational(const IntMatrix& a);

/// Rank over GF(2) (entries taken mod 2).
std::size_t rank_gf2(const IntMatrix& a);

/// Basis of the right kernel {x : A x = 0} as the columns of the result.
/// Each basis vector is a primitive integer vector (gcd of entries is 1).
IntMatrix integer_kernel(const IntMatrix& a);

/// Rows spanning the orthogonal complement of the column space of `a`.
/// Two vectors x, y differ by an element of col(a) iff P x == P y.
IntMatrix annihilator(const IntMatrix& a);

/// Whether x lies in the rational column space of `a`.
bool in_column_space(const IntMatrix& a, std::span<const std::int64_t> x);

/// Divides by the gcd of the entries and makes the first nonzero entry positive.
/// Returns the scale removed (positive gcd times the sign flip), or 0 for the zero vector.
std::int64_t make_primitive(std::vector<std::int64_t>& v);

}  // namespace cpx
