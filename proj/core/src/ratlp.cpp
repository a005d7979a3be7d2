#include "cpx/ratlp.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>

namespace cpx {

namespace {

using BigQ = boost::multiprecision::cpp_rational;

template <class T>
struct Tableau {
  // rows_[i] holds constraint i; the last entry is the right-hand side.
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> basis;
  std::vector<T> cost;  // reduced costs, last entry is -objective
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    auto& pr = rows[r];
    const T inv = T(1) / pr[c];
    for (auto& v : pr)
      if (v != T(0)) v *= inv;
    auto eliminate = [&](std::vector<T>& row) {
      const T f = row[c];
      if (f == T(0)) return;
      for (std::size_t k = 0; k <= ncols; ++k)
        if (pr[k] != T(0)) row[k] -= f * pr[k];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(cost);
    basis[r] = c;
  }

  void price(const std::vector<T>& c) {
    cost.assign(ncols + 1, T(0));
    for (std::size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const T cb = cost[basis[i]];
      if (cb == T(0)) continue;
      for (std::size_t k = 0; k <= ncols; ++k) cost[k] -= cb * rows[i][k];
    }
  }

  // Returns false when unbounded. `allowed` masks columns that may enter.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (allowed[j] && cost[j] < T(0)) {
          enter = j;
          break;
        }
      if (enter == ncols) return true;
      std::size_t leave = rows.size();
      T best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const T& a = rows[i][enter];
        if (a <= T(0)) continue;
        const T ratio = rows[i][ncols] / a;
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

template <class T>
struct Solved {
  LpStatus status;
  T value;
  std::vector<T> x;
};

// Standard form: minimize c.x, A x = b, x >= 0.
template <class T>
Solved<T> simplex(const std::vector<std::vector<T>>& a, const std::vector<T>& b, const std::vector<T>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  Tableau<T> t;
  t.ncols = n + m;
  t.rows.assign(m, std::vector<T>(n + m + 1, T(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < T(0);
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? T(-a[i][j]) : a[i][j];
    t.rows[i][n + i] = T(1);
    t.rows[i][n + m] = flip ? T(-b[i]) : b[i];
    t.basis[i] = n + i;
  }

  std::vector<T> phase1(n + m, T(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = T(1);
  t.price(phase1);
  std::vector<bool> all(n + m, true);
  t.optimize(all);
  if (t.cost[n + m] != T(0)) return {LpStatus::infeasible, T(0), {}};

  // Drive artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (t.rows[i][j] != T(0)) {
        col = j;
        break;
      }
    if (col == n) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, col);
    ++i;
  }

  std::vector<T> phase2(n + m, T(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  t.price(phase2);
  std::vector<bool> original(n + m, false);
  for (std::size_t j = 0; j < n; ++j) original[j] = true;
  if (!t.optimize(original)) return {LpStatus::unbounded, T(0), {}};

  std::vector<T> x(n, T(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) x[t.basis[i]] = t.rows[i][n + m];
  T value(0);
  for (std::size_t j = 0; j < n; ++j) value += c[j] * x[j];
  return {LpStatus::optimal, value, std::move(x)};
}

BigQ to_big(const Rational& r) { return BigQ(r.num()) / BigQ(r.den()); }

Rational from_big(const BigQ& q) {
  using boost::multiprecision::cpp_int;
  const cpp_int n = numerator(q);
  const cpp_int d = denominator(q);
  const cpp_int lim = cpp_int(std::numeric_limits<std::int64_t>::max());
  if (abs(n) > lim || d > lim) throw std::overflow_error("LP solution does not fit 64-bit rationals");
  return Rational(n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>());
}

// Expands free variables into (plus, minus) pairs.
struct Expanded {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> c;
  std::vector<std::size_t> plus;   // column of x_j (or its positive part)
  std::vector<std::size_t> minus;  // column of the negative part, or npos
};

Expanded expand(const RationalLP& lp) {
  const std::size_t n = lp.objective.size();
  Expanded e;
  e.plus.resize(n);
  e.minus.assign(n, static_cast<std::size_t>(-1));
  std::size_t col = 0;
  for (std::size_t j = 0; j < n; ++j) {
    e.plus[j] = col++;
    if (!lp.free.empty() && lp.free[j]) e.minus[j] = col++;
  }
  e.c.assign(col, Rational(0));
  e.a.assign(lp.a.size(), std::vector<Rational>(col, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    e.c[e.plus[j]] = lp.objective[j];
    if (e.minus[j] != static_cast<std::size_t>(-1)) e.c[e.minus[j]] = -lp.objective[j];
  }
  for (std::size_t i = 0; i < lp.a.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e.a[i][e.plus[j]] = lp.a[i][j];
      if (e.minus[j] != static_cast<std::size_t>(-1)) e.a[i][e.minus[j]] = -lp.a[i][j];
    }
  return e;
}

}  // namespace

LpSolution solve_lp(const RationalLP& lp) {
  const std::size_t n = lp.objective.size();
  if (lp.a.size() != lp.b.size()) throw std::invalid_argument("solve_lp: row count mismatch");
  for (const auto& row : lp.a)
    if (row.size() != n) throw std::invalid_argument("solve_lp: column count mismatch");
  if (!lp.free.empty() && lp.free.size() != n) throw std::invalid_argument("solve_lp: free mask size mismatch");

  const Expanded e = expand(lp);
  LpSolution out;
  std::vector<Rational> xs;
  try {
    auto s = simplex<Rational>(e.a, lp.b, e.c);
    out.status = s.status;
    out.value = s.value;
    xs = std::move(s.x);
  } catch (const std::overflow_error&) {
    std::vector<std::vector<BigQ>> a(e.a.size());
    for (std::size_t i = 0; i < e.a.size(); ++i)
      for (const auto& v : e.a[i]) a[i].push_back(to_big(v));
    std::vector<BigQ> b, c;
    for (const auto& v : lp.b) b.push_back(to_big(v));
    for (const auto& v : e.c) c.push_back(to_big(v));
    auto s = simplex<BigQ>(a, b, c);
    out.used_bignum = true;
    out.status = s.status;
    if (s.status == LpStatus::optimal) {
      out.value = from_big(s.value);
      for (const auto& v : s.x) xs.push_back(from_big(v));
    }
  }
  if (out.status != LpStatus::optimal) return out;
  out.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.x[j] = xs[e.plus[j]];
    if (e.minus[j] != static_cast<std::size_t>(-1)) out.x[j] -= xs[e.minus[j]];
  }
  return out;
}

Rational weighted_l1(std::span<const Rational> x, std::span<const std::int64_t> weights) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += abs(x[i]) * Rational(weights[i]);
  return s;
}

QuotientNorm quotient_norm(std::span<const Rational> x, const IntMatrix& g, std::span<const std::int64_t> weights) {
  const std::size_t n = x.size();
  if (weights.size() != n) throw std::invalid_argument("quotient_norm: weight size mismatch");
  if (g.cols() == 0 || g.rows() == 0) return {weighted_l1(x, weights), {x.begin(), x.end()}};
  if (g.rows() != n) throw std::invalid_argument("quotient_norm: subspace shape mismatch");

  // Variables: p (n), q (n), w (k free). Rows: p - q - G w = x.
  const std::size_t k = g.cols();
  RationalLP lp;
  lp.objective.assign(2 * n + k, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    lp.objective[i] = weights[i];
    lp.objective[n + i] = weights[i];
  }
  lp.free.assign(2 * n + k, false);
  for (std::size_t j = 0; j < k; ++j) lp.free[2 * n + j] = true;
  lp.a.assign(n, std::vector<Rational>(2 * n + k, Rational(0)));
  lp.b.assign(x.begin(), x.end());
  for (std::size_t i = 0; i < n; ++i) {
    lp.a[i][i] = 1;
    lp.a[i][n + i] = -1;
    for (std::size_t j = 0; j < k; ++j) lp.a[i][2 * n + j] = -g(i, j);
  }
  const LpSolution s = solve_lp(lp);
  if (s.status != LpStatus::optimal) throw std::logic_error("quotient_norm: LP not optimal");
  QuotientNorm out{s.value, std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) out.representative[i] = s.x[i] - s.x[n + i];
  return out;
}

QuotientNorm quotient_norm(std::span<const std::int64_t> x, const IntMatrix& g, std::span<const std::int64_t> weights) {
  std::vector<Rational> xr(x.begin(), x.end());
  return quotient_norm(xr, g, weights);
}

std::optional<QuotientNorm> filling_norm(const IntMatrix& d, std::span<const std::int64_t> y,
                                          std::span<const std::int64_t> weights) {
  const std::size_t n = d.cols();
  const std::size_t m = d.rows();
  if (y.size() != m || weights.size() != n) throw std::invalid_argument("filling_norm: shape mismatch");
  // Variables p, q >= 0 with D(p - q) = y.
  RationalLP lp;
  lp.objective.assign(2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) lp.objective[i] = lp.objective[n + i] = weights[i];
  lp.a.assign(m, std::vector<Rational>(2 * n, Rational(0)));
  lp.b.assign(y.begin(), y.end());
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      lp.a[r][c] = d(r, c);
      lp.a[r][n + c] = -d(r, c);
    }
  const LpSolution s = solve_lp(lp);
  if (s.status == LpStatus::infeasible) return std::nullopt;
  if (s.status != LpStatus::optimal) throw std::logic_error("filling_norm: LP unbounded");
  QuotientNorm out{s.value, std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) out.representative[i] = s.x[i] - s.x[n + i];
  return out;
}

Certificate l1_orthogonality_certificate(std::span<const Rational> x, const IntMatrix& g,
                                         std::span<const std::int64_t> weights) {
  const std::size_t n = x.size();
  if (weights.size() != n) throw std::invalid_argument("certificate: weight size mismatch");
  Certificate cert;
  if (g.cols() == 0 || g.rows() == 0) {
    cert.feasible = true;
    cert.u.resize(n);
    for (std::size_t i = 0; i < n; ++i) cert.u[i] = Rational(weights[i] * x[i].sign());
    return cert;
  }
  if (g.rows() != n) throw std::invalid_argument("certificate: subspace shape mismatch");

  // Fixed coordinates contribute a constant; each free coordinate is u_i = s_i - w_i
  // with 0 <= s_i <= 2 w_i (slack t_i makes the upper bound an equality).
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < n; ++i)
    if (x[i].is_zero()) open.push_back(i);
  const std::size_t f = open.size();
  const std::size_t k = g.cols();
  RationalLP lp;
  lp.objective.assign(2 * f, Rational(0));
  lp.a.assign(k + f, std::vector<Rational>(2 * f, Rational(0)));
  lp.b.assign(k + f, Rational(0));
  for (std::size_t j = 0; j < k; ++j) {
    Rational rhs(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (g(i, j) == 0) continue;
      if (!x[i].is_zero())
        rhs -= Rational(g(i, j) * weights[i] * x[i].sign());
      else
        rhs += Rational(g(i, j) * weights[i]);
    }
    for (std::size_t t = 0; t < f; ++t) lp.a[j][t] = g(open[t], j);
    lp.b[j] = rhs;
  }
  for (std::size_t t = 0; t < f; ++t) {
    lp.a[k + t][t] = 1;
    lp.a[k + t][f + t] = 1;
    lp.b[k + t] = Rational(2 * weights[open[t]]);
  }
  const LpSolution s = solve_lp(lp);
  if (s.status != LpStatus::optimal) return cert;
  cert.feasible = true;
  cert.u.resize(n);
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i].is_zero())
      cert.u[i] = Rational(weights[i] * x[i].sign());
    else
      cert.u[i] = s.x[t++] - Rational(weights[i]);
  }
  return cert;
}

}  // namespace cpx
