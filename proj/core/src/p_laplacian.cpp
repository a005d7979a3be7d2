#include "cpx/p_laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "cpx/error.hpp"
#include "cpx/exact_linalg.hpp"
#include "cpx/laplacians.hpp"
#include "cpx/numlin.hpp"

namespace cpx {

namespace {

constexpr double kGradTol = 1e-10;
constexpr std::size_t kMaxIter = 4000;

struct Entry {
  std::size_t row, col;
  double val;
};

struct Operator {
  std::size_t rows = 0, cols = 0;
  std::vector<Entry> entries;
  std::vector<double> w;
  double p = 2.0;
};

double psi(double x, double q) { return x == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(x), q - 1.0), x); }

Operator make_operator(const PRayleighProblem& prob) {
  if (prob.complex == nullptr) throw PreconditionError("p-Rayleigh problem has no complex");
  if (!(prob.p >= 1.0) || !std::isfinite(prob.p)) throw PreconditionError("p-Rayleigh problem needs finite p >= 1");
  const SimplicialComplex& k = *prob.complex;
  const int d = prob.dim;
  if (d < 0 || d > k.dim()) throw DimensionError("p-Rayleigh: dimension out of range");
  const IntMatrix m = prob.direction == Direction::up ? coboundary(k, d) : incidence_matrix(k, d);
  Operator op;
  op.rows = m.rows();
  op.cols = k.count(d);
  op.p = prob.p;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) op.entries.push_back({r, c, static_cast<double>(m(r, c))});
  op.w.assign(op.cols, 1.0);
  if (prob.normalized && prob.direction == Direction::up) {
    const auto& deg = k.up_degrees(d);
    for (std::size_t i = 0; i < op.cols; ++i) {
      if (deg[i] == 0) throw DegenerateDegree("normalized p-Rayleigh quotient: a d-simplex has up-degree 0");
      op.w[i] = static_cast<double>(deg[i]);
    }
  }
  return op;
}

std::vector<double> mul(const Operator& op, std::span<const double> f) {
  std::vector<double> y(op.rows, 0.0);
  for (const auto& e : op.entries) y[e.row] += e.val * f[e.col];
  return y;
}

std::vector<double> mul_t(const Operator& op, std::span<const double> y) {
  std::vector<double> x(op.cols, 0.0);
  for (const auto& e : op.entries) x[e.col] += e.val * y[e.row];
  return x;
}

double pnorm_p(std::span<const double> v, double p) {
  double s = 0;
  for (double x : v) s += std::pow(std::abs(x), p);
  return s;
}

double wnorm_p(const Operator& op, std::span<const double> f) {
  double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += op.w[i] * std::pow(std::abs(f[i]), op.p);
  return s;
}

double rayleigh(const Operator& op, std::span<const double> f) {
  const double den = wnorm_p(op, f);
  if (!(den > 0)) throw NumericInput("p-Rayleigh quotient of the zero cochain");
  return pnorm_p(mul(op, f), op.p) / den;
}

std::vector<double> gradient(const Operator& op, std::span<const double> f) {
  const auto y = mul(op, f);
  const double num = pnorm_p(y, op.p);
  const double den = wnorm_p(op, f);
  if (!(den > 0)) throw NumericInput("p-Rayleigh gradient at the zero cochain");
  std::vector<double> py(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) py[i] = psi(y[i], op.p);
  auto g = mul_t(op, py);
  const double r = num / den;
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = op.p * (g[i] - r * op.w[i] * psi(f[i], op.p)) / den;
  return g;
}

void normalize(const Operator& op, std::vector<double>& f) {
  const double s = std::pow(wnorm_p(op, f), 1.0 / op.p);
  for (auto& x : f) x /= s;
}

double l2(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Deterministic uniform in [-1, 1).
struct Uniform {
  std::mt19937_64 rng;
  explicit Uniform(std::uint64_t seed) : rng(seed) {}
  double operator()() { return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0; }
};

struct Ascent {
  double value = -1.0;
  std::vector<double> f;
  bool converged = false;
};

Ascent ascend(const Operator& op, std::vector<double> f) {
  Ascent out;
  normalize(op, f);
  double r = rayleigh(op, f);
  const double qstar = op.p / (op.p - 1.0);
  double step = 1.0;
  std::size_t stall = 0;
  for (std::size_t it = 0; it < kMaxIter; ++it) {
    const auto g = gradient(op, f);
    const double gn = l2(g);
    if (gn <= kGradTol) {
      out.converged = true;
      break;
    }
    const double before = r;
    // Nonlinear power step: stationarity reads M^T psi_p(M f) = lambda w psi_p(f).
    {
      const auto y = mul(op, f);
      std::vector<double> py(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) py[i] = psi(y[i], op.p);
      auto z = mul_t(op, py);
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = psi(z[i] / op.w[i], qstar);
      if (wnorm_p(op, z) > 0) {
        normalize(op, z);
        const double rz = rayleigh(op, z);
        if (rz > r) {
          f = std::move(z);
          r = rz;
        }
      }
    }
    if (r == before) {
      double t = step;
      bool moved = false;
      for (int bt = 0; bt < 80; ++bt, t *= 0.5) {
        std::vector<double> c(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) c[i] = f[i] + t * g[i];
        if (!(wnorm_p(op, c) > 0)) continue;
        normalize(op, c);
        const double rc = rayleigh(op, c);
        if (rc > r) {
          f = std::move(c);
          r = rc;
          moved = true;
          break;
        }
      }
      if (!moved) break;
      step = std::min(1e6, 2.0 * t);
    }
    stall = (r - before <= 1e-16 * std::max(1.0, std::abs(r))) ? stall + 1 : 0;
    if (stall >= 50) break;
  }
  out.value = r;
  out.f = std::move(f);
  return out;
}

std::vector<double> linear_top_start(const Operator& op) {
  // Top eigenvector of W^{-1/2} M^T M W^{-1/2}, mapped back by W^{-1/2}.
  SymmetricMatrix a(op.cols);
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(op.rows);
  for (const auto& e : op.entries) rows[e.row].emplace_back(e.col, e.val);
  for (const auto& row : rows)
    for (const auto& [i, vi] : row)
      for (const auto& [j, vj] : row)
        if (i <= j) a.add(i, j, vi * vj / std::sqrt(op.w[i] * op.w[j]));
  const auto dec = eigen_symmetric(a);
  auto v = dec.eigenvectors.back();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] /= std::sqrt(op.w[i]);
  return v;
}

}  // namespace

double PRayleighProblem::conjugate() const {
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return p / (p - 1.0);
}

double p_rayleigh(const PRayleighProblem& prob, std::span<const double> f) {
  const Operator op = make_operator(prob);
  if (f.size() != op.cols) throw DimensionError("p-Rayleigh: cochain length mismatch");
  return rayleigh(op, f);
}

std::vector<double> p_rayleigh_gradient(const PRayleighProblem& prob, std::span<const double> f) {
  const Operator op = make_operator(prob);
  if (f.size() != op.cols) throw DimensionError("p-Rayleigh: cochain length mismatch");
  return gradient(op, f);
}

ExtremeEigenEstimate max_eig_p(const PRayleighProblem& prob, std::size_t restarts, std::uint64_t seed,
                               std::size_t threads) {
  if (!(prob.p > 1.0)) throw PreconditionError("max_eig_p needs p > 1");
  const Operator op = make_operator(prob);
  if (op.cols == 0) throw DimensionError("max_eig_p: no d-simplices");
  restarts = std::max<std::size_t>(restarts, 1);
  std::vector<Ascent> runs(restarts);
  auto run = [&](std::size_t i) {
    std::vector<double> f;
    if (i == 0) {
      f = linear_top_start(op);
    } else {
      Uniform u(seed * 0x9E3779B97F4A7C15ULL + i);
      f.resize(op.cols);
      for (auto& x : f) x = u();
    }
    if (!(wnorm_p(op, f) > 0)) f.assign(op.cols, 1.0);
    runs[i] = ascend(op, std::move(f));
  };
  threads = std::max<std::size_t>(1, std::min(threads, restarts));
  if (threads == 1) {
    for (std::size_t i = 0; i < restarts; ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < restarts; i += threads) run(i);
      });
    for (auto& th : pool) th.join();
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < restarts; ++i)
    if (runs[i].value > runs[best].value) best = i;
  ExtremeEigenEstimate est;
  est.argument = runs[best].f;
  est.value = rayleigh(op, est.argument);
  est.restarts = restarts;
  est.converged = runs[best].converged;
  return est;
}

double claim_ratio(double p, std::span<const double> x) {
  const double k = static_cast<double>(x.size());
  double sp = 0, s = 0, den = 0;
  for (double v : x) {
    sp += std::pow(std::abs(v), p);
    s += v;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) den += std::pow(std::abs(x[i] - x[j]), p);
  if (!(den > 0)) throw PreconditionError("claim ratio of a constant vector");
  return (std::pow(k, p - 1.0) * sp - std::pow(std::abs(s), p)) / den;
}

std::pair<double, double> estimate_claim_constants(double p, std::size_t k, std::size_t samples, std::uint64_t seed) {
  if (!(p > 1.0 && p <= 2.0)) throw PreconditionError("claim constants need 1 < p <= 2");
  if (k < 2) throw PreconditionError("claim constants need k >= 2");
  // Drops points whose pairwise spread is tiny next to their p-mass: there the
  // numerator cancels and the computed ratio is noise.
  const double kp = std::pow(static_cast<double>(k), p - 1.0);
  auto nonconstant = [&](const std::vector<double>& x) {
    double mass = 0, den = 0;
    for (double v : x) mass += std::pow(std::abs(v), p);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) den += std::pow(std::abs(x[i] - x[j]), p);
    return den > 0 && den >= 1e-4 * kp * mass;
  };
  std::vector<std::pair<double, std::vector<double>>> pool;
  auto consider = [&](const std::vector<double>& x) {
    if (nonconstant(x)) pool.emplace_back(claim_ratio(p, x), x);
  };

  // (a) lattice {-L..L}^k
  std::int64_t lat = 1;
  while (std::pow(static_cast<double>(2 * (lat + 1) + 1), static_cast<double>(k)) <= 20000.0) ++lat;
  std::vector<double> x(k, static_cast<double>(-lat));
  for (;;) {
    consider(x);
    std::size_t i = k;
    while (i > 0 && x[i - 1] == static_cast<double>(lat)) x[--i] = static_cast<double>(-lat);
    if (i == 0) break;
    x[i - 1] += 1.0;
  }
  // (b) random
  Uniform u(seed ^ 0xC1A1Bull);
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& v : x) v = u();
    consider(x);
  }
  // (c) pattern search from the extreme candidates
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  double lo = pool.front().first, hi = pool.back().first;
  const std::size_t seeds = std::min<std::size_t>(8, pool.size());
  for (int sense : {+1, -1}) {
    for (std::size_t s = 0; s < seeds; ++s) {
      auto cur = sense > 0 ? pool[s].second : pool[pool.size() - 1 - s].second;
      double val = claim_ratio(p, cur);
      for (double h = 0.25; h > 1e-7; h *= 0.5) {
        bool improved = true;
        while (improved) {
          improved = false;
          for (std::size_t i = 0; i < k; ++i)
            for (double dir : {h, -h}) {
              auto c = cur;
              c[i] += dir;
              double scale = 0;
              for (double v : c) scale = std::max(scale, std::abs(v));
              if (scale > 0)
                for (auto& v : c) v /= scale;
              if (!nonconstant(c)) continue;
              const double v = claim_ratio(p, c);
              if (sense > 0 ? v < val : v > val) {
                cur = std::move(c);
                val = v;
                improved = true;
              }
            }
        }
      }
      lo = std::min(lo, val);
      hi = std::max(hi, val);
    }
  }
  return {lo, hi};
}

VerificationReport verify_gap_p(const SimplicialComplex& k, int d, double p, const POptions& opt) {
  if (!(p > 1.0 && p <= 2.0)) throw PreconditionError("verify_gap_p needs 1 < p <= 2");
  VerificationReport rep("p-gap");
  const Rational h1 = h_k_sigma(k, d, 1, opt.threads, opt.grid.limits).value;
  const double h = h1.to_double();
  const std::string at = " (p=" + fmt(p) + ", d=" + std::to_string(d) + ")";
  double c = 0, big_c = 0, lambda = 0;
  std::string cdesc, lam_desc;
  if (p == 2.0) {
    const Rational cr(1, 2 * (d + 1));
    c = cr.to_double();
    big_c = 2.0;
    cdesc = "c = " + cr.str() + ", C = 2 (m = M = 1)";
    lambda = eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::normalized})).back();
    lam_desc = "lambda_n from the linear eigensolver";
  } else {
    const auto [m_est, big_m_est] = estimate_claim_constants(p, static_cast<std::size_t>(d + 2), opt.samples, opt.seed);
    const double m = m_est / 2.0, big_m = 2.0 * big_m_est;
    c = m * std::pow(2.0, p - 1.0) / (std::pow(p, p) * std::pow(d + 1.0, p - 1.0));
    big_c = std::pow(2.0, p - 1.0) * big_m;
    cdesc = "m_est = " + fmt(m_est) + ", M_est = " + fmt(big_m_est) +
            ", margins x1/2 and x2; m_est is a sampled minimum, the infimum over all of R^k is 0 for p < 2";
    PRayleighProblem prob{&k, d, p, Direction::up, true};
    const auto est = max_eig_p(prob, opt.restarts, opt.seed, opt.threads);
    lambda = est.value;
    lam_desc = std::string("lambda_n estimated by ascent") + (est.converged ? "" : " (not converged)");
  }
  const double gap = std::pow(d + 2.0, p - 1.0) - lambda;
  const double lhs = c * std::pow(h, p);
  const double rhs = big_c * h;
  rep.note("constants" + at, fmt(c), fmt(big_c), cdesc);
  rep.expect("c h_1^p <= (d+2)^{p-1} - lambda_n" + at, lhs <= gap + 1e-8, fmt(lhs), fmt(gap),
             "h_1 = " + h1.str() + "; " + lam_desc);
  rep.expect("(d+2)^{p-1} - lambda_n <= C h_1" + at, gap <= rhs + 1e-8, fmt(gap), fmt(rhs),
             "h_1 = " + h1.str() + "; " + lam_desc);
  return rep;
}

VerificationReport verify_p_duality(const SimplicialComplex& k, int d, double p, const POptions& opt) {
  if (!(p > 1.0) || !std::isfinite(p)) throw PreconditionError("p-duality needs 1 < p < inf");
  if (d + 1 > k.dim()) throw DimensionError("p-duality needs d+1 <= dim");
  VerificationReport rep("p-duality");
  const double ps = p / (p - 1.0);
  const std::string name = "lambda_max(L^up_{" + std::to_string(d) + ",p})^{1/p} = lambda_max(L^down_{" +
                           std::to_string(d + 1) + ",p*})^{1/p*}, p=" + fmt(p);
  if (p == 2.0) {
    const double a =
        eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::unnormalized})).back();
    const double b =
        eigenvalues_symmetric(assemble_laplacian(k, {d + 1, LaplacianKind::down, Normalization::unnormalized})).back();
    rep.expect(name, std::abs(a - b) <= 1e-8, fmt(std::sqrt(a)), fmt(std::sqrt(b)), "linear eigensolvers");
    return rep;
  }
  const auto up = max_eig_p({&k, d, p, Direction::up, false}, opt.restarts, opt.seed, opt.threads);
  const auto down = max_eig_p({&k, d + 1, ps, Direction::down, false}, opt.restarts, opt.seed, opt.threads);
  const double a = std::pow(up.value, 1.0 / p);
  const double b = std::pow(down.value, 1.0 / ps);
  const double rel = std::abs(a - b) / std::max({a, b, 1e-300});
  rep.expect(name, rel <= 1e-4, fmt(a), fmt(b), "relative deviation " + fmt(rel) + ", p* = " + fmt(ps));
  return rep;
}

namespace {

// Solves the small dense SPD system a x = b by Gaussian elimination with partial pivoting.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

// Lower bound on min_y ||x + G y||_{p,w}^p from a dual vector u with G^T u = 0.
double quotient_lower_bound(std::span<const double> x, const IntMatrix& g, const IntMatrix& ann,
                            std::span<const double> w, double p) {
  const std::size_t n = x.size();
  std::vector<double> z(x.begin(), x.end());
  // Approximate primal minimizer by gradient descent over y.
  if (g.cols() > 0) {
    std::vector<double> y(g.cols(), 0.0);
    auto objective = [&](const std::vector<double>& yy, std::vector<double>& zz) {
      for (std::size_t i = 0; i < n; ++i) {
        zz[i] = x[i];
        for (std::size_t j = 0; j < g.cols(); ++j) zz[i] += static_cast<double>(g(i, j)) * yy[j];
      }
      double s = 0;
      for (std::size_t i = 0; i < n; ++i) s += w[i] * std::pow(std::abs(zz[i]), p);
      return s;
    };
    double val = objective(y, z);
    double t = 1.0;
    for (int it = 0; it < 3000; ++it) {
      std::vector<double> gy(g.cols(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double gi = p * w[i] * psi(z[i], p);
        for (std::size_t j = 0; j < g.cols(); ++j) gy[j] += static_cast<double>(g(i, j)) * gi;
      }
      if (l2(gy) <= 1e-13) break;
      bool moved = false;
      std::vector<double> zc(n);
      for (int bt = 0; bt < 60; ++bt, t *= 0.5) {
        std::vector<double> yc(y);
        for (std::size_t j = 0; j < y.size(); ++j) yc[j] -= t * gy[j];
        const double vc = objective(yc, zc);
        if (vc < val) {
          y = std::move(yc);
          z = zc;
          val = vc;
          moved = true;
          break;
        }
      }
      if (!moved) break;
      t *= 2.0;
    }
  }
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = w[i] * psi(z[i], p);
  if (g.cols() > 0) {
    // Project onto ker G^T = row space of the annihilator.
    const std::size_t r = ann.rows();
    if (r == 0) return 0.0;
    std::vector<std::vector<double>> gram(r, std::vector<double>(r, 0.0));
    std::vector<double> rhs(r, 0.0);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t i = 0; i < n; ++i) rhs[a] += static_cast<double>(ann(a, i)) * u[i];
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t i = 0; i < n; ++i) gram[a][b] += static_cast<double>(ann(a, i) * ann(b, i));
    }
    const auto coef = solve_dense(gram, rhs);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = 0.0;
      for (std::size_t a = 0; a < r; ++a) u[i] += coef[a] * static_cast<double>(ann(a, i));
    }
  }
  const double ps = p / (p - 1.0);
  double dual = 0, pair = 0;
  for (std::size_t i = 0; i < n; ++i) {
    dual += std::pow(w[i], 1.0 - ps) * std::pow(std::abs(u[i]), ps);
    pair += u[i] * x[i];
  }
  dual = std::pow(dual, 1.0 / ps);
  if (!(dual > 0)) return 0.0;
  return std::pow(std::abs(pair) / dual, p);
}

}  // namespace

VerificationReport verify_rough_cheeger_p(const SimplicialComplex& k, int d, double p, const POptions& opt) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("rough Cheeger (p) needs finite p >= 1");
  if (p == 2.0) {
    VerificationReport rep("rough-cheeger-p");
    rep.merge(verify_rough_cheeger(k, d, opt.grid));
    return rep;
  }
  VerificationReport rep("rough-cheeger-p");
  const auto& deg = k.up_degrees(d);
  if (deg.empty() || std::any_of(deg.begin(), deg.end(), [](std::int64_t x) { return x == 0; }))
    throw PreconditionError("rough Cheeger bounds need deg > 0 on every d-simplex");
  const CheegerReport hr = h_sigma_d(k, d, opt.grid);
  const double h = hr.value.to_double();
  const std::string at = " on Sigma_" + std::to_string(d) + ", p=" + fmt(p);

  if (p == 1.0) {
    const D3Certificate cert = certify_d3(k, d, hr);
    rep.expect("lambda_{I_d}(Delta^up_{d,1}) = h" + at, cert.certified, cert.ratio.str(), hr.value.str(),
               cert.certified ? "subgradient certificate" : cert.reason);
    return rep;
  }

  std::int64_t vol = 0;
  for (auto x : deg) vol += x;
  const IntMatrix g = reduced_boundary(k, d).transposed();
  const IntMatrix ann = annihilator(g);
  const IntMatrix delta = coboundary(k, d);
  std::vector<double> w(deg.begin(), deg.end());

  std::vector<std::vector<double>> candidates;
  if (!hr.representative.empty()) {
    std::vector<double> x;
    for (const auto& q : hr.representative) x.push_back(q.to_double());
    candidates.push_back(std::move(x));
  } else if (hr.witness.size() == w.size()) {
    candidates.emplace_back(hr.witness.begin(), hr.witness.end());
  }
  {
    const auto dec = eigen_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::normalized}));
    const std::size_t idx = first_nontrivial_index(k, d);
    if (idx <= dec.eigenvectors.size()) {
      auto v = dec.eigenvectors[idx - 1];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] /= std::sqrt(w[i]);
      candidates.push_back(std::move(v));
    }
  }
  double upper = std::numeric_limits<double>::infinity();
  for (const auto& x : candidates) {
    double num = 0;
    for (std::size_t r = 0; r < delta.rows(); ++r) {
      double s = 0;
      for (std::size_t c = 0; c < delta.cols(); ++c) s += static_cast<double>(delta(r, c)) * x[c];
      num += std::pow(std::abs(s), p);
    }
    const double lb = quotient_lower_bound(x, g, ann, w, p);
    if (lb > 1e-300) upper = std::min(upper, num / lb);
  }

  const double lo_side = std::pow(h, p) / std::pow(static_cast<double>(k.count(d + 1)), p - 1.0);
  const double hi_side = std::pow(static_cast<double>(vol), p - 1.0) * h;
  const std::string detail = "h = " + hr.value.str() + "; lambda_{I_d} <= " + fmt(upper) + " by weak duality";
  if (h == 0.0) {
    rep.expect("h = 0 forces lambda_{I_d} = 0" + at, upper <= 1e-9, fmt(upper), "0", detail);
    return rep;
  }
  rep.note("h^p/#Sigma_{d+1}^{p-1} <= lambda_{I_d}" + at, fmt(lo_side), fmt(upper),
           "no certified lower bound on lambda_{I_d} for p outside {1,2}");
  if (upper <= hi_side + 1e-9)
    rep.expect("lambda_{I_d} <= vol^{p-1} h" + at, true, fmt(upper), fmt(hi_side), detail);
  else
    rep.note("lambda_{I_d} <= vol^{p-1} h" + at, fmt(upper), fmt(hi_side), detail + "; bracket does not resolve");
  return rep;
}

}  // namespace cpx
