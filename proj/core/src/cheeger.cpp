#include "cpx/cheeger.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "cpx/error.hpp"
#include "cpx/laplacians.hpp"
#include "cpx/numlin.hpp"
#include "cpx/ratlp.hpp"

namespace cpx {

namespace {

constexpr double kIneqTol = 1e-8;

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

bool all_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t l1(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x < 0 ? -x : x;
  return s;
}

double rd(const Rational& r) { return r.to_double(); }

// ---- grid protocol --------------------------------------------------------

enum class Denominator { quotient, filling };
enum class Skip { in_subspace, zero_image };

struct GridSetup {
  std::string method;
  IntMatrix numerator;   // ratio numerator ||N x||_1
  IntMatrix excluded;    // columns span the excluded subspace
  IntMatrix projector;   // annihilator of `excluded`
  std::vector<std::int64_t> weights;
  Denominator denominator = Denominator::quotient;
  Skip skip = Skip::in_subspace;
};

struct SweepBest {
  bool found = false;
  Rational value;
  std::vector<std::int64_t> witness;
};

using RayCache = std::unordered_map<std::vector<std::int64_t>, Rational, VecHash>;

struct SparseColumn {
  std::vector<std::pair<std::size_t, std::int64_t>> entries;
};

std::vector<SparseColumn> sparse_columns(const IntMatrix& a) {
  std::vector<SparseColumn> cols(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0) cols[c].entries.emplace_back(r, a(r, c));
  return cols;
}

class GridSweeper {
 public:
  explicit GridSweeper(const GridSetup& s)
      : s_(s),
        n_(s.weights.size()),
        ncols_(sparse_columns(s.numerator)),
        pcols_(sparse_columns(s.projector)),
        moves_(sparse_columns(s.denominator == Denominator::filling
                                  ? integer_kernel(s.numerator.rows() ? s.numerator : IntMatrix(0, n_))
                                  : s.excluded)) {}

  // One pass over {-M..M}^n in lexicographic order; chunked on the leading coordinates.
  // x and -x have the same ratio, so only x whose first nonzero entry is negative are
  // evaluated; the lexicographically first minimizer is always among them.
  SweepBest sweep(std::int64_t m, std::size_t threads, std::vector<RayCache>& caches) const {
    const std::size_t lead = std::min<std::size_t>(n_, 2);
    const std::int64_t base = 2 * m + 1;
    std::size_t nchunks = 1;
    for (std::size_t i = 0; i < lead; ++i) nchunks *= static_cast<std::size_t>(base);
    threads = std::max<std::size_t>(1, std::min(threads, nchunks));
    if (caches.size() < threads) caches.resize(threads);

    std::vector<SweepBest> results(nchunks);
    std::atomic<std::size_t> next{0};
    auto worker = [&](std::size_t t) {
      SweepBest known;
      for (std::size_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) {
        std::vector<std::int64_t> x(n_, -m);
        std::size_t rest = c;
        for (std::size_t i = lead; i-- > 0;) {
          x[i] = -m + static_cast<std::int64_t>(rest % static_cast<std::size_t>(base));
          rest /= static_cast<std::size_t>(base);
        }
        bool live = true;
        for (std::size_t i = 0; i < lead; ++i)
          if (x[i] != 0) {
            live = x[i] < 0;
            break;
          }
        if (!live) continue;
        results[c] = run_chunk(x, lead, m, caches[t], known);
        if (results[c].found && (!known.found || results[c].value < known.value)) known = results[c];
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }
    SweepBest best;
    for (auto& r : results)
      if (r.found && (!best.found || r.value < best.value)) best = std::move(r);
    return best;
  }

 private:
  Rational evaluate(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y,
                    const std::vector<std::int64_t>& px, std::int64_t num, RayCache& cache) const {
    std::vector<std::int64_t> key = s_.denominator == Denominator::filling ? y : px;
    make_primitive(key);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    Rational denom;
    if (s_.denominator == Denominator::filling) {
      denom = filling_norm(s_.numerator, y, s_.weights)->value;
    } else {
      denom = quotient_norm(std::span<const std::int64_t>(x), s_.excluded, s_.weights).value;
    }
    // Cached per primitive key: the ratio is invariant under scaling of x.
    const Rational r = Rational(num) / denom;
    cache.emplace(std::move(key), r);
    return r;
  }

  // Greedy descent along +-moves; an upper bound for the denominator.
  std::int64_t descend(std::vector<std::int64_t> z, std::int64_t norm) const {
    const auto& w = s_.weights;
    for (std::size_t pass = 0; pass < 4 * n_ + 4; ++pass) {
      bool improved = false;
      for (const auto& mv : moves_)
        for (std::int64_t sgn : {1, -1}) {
          std::int64_t delta = 0;
          for (const auto& [i, v] : mv.entries) {
            const std::int64_t a = z[i], b = z[i] + sgn * v;
            delta += w[i] * ((b < 0 ? -b : b) - (a < 0 ? -a : a));
          }
          if (delta < 0) {
            for (const auto& [i, v] : mv.entries) z[i] += sgn * v;
            norm += delta;
            improved = true;
          }
        }
      if (!improved) break;
    }
    return norm;
  }

  SweepBest run_chunk(std::vector<std::int64_t> x, std::size_t lead, std::int64_t m, RayCache& cache,
                      const SweepBest& known) const {
    SweepBest best;
    const std::size_t n = n_;
    std::vector<std::int64_t> y = cpx::apply(s_.numerator, x);
    std::vector<std::int64_t> px = cpx::apply(s_.projector, x);
    bool leading_zero = true;
    for (std::size_t i = 0; i < lead; ++i) leading_zero = leading_zero && x[i] == 0;
    auto bump = [&](std::size_t i, std::int64_t by) {
      for (const auto& [r, v] : ncols_[i].entries) y[r] += by * v;
      for (const auto& [r, v] : pcols_[i].entries) px[r] += by * v;
    };
    for (;;) {
      // With an all-zero prefix the first nonzero entry lies in the tail.
      bool live = true;
      if (leading_zero) {
        for (std::size_t i = lead; i < n; ++i)
          if (x[i] != 0) {
            live = x[i] < 0;
            break;
          }
      }
      if (live) consider(x, y, px, cache, best, known);
      std::size_t i = n;
      while (i > lead) {
        --i;
        if (x[i] < m) {
          ++x[i];
          bump(i, 1);
          break;
        }
        x[i] = -m;
        bump(i, -2 * m);
        if (i == lead) return best;
      }
      if (n == lead) return best;
    }
  }

  void consider(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y,
                const std::vector<std::int64_t>& px, RayCache& cache, SweepBest& best, const SweepBest& known) const {
    if (s_.skip == Skip::zero_image ? all_zero(y) : all_zero(px)) return;
    const std::int64_t num = l1(y);
    std::int64_t wx = 0;
    for (std::size_t i = 0; i < n_; ++i) wx += s_.weights[i] * (x[i] < 0 ? -x[i] : x[i]);
    // The denominator never exceeds the norm of any representative, so num/norm is a lower bound.
    auto pruned = [&](std::int64_t norm) {
      if (norm <= 0) return false;
      const Rational lb(num, norm);
      return (best.found && !(lb < best.value)) || (known.found && known.value < lb);
    };
    if (pruned(wx)) return;
    if (!moves_.empty() && pruned(descend(x, wx))) return;
    const Rational r = evaluate(x, y, px, num, cache);
    if (!best.found || r < best.value) {
      best.found = true;
      best.value = r;
      best.witness = x;
    }
  }

  const GridSetup& s_;
  std::size_t n_;
  std::vector<SparseColumn> ncols_;
  std::vector<SparseColumn> pcols_;
  std::vector<SparseColumn> moves_;
};

// Sets `rep` to a kernel vector of N outside col(G) when one exists.
bool find_vanishing_class(const GridSetup& s, std::vector<std::int64_t>& rep) {
  const IntMatrix ker = integer_kernel(s.numerator.rows() ? s.numerator : IntMatrix(0, s.weights.size()));
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    auto z = ker.column(c);
    if (!all_zero(cpx::apply(s.projector, z))) {
      rep = std::move(z);
      return true;
    }
  }
  return false;
}

CheegerReport run_grid(const GridSetup& s, const GridOptions& opt) {
  CheegerReport rep;
  rep.method = s.method;
  const std::size_t n = s.weights.size();

  if (rank_rational(s.excluded) == n)
    throw PreconditionError(s.method + ": every cochain lies in the excluded subspace");

  std::vector<std::int64_t> z;
  if (find_vanishing_class(s, z)) {
    rep.value = Rational(0);
    rep.vanishing = true;
    rep.witness = z;
    rep.image = cpx::apply(s.numerator, z);
    std::int64_t mx = 0;
    for (auto v : z) mx = std::max(mx, v < 0 ? -v : v);
    rep.stabilized_at_m = static_cast<std::size_t>(mx);
    rep.note = "cocycle outside the excluded subspace; value forced to 0";
    return rep;
  }

  GridSweeper sweeper(s);
  std::vector<RayCache> caches;
  SweepBest last;
  bool have_prev = false;
  rep.stabilized = false;
  for (std::int64_t m = 1; m <= opt.max_m; ++m) {
    const double points = std::pow(static_cast<double>(2 * m + 1), static_cast<double>(n));
    if (points > opt.limits.grid_points) {
      if (!have_prev)
        throw CapacityError(s.method + ": grid {-1..1}^" + std::to_string(n) + " exceeds the point limit", "grid",
                            opt.limits.grid_points);
      rep.capped = true;
      break;
    }
    SweepBest cur = sweeper.sweep(m, opt.threads, caches);
    if (!cur.found) throw PreconditionError(s.method + ": no admissible cochain in the grid");
    rep.sweep.emplace_back(static_cast<std::size_t>(m), cur.value);
    const bool agree = have_prev && cur.value == last.value;
    last = std::move(cur);
    if (agree) {
      rep.stabilized = true;
      rep.stabilized_at_m = static_cast<std::size_t>(m - 1);
      break;
    }
    have_prev = true;
  }
  if (!rep.stabilized) rep.stabilized_at_m = rep.sweep.back().first;
  rep.value = last.value;
  rep.witness = last.witness;
  rep.image = cpx::apply(s.numerator, last.witness);
  if (s.denominator == Denominator::filling) {
    rep.representative = filling_norm(s.numerator, rep.image, s.weights)->representative;
  } else {
    rep.representative = quotient_norm(std::span<const std::int64_t>(rep.witness), s.excluded, s.weights).representative;
  }
  if (rep.capped)
    rep.note = "grid capped at M=" + std::to_string(rep.sweep.back().first) + "; value is an upper bound";
  else if (!rep.stabilized)
    rep.note = "no two consecutive sweeps agreed up to M=" + std::to_string(opt.max_m);
  return rep;
}

GridSetup gap0_setup(const SimplicialComplex& k, int d, std::string method, Denominator den, Skip skip) {
  if (d < 0 || d > k.dim()) throw DimensionError("h(Sigma_d): dimension out of range");
  GridSetup s;
  s.method = std::move(method);
  s.numerator = coboundary(k, d);
  s.excluded = reduced_boundary(k, d).transposed();
  s.projector = annihilator(s.excluded);
  s.weights = k.up_degrees(d);
  s.denominator = den;
  s.skip = skip;
  return s;
}

}  // namespace

// ---- gap from d+2 --------------------------------------------------------

CheegerReport h_k_sigma(const SimplicialComplex& k, int d, std::size_t kway, std::size_t threads, const Limits& limits) {
  const SignedGraph g = build_up_signed_graph(k, d, SignConvention::coboundary);
  const SignedCheegerResult r = signed_cheeger(g, kway, threads, limits);
  CheegerReport rep;
  rep.method = "signed-support-search";
  rep.value = r.value * Rational(d + 1);
  rep.witness.assign(r.assignment.begin(), r.assignment.end());
  rep.note = std::to_string(r.evaluated) + " pair ratios evaluated";
  return rep;
}

VerificationReport verify_gap_dplus2(const SimplicialComplex& k, int d, std::size_t kmax, std::size_t threads,
                                     const Limits& limits) {
  VerificationReport rep("gap-d2");
  const auto mu = eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::normalized}));
  const std::size_t n = mu.size();
  const double top = static_cast<double>(d + 2);
  const std::string at = " on Sigma_" + std::to_string(d);

  const Rational h1 = h_k_sigma(k, d, 1, threads, limits).value;
  const double gap = top - mu.back();
  const double lower = rd(h1 * h1) / (2.0 * (d + 1));
  const double upper = 2.0 * rd(h1);
  rep.expect("h_1^2/(2(d+1)) <= d+2-lambda_n" + at, lower <= gap + kIneqTol, fmt(lower), fmt(gap),
             "h_1 = " + h1.str());
  rep.expect("d+2-lambda_n <= 2 h_1" + at, gap <= upper + kIneqTol, fmt(gap), fmt(upper), "h_1 = " + h1.str());

  for (std::size_t kk = 2; kk <= kmax && kk <= n; ++kk) {
    if (n > limits.signed_cheeger_dp) {
      rep.note("h_" + std::to_string(kk) + at, "skipped", "-", "vertex count above enumeration limit");
      continue;
    }
    const Rational hk = h_k_sigma(k, d, kk, threads, limits).value;
    const double gk = top - mu[n - kk];
    rep.expect("(d+2-lambda_{n+1-k})/2 <= h_k, k=" + std::to_string(kk) + at, gk / 2.0 <= rd(hk) + kIneqTol,
               fmt(gk / 2.0), hk.str());
    const double denom = std::pow(static_cast<double>(kk), 6.0) * (d + 1) * gk;
    rep.note("h_k^2/(k^6(d+1)(d+2-lambda_{n+1-k})), k=" + std::to_string(kk) + at,
             gk > 0 ? fmt(rd(hk * hk) / denom) : "inf", "C (nonconstructive)");
  }
  return rep;
}

VerificationReport verify_reflection_identity(const SimplicialComplex& k, int d) {
  VerificationReport rep("reflection");
  const auto mu = eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::normalized}));
  const auto lam = eigenvalues_symmetric(signed_laplacian(build_up_signed_graph(k, d, SignConvention::coboundary)));
  const std::size_t n = mu.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max(worst, std::abs((d + 2 - mu[n - 1 - i]) - (d + 1) * lam[i]));
  rep.expect("d+2-lambda_{n-i+1}(Delta_" + std::to_string(d) + "^up) = (d+1) lambda_i(signed)", worst <= kIneqTol,
             fmt(worst), "0", "max deviation over " + std::to_string(n) + " eigenvalues");
  return rep;
}

VerificationReport verify_affine_map(const SimplicialComplex& k, int d) {
  VerificationReport rep("signed-map");
  const auto mu = eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::normalized}));
  const auto lam = eigenvalues_symmetric(signed_laplacian(build_up_signed_graph(k, d, SignConvention::laplacian)));
  double worst = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) worst = std::max(worst, std::abs(mu[i] - ((d + 1) * lam[i] - d)));
  rep.expect("mu_j = (d+1) lambda_j - d on Sigma_" + std::to_string(d), worst <= kIneqTol, fmt(worst), "0",
             "max deviation over " + std::to_string(mu.size()) + " eigenvalues");
  return rep;
}

// ---- gap from 0 ----------------------------------------------------------

CheegerReport h_sigma_d_bruteforce(const SimplicialComplex& k, int d, const GridOptions& opt) {
  return run_grid(gap0_setup(k, d, "multiset", Denominator::filling, Skip::in_subspace), opt);
}

CheegerReport h_sigma_d_zexpander(const SimplicialComplex& k, int d, const GridOptions& opt) {
  return run_grid(gap0_setup(k, d, "z-expander", Denominator::quotient, Skip::in_subspace), opt);
}

CheegerReport h_sigma_d_filling(const SimplicialComplex& k, int d, const GridOptions& opt) {
  return run_grid(gap0_setup(k, d, "filling", Denominator::filling, Skip::zero_image), opt);
}

CheegerReport h_sigma_d_circuits(const SimplicialComplex& k, int d, const Limits& limits) {
  GridSetup s = gap0_setup(k, d, "circuits", Denominator::filling, Skip::zero_image);
  CheegerReport rep;
  rep.method = s.method;
  std::vector<std::int64_t> z;
  if (find_vanishing_class(s, z)) {
    rep.value = Rational(0);
    rep.vanishing = true;
    rep.witness = z;
    rep.image = cpx::apply(s.numerator, z);
    rep.note = "cocycle outside the excluded subspace; value forced to 0";
    return rep;
  }
  const IntMatrix& n_op = s.numerator;
  const std::size_t m = n_op.rows();
  const std::size_t k_rank = m == 0 ? 0 : rank_rational(n_op);
  if (k_rank == 0) throw PreconditionError("circuits: the coboundary image is trivial");
  // A circuit of W = col(N) is fixed by k-1 independent coordinates on which it vanishes,
  // so enumerate those zero sets.
  const std::size_t zeros = k_rank - 1;
  double total = 1;
  for (std::size_t i = 0; i < zeros; ++i) total = total * static_cast<double>(m - i) / static_cast<double>(i + 1);
  if (total > limits.circuit_supports)
    throw CapacityError("circuits: " + fmt(total) + " candidate zero sets", "circuits", limits.circuit_supports);

  bool found = false;
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::size_t> idx(zeros);
  for (std::size_t i = 0; i < zeros; ++i) idx[i] = i;
  for (;;) {
    IntMatrix sub(zeros, n_op.cols());
    for (std::size_t i = 0; i < zeros; ++i)
      for (std::size_t j = 0; j < n_op.cols(); ++j) sub(i, j) = n_op(idx[i], j);
    if (rank_rational(sub) == zeros) {
      const IntMatrix ker = zeros == 0 ? IntMatrix() : integer_kernel(sub);
      std::vector<std::int64_t> y;
      if (zeros == 0) {
        // k = 1: every nonzero column of N spans W.
        for (std::size_t j = 0; j < n_op.cols() && y.empty(); ++j) {
          auto col = n_op.column(j);
          if (!all_zero(col)) y = std::move(col);
        }
      } else {
        for (std::size_t c = 0; c < ker.cols() && y.empty(); ++c) {
          auto cand = cpx::apply(n_op, ker.column(c));
          if (!all_zero(cand)) y = std::move(cand);
        }
      }
      if (!y.empty()) {
        make_primitive(y);
        if (seen.insert(y).second) {
          auto fill = filling_norm(n_op, y, s.weights);
          const Rational ratio = Rational(l1(y)) / fill->value;
          if (!found || ratio < rep.value) {
            found = true;
            rep.value = ratio;
            rep.image = y;
            rep.representative = fill->representative;
          }
        }
      }
    }
    std::size_t i = zeros;
    while (i > 0 && idx[i - 1] == m - zeros + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < zeros; ++j) idx[j] = idx[j - 1] + 1;
  }
  const std::size_t count = seen.size();
  if (!found) throw PreconditionError("circuits: no circuit found");
  // Integer witness: clear denominators of the optimal filling.
  std::int64_t l = 1;
  for (const auto& q : rep.representative) l = std::lcm(l, q.den());
  for (const auto& q : rep.representative) rep.witness.push_back((q * Rational(l)).num());
  rep.note = std::to_string(count) + " circuits of Im delta examined";
  return rep;
}

CheegerReport h_sigma_d(const SimplicialComplex& k, int d, const GridOptions& opt) {
  if (d == 0 && k.dim() >= 1 && k.count(0) <= opt.limits.cut_vertices) {
    // In degree 0 the constant is the Cheeger constant of the 1-skeleton (co-area).
    const IntMatrix e = coboundary(k, 0);
    std::vector<std::vector<std::size_t>> adj(k.count(0));
    for (std::size_t r = 0; r < e.rows(); ++r) {
      std::vector<std::size_t> ends;
      for (std::size_t c = 0; c < e.cols(); ++c)
        if (e(r, c) != 0) ends.push_back(c);
      adj[ends[0]].push_back(ends[1]);
      adj[ends[1]].push_back(ends[0]);
    }
    if (std::none_of(adj.begin(), adj.end(), [](const auto& a) { return a.empty(); })) {
      auto [value, cut] = graph_cheeger(adj, opt.limits);
      CheegerReport rep;
      rep.method = "graph-cuts";
      rep.value = value;
      rep.witness = std::move(cut);
      rep.vanishing = value.is_zero();
      rep.image = cpx::apply(e, rep.witness);
      return rep;
    }
  }
  try {
    return h_sigma_d_circuits(k, d, opt.limits);
  } catch (const CapacityError&) {
    return h_sigma_d_zexpander(k, d, opt);
  }
}

D3Certificate certify_d3(const SimplicialComplex& k, int d, const CheegerReport& report) {
  D3Certificate c;
  const IntMatrix g = reduced_boundary(k, d).transposed();
  const IntMatrix delta = coboundary(k, d);
  const auto& w = k.up_degrees(d);
  if (!report.representative.empty()) {
    c.x = report.representative;
  } else {
    if (report.witness.size() != w.size()) {
      c.reason = "report has no cochain witness";
      return c;
    }
    c.x = quotient_norm(std::span<const std::int64_t>(report.witness), g, w).representative;
  }
  if (c.x.size() != w.size()) {
    c.reason = "witness has the wrong length";
    return c;
  }
  // x must lie outside Im B_d^T: test P x != 0 on a cleared-denominator copy.
  std::int64_t l = 1;
  for (const auto& q : c.x) l = std::lcm(l, q.den());
  std::vector<std::int64_t> xi;
  for (const auto& q : c.x) xi.push_back((q * Rational(l)).num());
  if (all_zero(cpx::apply(annihilator(g), xi))) {
    c.reason = "witness lies in Im B_d^T";
    return c;
  }
  Rational num(0);
  for (std::size_t r = 0; r < delta.rows(); ++r) {
    Rational acc(0);
    for (std::size_t j = 0; j < delta.cols(); ++j)
      if (delta(r, j) != 0) acc += c.x[j] * Rational(delta(r, j));
    num += abs(acc);
  }
  c.ratio = num / weighted_l1(c.x, w);
  const Certificate cert = l1_orthogonality_certificate(c.x, g, w);
  c.u = cert.u;
  if (!cert.feasible) {
    c.reason = "no subgradient orthogonal to Im B_d^T";
    return c;
  }
  if (c.ratio != report.value) {
    c.reason = "Rayleigh ratio " + c.ratio.str() + " differs from " + report.value.str();
    return c;
  }
  c.certified = true;
  return c;
}

// ---- closed manifolds ----------------------------------------------------

std::vector<std::vector<std::size_t>> down_adjacency(const SimplicialComplex& k, int d) {
  if (d < 1 || d > k.dim()) throw DimensionError("down adjacency needs 1 <= d <= dim");
  const IntMatrix b = incidence_matrix(k, d);
  std::vector<std::set<std::size_t>> adj(b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::vector<std::size_t> cof;
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b(r, c) != 0) cof.push_back(c);
    for (std::size_t i = 0; i < cof.size(); ++i)
      for (std::size_t j = i + 1; j < cof.size(); ++j) {
        adj[cof[i]].insert(cof[j]);
        adj[cof[j]].insert(cof[i]);
      }
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& s : adj) out.emplace_back(s.begin(), s.end());
  return out;
}

std::optional<std::size_t> graph_diameter(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::size_t diam = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, static_cast<std::size_t>(-1));
    std::deque<std::size_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop_front();
      for (auto w : adj[v])
        if (dist[w] == static_cast<std::size_t>(-1)) {
          dist[w] = dist[v] + 1;
          q.push_back(w);
        }
    }
    for (auto x : dist) {
      if (x == static_cast<std::size_t>(-1)) return std::nullopt;
      diam = std::max(diam, x);
    }
  }
  return diam;
}

std::pair<Rational, std::vector<std::int64_t>> graph_cheeger(const std::vector<std::vector<std::size_t>>& adj,
                                                             const Limits& limits) {
  const std::size_t n = adj.size();
  if (n > limits.cut_vertices || n >= 63)
    throw CapacityError("graph Cheeger enumeration over " + std::to_string(n) + " vertices", "cuts",
                        static_cast<double>(limits.cut_vertices));
  std::int64_t total = 0;
  for (const auto& a : adj) total += static_cast<std::int64_t>(a.size());
  if (total == 0) throw DegenerateDegree("graph Cheeger constant of an edgeless graph");
  bool found = false;
  Rational best;
  std::uint64_t arg = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t vol = 0, cut = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      vol += static_cast<std::int64_t>(adj[v].size());
      for (auto w : adj[v])
        if (!(mask >> w & 1)) ++cut;
    }
    if (vol == 0 || 2 * vol > total) continue;
    const Rational r(cut, vol);
    if (!found || r < best) {
      found = true;
      best = r;
      arg = mask;
    }
  }
  std::vector<std::int64_t> ind(n, 0);
  for (std::size_t v = 0; v < n; ++v) ind[v] = (arg >> v) & 1;
  return {best, ind};
}

PseudomanifoldInfo pseudomanifold_info(const SimplicialComplex& k) {
  PseudomanifoldInfo info;
  const int top = k.dim();
  if (top < 1 || !k.is_pure()) return info;
  const auto& deg = k.up_degrees(top - 1);
  info.closed = std::all_of(deg.begin(), deg.end(), [](std::int64_t x) { return x == 2; });
  info.connected = graph_diameter(down_adjacency(k, top)).has_value();
  if (info.closed && info.connected) {
    const IntMatrix ker = integer_kernel(incidence_matrix(k, top));
    if (ker.cols() == 1) {
      auto e = ker.column(0);
      if (std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 1 || x == -1; })) {
        info.orientable = true;
        info.fundamental_class = std::move(e);
      }
    }
  }
  return info;
}

Rational diameter_formula(const SimplicialComplex& k) {
  const auto info = pseudomanifold_info(k);
  if (!info.closed) throw PreconditionError("diameter formula: not a closed pseudomanifold");
  if (!info.connected) throw PreconditionError("diameter formula: dual graph is disconnected");
  if (!info.orientable) throw PreconditionError("diameter formula: not orientable");
  const auto betti = betti_numbers(k, Field::rationals);
  if (betti.size() > 1 && betti[1] != 0)
    throw PreconditionError("diameter formula: b_1 = " + std::to_string(betti[1]) + " != 0");
  const auto diam = graph_diameter(down_adjacency(k, k.dim()));
  if (!diam || *diam == 0) throw PreconditionError("diameter formula: dual graph has a single vertex");
  return Rational(1, static_cast<std::int64_t>(*diam));
}

CheegerReport h_infinity_dual(const SimplicialComplex& k) {
  const auto info = pseudomanifold_info(k);
  if (!info.closed || !info.connected || !info.orientable)
    throw PreconditionError("infinity dual: needs a closed connected orientable pseudomanifold");
  const int top = k.dim();
  const IntMatrix b = incidence_matrix(k, top);  // rows Sigma_{top-1}, cols Sigma_top
  const auto& deg = k.up_degrees(top - 1);
  const auto& eps = info.fundamental_class;
  const std::size_t m = b.cols();
  const std::size_t f = b.rows();

  // Variables: y (m, free), p (f), q (f). The spread is shift invariant, so one LP per pair.
  const std::size_t nv = m + 2 * f;
  RationalLP lp;
  lp.free.assign(nv, false);
  for (std::size_t j = 0; j < m; ++j) lp.free[j] = true;
  lp.a.assign(2 * f, std::vector<Rational>(nv, Rational(0)));
  lp.b.assign(2 * f, Rational(0));
  for (std::size_t r = 0; r < f; ++r) {
    for (std::size_t c = 0; c < m; ++c)
      if (b(r, c) != 0) {
        lp.a[r][c] = b(r, c);
        lp.a[f + r][c] = b(r, c);
      }
    lp.a[r][m + r] = 1;  // B y + p = deg
    lp.b[r] = deg[r];
    lp.a[f + r][m + f + r] = -1;  // B y - q = -deg
    lp.b[f + r] = -deg[r];
  }

  CheegerReport rep;
  rep.method = "infinity-dual";
  Rational best_spread(0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c) {
      lp.objective.assign(nv, Rational(0));
      lp.objective[a] = -eps[a];
      lp.objective[c] = eps[c];
      const LpSolution sol = solve_lp(lp);
      if (sol.status != LpStatus::optimal) throw std::logic_error("infinity dual: LP not optimal");
      const Rational spread = -sol.value;
      if (spread > best_spread) {
        best_spread = spread;
        rep.representative.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(m));
        rep.witness = {static_cast<std::int64_t>(a), static_cast<std::int64_t>(c)};
      }
    }
  if (best_spread.is_zero()) throw PreconditionError("infinity dual: zero spread");
  rep.value = Rational(2) / best_spread;
  rep.note = "max over pairs of top simplices of eps_a y_a - eps_c y_c under |B y| <= deg";
  return rep;
}

CheegerReport h_down_grid(const SimplicialComplex& k, int d, const GridOptions& opt) {
  if (d < 1 || d > k.dim()) throw DimensionError("down Cheeger constant needs 1 <= d <= dim");
  GridSetup s;
  s.method = "down-grid";
  s.numerator = incidence_matrix(k, d);
  if (d < k.dim()) {
    s.excluded = incidence_matrix(k, d + 1);
  } else {
    if (!graph_diameter(down_adjacency(k, d))) {
      CheegerReport rep;
      rep.method = s.method;
      rep.value = Rational(0);
      rep.vanishing = true;
      rep.note = "down-adjacency graph is disconnected";
      return rep;
    }
    // Fundamental-class convention: the top boundary kernel plays the role of Im B_{d+1}.
    const IntMatrix ker = integer_kernel(incidence_matrix(k, d));
    s.excluded = ker.cols() == 0 ? IntMatrix(k.count(d), 0) : ker;
  }
  s.projector = annihilator(s.excluded);
  s.weights.assign(k.count(d), d + 1);
  s.denominator = Denominator::quotient;
  s.skip = Skip::in_subspace;
  return run_grid(s, opt);
}

CheegerReport h_down(const SimplicialComplex& k, int d, const GridOptions& opt) {
  if (d == k.dim()) {
    const auto info = pseudomanifold_info(k);
    if (info.closed && info.orientable) {
      auto [value, cut] = graph_cheeger(down_adjacency(k, d), opt.limits);
      CheegerReport rep;
      rep.method = "dual-graph-cuts";
      rep.value = value;
      rep.witness = std::move(cut);
      return rep;
    }
  }
  return h_down_grid(k, d, opt);
}

CheegerReport z2_cheeger(const SimplicialComplex& k, int d, const Limits& limits) {
  const std::size_t n = k.count(d);
  if (n > limits.z2_bits || n > 30)
    throw CapacityError("Z_2 enumeration over 2^" + std::to_string(n) + " cochains", "z2",
                        static_cast<double>(limits.z2_bits));
  const IntMatrix g = reduced_boundary(k, d).transposed();
  const IntMatrix delta = coboundary(k, d);

  // Echelon basis of Im over GF(2), keyed by leading bit.
  std::vector<std::uint64_t> basis;
  for (std::size_t c = 0; c < g.cols(); ++c) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g(i, c) % 2 != 0) v |= std::uint64_t{1} << i;
    for (auto b : basis)
      if (v & (std::uint64_t{1} << (63 - std::countl_zero(b)))) v ^= b;
    if (v) {
      for (auto& b : basis)
        if (b & (std::uint64_t{1} << (63 - std::countl_zero(v)))) b ^= v;
      basis.push_back(v);
    }
  }
  auto reduce = [&](std::uint64_t v) {
    for (auto b : basis)
      if (v & (std::uint64_t{1} << (63 - std::countl_zero(b)))) v ^= b;
    return v;
  };

  const std::size_t m = delta.rows();
  const std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> col(n, std::vector<std::uint64_t>(std::max<std::size_t>(words, 1), 0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < m; ++r)
      if (delta(r, j) % 2 != 0) col[j][r / 64] |= std::uint64_t{1} << (r % 64);

  const std::uint64_t total = std::uint64_t{1} << n;
  constexpr std::uint8_t unset = 0xff;
  std::vector<std::uint8_t> min_weight(total, unset);  // indexed by coset key
  std::vector<std::uint32_t> argmin(total, 0);
  std::vector<std::uint32_t> cob(total, 0);
  std::vector<std::uint64_t> acc(std::max<std::size_t>(words, 1));
  for (std::uint64_t phi = 0; phi < total; ++phi) {
    const std::uint64_t key = reduce(phi);
    const auto w = static_cast<std::uint8_t>(std::popcount(phi));
    if (min_weight[key] == unset) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t j = 0; j < n; ++j)
        if (phi >> j & 1)
          for (std::size_t q = 0; q < acc.size(); ++q) acc[q] ^= col[j][q];
      std::uint32_t c = 0;
      for (auto x : acc) c += static_cast<std::uint32_t>(std::popcount(x));
      cob[key] = c;
    }
    if (w < min_weight[key]) {
      min_weight[key] = w;
      argmin[key] = static_cast<std::uint32_t>(phi);
    }
  }
  CheegerReport rep;
  rep.method = "z2-hamming";
  bool found = false;
  std::uint64_t arg = 0;
  for (std::uint64_t key = 1; key < total; ++key) {
    if (min_weight[key] == unset) continue;
    const Rational r(cob[key], min_weight[key]);
    if (!found || r < rep.value || (r == rep.value && argmin[key] < arg)) {
      found = true;
      rep.value = r;
      arg = argmin[key];
    }
  }
  if (!found) throw PreconditionError("z2 Cheeger: every cochain is a coboundary");
  for (std::size_t j = 0; j < n; ++j) rep.witness.push_back(static_cast<std::int64_t>(arg >> j & 1));
  rep.vanishing = rep.value.is_zero();
  return rep;
}

VerificationReport verify_rough_cheeger(const SimplicialComplex& k, int d, const GridOptions& opt) {
  VerificationReport rep("rough-cheeger");
  const auto& deg = k.up_degrees(d);
  if (deg.empty() || std::any_of(deg.begin(), deg.end(), [](std::int64_t x) { return x == 0; }))
    throw PreconditionError("rough Cheeger bounds need deg > 0 on every d-simplex");
  const auto mu = eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::normalized}));
  const std::size_t idx = first_nontrivial_index(k, d);
  if (idx > mu.size()) throw PreconditionError("rough Cheeger bounds: I_d exceeds #Sigma_d");
  const double lambda = mu[idx - 1];
  const CheegerReport h = h_sigma_d(k, d, opt);
  std::int64_t vol = 0;
  for (auto x : deg) vol += x;
  const double hd = rd(h.value);
  const std::string at = " on Sigma_" + std::to_string(d);
  const std::string detail = "h = " + h.value.str() + " (" + h.method + "), I_d = " + std::to_string(idx);
  if (h.value.is_zero()) {
    rep.expect("h = 0 forces lambda_{I_d} = 0" + at, std::abs(lambda) <= kZeroTol, fmt(lambda), "0", detail);
    return rep;
  }
  const double lhs = hd * hd / static_cast<double>(k.count(d + 1));
  const double rhs = static_cast<double>(vol) * hd;
  rep.expect("h^2/#Sigma_{d+1} <= lambda_{I_d}" + at, lhs <= lambda + kIneqTol, fmt(lhs), fmt(lambda), detail);
  rep.expect("lambda_{I_d} <= vol(Sigma_d) h" + at, lambda <= rhs + kIneqTol, fmt(lambda), fmt(rhs), detail);
  return rep;
}

VerificationReport verify_down_bounds(const SimplicialComplex& k) {
  VerificationReport rep("down-bounds");
  const auto info = pseudomanifold_info(k);
  if (!info.closed || !info.connected || !info.orientable)
    throw PreconditionError("down bounds need a closed connected orientable pseudomanifold");
  const int top = k.dim();
  const int d = top - 1;
  if (reduced_betti(k, d) != 0) throw PreconditionError("down bounds need vanishing H^d");
  const std::size_t idx = first_nontrivial_index(k, d);
  const auto nu = eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::normalized}));
  const auto lu = eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::unnormalized}));
  const auto ld = eigenvalues_symmetric(assemble_laplacian(k, {top, LaplacianKind::down, Normalization::unnormalized}));
  const auto nd = eigenvalues_symmetric(assemble_laplacian(k, {top, LaplacianKind::down, Normalization::normalized}));
  const double a = nu[idx - 1], b = lu[idx - 1] / 2, c = ld[1] / 2, e = (d + 2) / 2.0 * nd[1];
  const double spread = std::max({a, b, c, e}) - std::min({a, b, c, e});
  rep.expect("lambda_{I_d}(Delta^up) = L^up/2 = L^down_2/2 = (d+2)/2 lambda_2(Delta^down)", spread <= kIneqTol, fmt(a),
             fmt(e), "spread " + fmt(spread));
  const auto [hdown, cut] = graph_cheeger(down_adjacency(k, top));
  const double h = rd(hdown);
  rep.expect("(d+2)/4 h_down^2 <= lambda_{I_d}", (d + 2) / 4.0 * h * h <= a + kIneqTol, fmt((d + 2) / 4.0 * h * h),
             fmt(a), "h_down = " + hdown.str());
  rep.expect("lambda_{I_d} <= (d+2) h_down", a <= (d + 2) * h + kIneqTol, fmt(a), fmt((d + 2) * h),
             "h_down = " + hdown.str());
  return rep;
}

}  // namespace cpx
