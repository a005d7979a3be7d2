#include "cpx/signed_graph.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <set>
#include <string>
#include <thread>

#include "cpx/error.hpp"

namespace cpx {

SignedGraph::SignedGraph(std::size_t n, std::vector<SignedEdge> edges) : n_(n), adj_(n) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) throw MalformedInput("signed edge endpoint out of range");
    if (e.u == e.v) throw MalformedInput("signed graph self-loop at vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1) throw MalformedInput("edge sign must be +1 or -1");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert({e.u, e.v}).second)
      throw MalformedInput("repeated edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  }
  std::sort(edges.begin(), edges.end(),
            [](const SignedEdge& a, const SignedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.sign);
    adj_[e.v].emplace_back(e.u, e.sign);
  }
}

SignedGraph SignedGraph::switched(const std::vector<int>& tau) const {
  auto e = edges_;
  for (auto& x : e) x.sign *= tau[x.u] * tau[x.v];
  return SignedGraph(n_, std::move(e));
}

SignedGraph SignedGraph::opposite() const {
  auto e = edges_;
  for (auto& x : e) x.sign = -x.sign;
  return SignedGraph(n_, std::move(e));
}

std::vector<std::vector<std::size_t>> SignedGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(n_, false);
  for (std::size_t s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto& [w, sign] : adj_[comp[i]])
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

SignedGraph build_up_signed_graph(const SimplicialComplex& k, int d, SignConvention convention) {
  if (d < 0 || d + 1 > k.dim() || k.count(d + 1) == 0)
    throw DimensionError("signed graph on Sigma_" + std::to_string(d) + " needs (d+1)-simplices");
  const IntMatrix b = incidence_matrix(k, d + 1);
  const int flip = convention == SignConvention::laplacian ? -1 : 1;
  // Two distinct d-simplices span at most one (d+1)-simplex (their union), so
  // every pair below is produced by exactly one column.
  std::vector<SignedEdge> edges;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < b.rows(); ++r)
      if (b(r, c) != 0) rows.push_back(r);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        edges.push_back({rows[i], rows[j], static_cast<int>(flip * b(rows[i], c) * b(rows[j], c))});
  }
  return SignedGraph(k.count(d), std::move(edges));
}

SymmetricMatrix signed_laplacian(const SignedGraph& g) {
  const std::size_t n = g.order();
  SymmetricMatrix l(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == 0) throw DegenerateDegree("signed Laplacian: vertex " + std::to_string(v) + " is isolated");
    l.set(v, v, 1.0);
  }
  for (const auto& e : g.edges())
    l.set(e.u, e.v, -e.sign / std::sqrt(static_cast<double>(g.degree(e.u)) * static_cast<double>(g.degree(e.v))));
  return l;
}

namespace {

// BFS switching: assign tau so that tau_u * s * tau_v == target on every edge.
bool propagate(const SignedGraph& g, const std::vector<std::size_t>& comp, int target, std::vector<int>& tau) {
  tau.assign(g.order(), 1);
  std::vector<bool> seen(g.order(), false);
  std::deque<std::size_t> q{comp.front()};
  seen[comp.front()] = true;
  bool ok = true;
  while (!q.empty()) {
    const auto v = q.front();
    q.pop_front();
    for (const auto& [w, s] : g.neighbors(v)) {
      const int want = target * s * tau[v];
      if (!seen[w]) {
        seen[w] = true;
        tau[w] = want;
        q.push_back(w);
      } else if (tau[w] != want) {
        ok = false;
      }
    }
  }
  return ok;
}

}  // namespace

std::vector<ComponentBalance> balance_decompose(const SignedGraph& g) {
  std::vector<ComponentBalance> out;
  for (auto& comp : g.components()) {
    ComponentBalance cb;
    std::vector<int> tau;
    cb.balanced = propagate(g, comp, 1, tau);
    if (cb.balanced) cb.balancing_switch = tau;
    cb.antibalanced = propagate(g, comp, -1, tau);
    if (cb.antibalanced) cb.antibalancing_switch = tau;
    cb.vertices = std::move(comp);
    out.push_back(std::move(cb));
  }
  return out;
}

std::vector<ComponentBalance> balance_by_enumeration(const SignedGraph& g, std::size_t max_vertices) {
  std::vector<ComponentBalance> out;
  for (auto& comp : g.components()) {
    if (comp.size() > max_vertices)
      throw CapacityError("switching enumeration over " + std::to_string(comp.size()) + " vertices",
                          "switching_vertices", static_cast<double>(max_vertices));
    ComponentBalance cb;
    std::vector<bool> in(g.order(), false);
    for (auto v : comp) in[v] = true;
    // Switching the first vertex is redundant with switching the rest.
    const std::uint64_t total = std::uint64_t{1} << (comp.size() - 1);
    for (std::uint64_t mask = 0; mask < total && !(cb.balanced && cb.antibalanced); ++mask) {
      std::vector<int> tau(g.order(), 1);
      for (std::size_t i = 1; i < comp.size(); ++i)
        if (mask & (std::uint64_t{1} << (i - 1))) tau[comp[i]] = -1;
      bool all_pos = true, all_neg = true;
      for (const auto& e : g.edges()) {
        if (!in[e.u]) continue;
        const int s = e.sign * tau[e.u] * tau[e.v];
        all_pos = all_pos && s == 1;
        all_neg = all_neg && s == -1;
      }
      if (all_pos && !cb.balanced) {
        cb.balanced = true;
        cb.balancing_switch = tau;
      }
      if (all_neg && !cb.antibalanced) {
        cb.antibalanced = true;
        cb.antibalancing_switch = tau;
      }
    }
    cb.vertices = std::move(comp);
    out.push_back(std::move(cb));
  }
  return out;
}

Rational signed_bipartiteness(const SignedGraph& g, const std::vector<int>& side) {
  std::int64_t num = 0, vol = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (side[v] != 0) vol += static_cast<std::int64_t>(g.degree(v));
  for (const auto& e : g.edges()) {
    const int a = side[e.u], b = side[e.v];
    if (a == 0 && b == 0) continue;
    if (a == 0 || b == 0) {
      num += 1;
    } else if (a == b) {
      if (e.sign == -1) num += 2;
    } else if (e.sign == 1) {
      num += 2;
    }
  }
  if (vol == 0) throw PreconditionError("signed bipartiteness of an empty or isolated pair");
  return Rational(num, vol);
}

namespace {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;  // den > 0
};

bool less(const Fraction& a, const Fraction& b) {
  return static_cast<int128_t>(a.num) * b.den < static_cast<int128_t>(b.num) * a.den;
}
bool equal(const Fraction& a, const Fraction& b) {
  return static_cast<int128_t>(a.num) * b.den == static_cast<int128_t>(b.num) * a.den;
}

class CheegerSearch {
 public:
  CheegerSearch(const SignedGraph& g, std::size_t k) : g_(g), k_(k), n_(g.order()) {
    for (std::size_t v = 0; v < n_; ++v) deg_.push_back(static_cast<std::int64_t>(g.degree(v)));
  }

  // Worst pair ratio of a complete assignment, or nullopt if some pair has zero volume.
  bool evaluate(const std::vector<int>& a, Fraction& worst) const {
    std::vector<std::int64_t> num(k_ + 1, 0), vol(k_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v)
      if (a[v] != 0) vol[static_cast<std::size_t>((a[v] + 1) / 2)] += deg_[v];
    for (const auto& e : g_.edges()) {
      const int x = a[e.u], y = a[e.v];
      if (x == 0 && y == 0) continue;
      const int px = (x + 1) / 2, py = (y + 1) / 2;
      if (x != 0 && y != 0 && px == py) {
        if ((x == y && e.sign == -1) || (x != y && e.sign == 1)) num[static_cast<std::size_t>(px)] += 2;
      } else {
        if (x != 0) num[static_cast<std::size_t>(px)] += 1;
        if (y != 0) num[static_cast<std::size_t>(py)] += 1;
      }
    }
    worst = {0, 1};
    for (std::size_t i = 1; i <= k_; ++i) {
      if (vol[i] == 0) return false;
      const Fraction f{num[i], vol[i]};
      if (less(worst, f)) worst = f;
    }
    return true;
  }

  // Canonical prefixes of the given length, in lexicographic order.
  void prefixes(std::size_t len, std::vector<int>& cur, int opened, std::vector<std::pair<std::vector<int>, int>>& out) const {
    if (cur.size() == len) {
      out.emplace_back(cur, opened);
      return;
    }
    for_each_choice(opened, [&](int c, int next_opened) {
      cur.push_back(c);
      prefixes(len, cur, next_opened, out);
      cur.pop_back();
    });
  }

  struct Best {
    bool found = false;
    Fraction value;
    std::vector<int> assignment;
    std::uint64_t evaluated = 0;

    void offer(const Fraction& f, const std::vector<int>& a) {
      if (!found || less(f, value) || (equal(f, value) && a < assignment)) {
        found = true;
        value = f;
        assignment = a;
      }
    }
  };

  void search(std::vector<int>& cur, int opened, Best& best) const {
    const std::size_t v = cur.size();
    const std::size_t remaining = n_ - v;
    if (static_cast<std::size_t>(k_) - static_cast<std::size_t>(opened) > remaining) return;
    if (v == n_) {
      Fraction f;
      ++best.evaluated;
      if (evaluate(cur, f)) best.offer(f, cur);
      return;
    }
    for_each_choice(opened, [&](int c, int next_opened) {
      cur.push_back(c);
      search(cur, next_opened, best);
      cur.pop_back();
    });
  }

 private:
  // Ascending labels: 0, then both sides of opened pairs, then the odd side of the next pair.
  template <class F>
  void for_each_choice(int opened, F&& f) const {
    f(0, opened);
    for (int i = 1; i <= opened; ++i) {
      f(2 * i - 1, opened);
      f(2 * i, opened);
    }
    if (opened < static_cast<int>(k_)) f(2 * opened + 1, opened + 1);
  }

  const SignedGraph& g_;
  std::size_t k_;
  std::size_t n_;
  std::vector<std::int64_t> deg_;
};

}  // namespace

namespace {

constexpr Fraction kNone{0, 0};  // den == 0: no admissible pair

bool valid(const Fraction& f) { return f.den != 0; }

// 0 unused, 1 and 2 the two sides of a single pair.
int pair_term(int x, int y, int sign) {
  if (x == 0 && y == 0) return 0;
  if (x == 0 || y == 0) return 1;
  return ((x == y && sign == -1) || (x != y && sign == 1)) ? 2 : 0;
}

// For each support T inside the block [v, n), the least beta over signings of T
// joined to the fixed single-pair labels on [0, v).
std::vector<Fraction> block_minima(const SignedGraph& g, const std::vector<int>& fixed, std::size_t v,
                                   std::uint64_t& evaluated) {
  const std::size_t n = g.order();
  const std::size_t m = n - v;
  std::vector<int> lab(n, 0);
  std::int64_t num = 0, vol = 0;
  for (std::size_t u = 0; u < v; ++u) {
    lab[u] = fixed[u];
    if (lab[u] != 0) vol += static_cast<std::int64_t>(g.degree(u));
  }
  for (const auto& e : g.edges()) num += pair_term(lab[e.u], lab[e.v], e.sign);

  auto relabel = [&](std::size_t u, int to) {
    const int from = lab[u];
    for (const auto& [w, sign] : g.neighbors(u)) num += pair_term(to, lab[w], sign) - pair_term(from, lab[w], sign);
    const auto d = static_cast<std::int64_t>(g.degree(u));
    vol += (to != 0 ? d : 0) - (from != 0 ? d : 0);
    lab[u] = to;
  };

  std::vector<Fraction> out(std::size_t{1} << m, kNone);
  std::uint64_t mask = 0;
  for (;;) {
    if (vol > 0) {
      ++evaluated;
      const Fraction f{num, vol};
      auto& slot = out[mask];
      if (!valid(slot) || less(f, slot)) slot = f;
    }
    std::size_t i = 0;
    while (i < m && lab[v + i] == 2) {
      relabel(v + i, 0);
      mask &= ~(std::uint64_t{1} << i);
      ++i;
    }
    if (i == m) break;
    relabel(v + i, lab[v + i] + 1);
    mask |= std::uint64_t{1} << i;
  }
  return out;
}

class SupportDp {
 public:
  SupportDp(const SignedGraph& g, std::size_t k) : g_(g), k_(k), n_(g.order()) {
    best_ = block_minima(g, {}, 0, evaluated_);
  }

  Fraction value() const {
    const std::size_t full = (std::size_t{1} << n_) - 1;
    // level[U]: least worst ratio over j disjoint nonempty supports inside U.
    std::vector<Fraction> level(best_.size(), kNone);
    for (std::size_t u = 1; u <= full; ++u) {
      level[u] = best_[u];
      for (std::size_t b = u; b; b &= b - 1) {
        const Fraction& sub = level[u & ~(b & -b)];
        if (valid(sub) && (!valid(level[u]) || less(sub, level[u]))) level[u] = sub;
      }
    }
    for (std::size_t j = 2; j <= k_; ++j) {
      std::vector<Fraction> next(best_.size(), kNone);
      const bool last = j == k_;
      for (std::size_t u = last ? full : 1; u <= full; ++u) {
        Fraction cur = kNone;
        for (std::size_t t = u; t; t = (t - 1) & u) {
          const Fraction& a = best_[t];
          const Fraction& b = level[u & ~t];
          if (!valid(a) || !valid(b)) continue;
          const Fraction worst = less(a, b) ? b : a;
          if (!valid(cur) || less(worst, cur)) cur = worst;
        }
        next[u] = cur;
      }
      level = std::move(next);
    }
    return level[full];
  }

  // Whether the canonical prefix a[0, v) extends to k pairs whose ratios are all <= h.
  bool feasible(const std::vector<int>& a, std::size_t v, int opened, const Fraction& h) {
    const std::size_t m = n_ - v;
    const std::size_t size = std::size_t{1} << m;
    std::vector<std::vector<char>> families;
    for (int i = 1; i <= opened; ++i) {
      std::vector<int> fixed(v, 0);
      for (std::size_t u = 0; u < v; ++u)
        fixed[u] = a[u] == 2 * i - 1 ? 1 : (a[u] == 2 * i ? 2 : 0);
      const auto mins = block_minima(g_, fixed, v, evaluated_);
      std::vector<char> ok(size, 0);
      for (std::size_t t = 0; t < size; ++t) ok[t] = valid(mins[t]) && !less(h, mins[t]);
      families.push_back(std::move(ok));
    }
    if (static_cast<std::size_t>(opened) < k_) {
      std::vector<char> ok(size, 0);
      for (std::size_t t = 1; t < size; ++t) {
        const Fraction& f = best_[t << v];
        ok[t] = valid(f) && !less(h, f);
      }
      for (std::size_t j = static_cast<std::size_t>(opened); j < k_; ++j) families.push_back(ok);
    }
    std::vector<char> reach(size, 0);
    reach[0] = 1;
    const std::size_t full = size - 1;
    for (const auto& ok : families) {
      std::vector<char> next(size, 0);
      bool any = false;
      for (std::size_t x = 0; x < size; ++x) {
        if (!reach[x]) continue;
        const std::size_t rest = full & ~x;
        for (std::size_t t = rest;; t = (t - 1) & rest) {
          if (ok[t]) {
            next[x | t] = 1;
            any = true;
          }
          if (t == 0) break;
        }
      }
      if (!any) return false;
      reach = std::move(next);
    }
    return true;
  }

  std::uint64_t evaluated() const { return evaluated_; }

 private:
  const SignedGraph& g_;
  std::size_t k_;
  std::size_t n_;
  std::vector<Fraction> best_;
  std::uint64_t evaluated_ = 0;
};

}  // namespace

SignedCheegerResult signed_cheeger(const SignedGraph& g, std::size_t k, std::size_t /*threads*/, const Limits& limits) {
  if (k == 0) throw PreconditionError("signed_cheeger: k must be positive");
  const std::size_t n = g.order();
  if (n > limits.signed_cheeger_dp)
    throw CapacityError("signed Cheeger support search over " + std::to_string(n) + " vertices", "signed_dp",
                        static_cast<double>(limits.signed_cheeger_dp));
  if (k > n) throw PreconditionError("signed_cheeger: k exceeds the number of vertices");
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) == 0) throw DegenerateDegree("signed_cheeger: vertex " + std::to_string(v) + " is isolated");

  SupportDp dp(g, k);
  const Fraction h = dp.value();
  if (!valid(h)) throw PreconditionError("signed_cheeger: no admissible sub-bipartition");

  // Lexicographically least canonical assignment attaining h.
  std::vector<int> a(n, 0);
  int opened = 0;
  for (std::size_t v = 0; v < n; ++v) {
    bool placed = false;
    const int top = opened < static_cast<int>(k) ? 2 * opened + 1 : 2 * opened;
    for (int c = 0; c <= top && !placed; ++c) {
      a[v] = c;
      const int next_opened = c == 2 * opened + 1 ? opened + 1 : opened;
      if (dp.feasible(a, v + 1, next_opened, h)) {
        opened = next_opened;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("signed_cheeger: optimum lost during witness reconstruction");
  }

  SignedCheegerResult r;
  r.value = Rational(h.num, h.den);
  r.assignment = a;
  r.evaluated = dp.evaluated();
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<int> side(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (a[v] == static_cast<int>(2 * i - 1)) side[v] = 1;
      else if (a[v] == static_cast<int>(2 * i)) side[v] = 2;
    r.pair_ratios.push_back(signed_bipartiteness(g, side));
  }
  return r;
}

SignedCheegerResult signed_cheeger_enumerate(const SignedGraph& g, std::size_t k, std::size_t threads, const Limits& limits) {
  if (k == 0) throw PreconditionError("signed_cheeger_enumerate: k must be positive");
  const std::size_t n = g.order();
  const std::size_t cap = limits.signed_cheeger_vertices(k);
  if (n > cap)
    throw CapacityError("signed Cheeger enumeration over " + std::to_string(n) + " vertices with k=" + std::to_string(k),
                        "signed_k" + (k <= 3 ? std::to_string(k) : std::string("more")), static_cast<double>(cap));
  if (k > n) throw PreconditionError("signed_cheeger: k exceeds the number of vertices");
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) == 0) throw DegenerateDegree("signed_cheeger: vertex " + std::to_string(v) + " is isolated");

  CheegerSearch search(g, k);
  std::vector<std::pair<std::vector<int>, int>> chunks;
  std::vector<int> cur;
  search.prefixes(std::min<std::size_t>(n, 4), cur, 0, chunks);

  threads = std::max<std::size_t>(1, std::min(threads, chunks.size()));
  std::vector<CheegerSearch::Best> partial(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](std::size_t t) {
    for (std::size_t i = next.fetch_add(1); i < chunks.size(); i = next.fetch_add(1)) {
      std::vector<int> prefix = chunks[i].first;
      search.search(prefix, chunks[i].second, partial[t]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  CheegerSearch::Best best;
  for (const auto& p : partial) {
    best.evaluated += p.evaluated;
    if (p.found) best.offer(p.value, p.assignment);
  }
  if (!best.found) throw PreconditionError("signed_cheeger: no admissible sub-bipartition");

  SignedCheegerResult r;
  r.value = Rational(best.value.num, best.value.den);
  r.assignment = best.assignment;
  r.evaluated = best.evaluated;
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<int> side(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (best.assignment[v] == static_cast<int>(2 * i - 1)) side[v] = 1;
      else if (best.assignment[v] == static_cast<int>(2 * i)) side[v] = 2;
    r.pair_ratios.push_back(signed_bipartiteness(g, side));
  }
  return r;
}

}  // namespace cpx
