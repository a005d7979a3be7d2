// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <cpx/cheeger.hpp>
#include <cpx/complex.hpp>
#include <cpx/error.hpp>
#include <cpx/generators.hpp>
#include <cpx/harness.hpp>
#include <cpx/laplacians.hpp>
#include <cpx/numlin.hpp>
#include <cpx/p_laplacian.hpp>
#include <cpx/signed_graph.hpp>

#include "../support/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cpx;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::size_t checks = 0;

  void require(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      if (ok) detail << what;
      ok = false;
    }
  }
  void absorb(const VerificationReport& r, const std::string& where) {
    ++checks;
    for (const auto& c : r.checks())
      if (c.status == Status::fail) {
        if (ok) detail << where << ": " << c.name << " (" << c.lhs << " vs " << c.rhs << ")";
        ok = false;
        return;
      }
  }
};

bool positive_degrees(const SimplicialComplex& k, int d) {
  const auto& deg = k.up_degrees(d);
  return std::all_of(deg.begin(), deg.end(), [](std::int64_t v) { return v > 0; });
}

std::string at(const NamedComplex& c, int d) { return c.name + " d=" + std::to_string(d); }

using Criterion = std::function<void(Outcome&)>;

void eckmann(Outcome& o) {
  for (const auto& c : builtin_suite()) o.absorb(verify_eckmann(c.complex), c.name);
}

void duality(Outcome& o) {
  for (const auto& c : builtin_suite())
    for (int d = 0; d < c.complex.dim(); ++d) o.absorb(verify_up_down_duality(c.complex, d), at(c, d));
}

void affine(Outcome& o) {
  for (const auto& c : builtin_suite())
    for (int d = 0; d < c.complex.dim(); ++d)
      if (positive_degrees(c.complex, d)) o.absorb(verify_affine_map(c.complex, d), at(c, d));
}

void gap_d2(Outcome& o) {
  for (const auto& c : builtin_suite())
    for (int d = 0; d < c.complex.dim(); ++d)
      if (c.complex.count(d) <= 12 && positive_degrees(c.complex, d))
        o.absorb(verify_gap_dplus2(c.complex, d, 3), at(c, d));
}

void four_definitions(Outcome& o) {
  HarnessOptions opt;
  opt.sections = {"d1d4-equivalence"};
  for (const auto& c : builtin_suite())
    for (const auto& r : run_harness(c, opt)) o.absorb(r, c.name);
  const auto tet = generate("boundary_simplex:3");
  const auto torus = generate("torus7");
  o.require(h_sigma_d_bruteforce(tet.complex, 1, {3}).value == Rational(1), "h(Sigma_1) on boundary_simplex:3 != 1");
  o.require(h_sigma_d(torus.complex, 1, {3}).value == Rational(0), "h(Sigma_1) on torus7 != 0");
}

void manifold_diameter(Outcome& o) {
  HarnessOptions opt;
  opt.sections = {"manifold-diameter"};
  for (const char* name : {"boundary_simplex:3", "octahedron", "icosahedron"}) {
    const auto c = generate(name);
    for (const auto& r : run_harness(c, opt)) o.absorb(r, name);
  }
  const auto tet = generate("boundary_simplex:3");
  const auto oct = generate("octahedron");
  const auto ico = generate("icosahedron");
  o.require(h_sigma_d(tet.complex, 1, {3}).value == Rational(1), "boundary_simplex:3 != 1");
  o.require(h_sigma_d(oct.complex, 1, {3}).value == Rational(1, 3), "octahedron != 1/3");
  o.require(diameter_formula(ico.complex) == Rational(1, 5), "icosahedron formula != 1/5");
}

void rough(Outcome& o) {
  for (const auto& c : builtin_suite())
    for (int d = 0; d < c.complex.dim(); ++d)
      if (positive_degrees(c.complex, d)) o.absorb(verify_rough_cheeger(c.complex, d, {3}), at(c, d));
  const auto torus = generate("torus7");
  const auto sr = spectral_report(torus.complex, {1, LaplacianKind::up, Normalization::normalized});
  const double lam = sr.eigenvalues.at(sr.first_nontrivial_index - 1);
  o.require(std::abs(lam) <= 1e-8 && h_sigma_d(torus.complex, 1, {3}).value.is_zero(),
            "torus7 d=1: lambda_I and h not both 0");
}

void p_family(Outcome& o) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto [lo, hi] = estimate_claim_constants(2.0, k);
    o.require(std::abs(lo - 1) <= 1e-9 && std::abs(hi - 1) <= 1e-9, "claim constants at p=2, k=" + std::to_string(k));
  }
  POptions po;
  for (const auto& c : builtin_suite())
    for (int d = 0; d < c.complex.dim(); ++d) {
      if (!positive_degrees(c.complex, d)) continue;
      const double lin =
          eigenvalues_symmetric(assemble_laplacian(c.complex, {d, LaplacianKind::up, Normalization::normalized})).back();
      const auto est = max_eig_p({&c.complex, d, 2.0, Direction::up, true});
      o.require(std::abs(est.value - lin) <= 1e-6, "max_eig_p(p=2) on " + at(c, d));
      if (c.complex.count(d) <= 12) o.absorb(verify_gap_p(c.complex, d, 2.0, po), at(c, d) + " p=2");
    }
  for (const char* name : {"boundary_simplex:3", "triangle"}) {
    const auto c = generate(name);
    for (int d = 0; d < c.complex.dim(); ++d)
      if (positive_degrees(c.complex, d)) o.absorb(verify_p_duality(c.complex, d, 3.0, po), at(c, d) + " p=3");
  }
}

void signed_layer(Outcome& o) {
  for (const auto& g : testing::signed_corpus()) {
    const auto ev = eigenvalues_symmetric(signed_laplacian(g));
    const auto bfs = balance_decompose(g);
    const auto brute = balance_by_enumeration(g, 12);
    const bool balanced = bfs.size() == 1 && bfs[0].balanced;
    const bool anti = bfs.size() == 1 && bfs[0].antibalanced;
    const std::string n = "n=" + std::to_string(g.order());
    o.require(brute.size() == bfs.size() && brute[0].balanced == balanced && brute[0].antibalanced == anti,
              "BFS vs enumeration " + n);
    o.require(balanced == (std::abs(ev.front()) <= 1e-8), "balance vs lambda_min " + n);
    o.require(anti == (std::abs(ev.back() - 2) <= 1e-8), "antibalance vs lambda_max " + n);
    const double h = signed_cheeger(g, 1).value.to_double();
    o.require(ev.front() / 2 <= h + 1e-12 && h <= std::sqrt(2 * std::max(ev.front(), 0.0)) + 1e-12,
              "signed Cheeger inequality " + n);
  }
}

void z2_mismatch(Outcome& o) {
  const auto rp2 = generate("rp2");
  const Rational z = z2_cheeger(rp2.complex, 1).value;
  const Rational h = h_sigma_d(rp2.complex, 1, {3}).value;
  o.require(z.is_zero(), "z2 on rp2 d=1 is " + z.str());
  o.require(h > Rational(0), "h on rp2 d=1 is " + h.str());
  o.detail << (o.ok ? "z2=" + z.str() + " h=" + h.str() : "");
}

void properties(Outcome& o) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> gauss;
  for (const auto& c : builtin_suite())
    for (int d = 0; d < c.complex.dim(); ++d) {
      if (!positive_degrees(c.complex, d)) continue;
      const std::size_t n = c.complex.count(d);
      for (double p : {1.5, 2.0, 3.0}) {
        const PRayleighProblem prob{&c.complex, d, p, Direction::up, true};
        for (int point = 0; point < 20; ++point) {
          std::vector<double> f(n);
          for (auto& v : f) v = gauss(rng);
          const auto g = p_rayleigh_gradient(prob, f);
          bool good = true;
          for (std::size_t i = 0; i < n; ++i) {
            auto fp = f, fm = f;
            fp[i] += 1e-6;
            fm[i] -= 1e-6;
            const double fd = (p_rayleigh(prob, fp) - p_rayleigh(prob, fm)) / 2e-6;
            good = good && std::abs(fd - g[i]) <= 1e-5 * std::max({std::abs(fd), std::abs(g[i]), 1e-3});
          }
          o.require(good, "gradient FD on " + at(c, d));
          auto scaled = f;
          for (auto& v : scaled) v *= -3.5;
          const double r = p_rayleigh(prob, f);
          o.require(std::abs(p_rayleigh(prob, scaled) - r) <= 1e-12 * std::max(1.0, r), "homogeneity on " + at(c, d));
        }
      }
    }
  for (const auto& c : builtin_suite())
    for (int d = 1; d < c.complex.dim(); ++d) {
      const auto bb = multiply(incidence_matrix(c.complex, d), incidence_matrix(c.complex, d + 1));
      bool zero = true;
      for (std::size_t r = 0; r < bb.rows(); ++r)
        for (auto v : bb.row(r)) zero = zero && v == 0;
      o.require(zero, "B.B on " + at(c, d));
    }
  std::bernoulli_distribution coin(0.5);
  for (const auto& g : testing::signed_corpus()) {
    std::vector<int> tau(g.order());
    for (auto& t : tau) t = coin(rng) ? 1 : -1;
    const auto s = g.switched(tau);
    o.require(spectra_match(eigenvalues_symmetric(signed_laplacian(g)), eigenvalues_symmetric(signed_laplacian(s))),
              "switching changes spectrum");
    o.require(signed_cheeger(g, 2).value == signed_cheeger(s, 2).value, "switching changes h_2");
  }
  for (const char* name : {"boundary_simplex:3", "octahedron", "rp2", "torus7"}) {
    const auto c = generate(name);
    HarnessOptions one, eight;
    eight.threads = 8;
    one.sections = eight.sections = {"gap-d2", "d1d4-equivalence", "p-family"};
    o.require(harness_to_json(c, run_harness(c, one)).dump() == harness_to_json(c, run_harness(c, eight)).dump(),
              std::string("threads 1 vs 8 differ on ") + name);
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double budget_s;
    Criterion run;
  };
  const std::vector<Entry> criteria = {
      {1, "Eckmann zero multiplicity = Betti", 10, eckmann},
      {2, "up/down spectral duality", 0, duality},
      {3, "affine map to the signed graph", 0, affine},
      {4, "gap from d+2 bounds", 300, gap_d2},
      {5, "four definitions agree", 0, four_definitions},
      {6, "manifold diameter", 600, manifold_diameter},
      {7, "rough Cheeger bounds", 0, rough},
      {8, "p-family", 0, p_family},
      {9, "signed-graph corpus", 0, signed_layer},
      {10, "Z_2 mismatch on rp2", 0, z2_mismatch},
      {11, "property suites", 120, properties},
  };
  int failed = 0;
  for (const auto& e : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(o);
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail << "exception: " << ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget_s > 0 && secs > e.budget_s) {
      if (o.ok) o.detail << "over the " << e.budget_s << " s budget";
      o.ok = false;
    }
    failed += !o.ok;
    std::printf("criterion %2d %s  %-36s %4zu checks %8.2f s  %s\n", e.id, o.ok ? "PASS" : "FAIL", e.title, o.checks,
                secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
