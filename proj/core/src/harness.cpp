#include "cpx/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cpx/cheeger.hpp"
#include "cpx/complex_io.hpp"
#include "cpx/error.hpp"
#include "cpx/laplacians.hpp"
#include "cpx/numlin.hpp"
#include "cpx/p_laplacian.hpp"

namespace cpx {

namespace {

constexpr std::size_t kGapMaxSimplices = 12;
constexpr std::size_t kEquivalenceMaxSimplices = 10;
constexpr std::int64_t kEquivalenceMaxM = 3;

// Runs `body`; a refused operation becomes a report-only entry naming the reason.
void guarded(VerificationReport& rep, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const CapacityError& e) {
    rep.note(what, "skipped", "capacity", std::string(e.what()) + " [limit " + e.limit_name() + "]");
  } catch (const PreconditionError& e) {
    rep.note(what, "skipped", "precondition", e.what());
  } catch (const DegenerateDegree& e) {
    rep.note(what, "skipped", "degenerate degree", e.what());
  } catch (const DimensionError& e) {
    rep.note(what, "skipped", "dimension", e.what());
  }
}

bool positive_degrees(const SimplicialComplex& k, int d) {
  const auto& deg = k.up_degrees(d);
  return !deg.empty() && std::all_of(deg.begin(), deg.end(), [](std::int64_t x) { return x > 0; });
}

std::string sd(int d) { return "d=" + std::to_string(d); }

VerificationReport section_eckmann(const NamedComplex& c, const HarnessOptions&) {
  VerificationReport rep("eckmann");
  rep.merge(verify_eckmann(c.complex));
  if (c.expected) {
    std::string why;
    try {
      check_expected(c);
    } catch (const std::logic_error& e) {
      why = e.what();
    }
    rep.expect("expected invariants", why.empty(), why.empty() ? "match" : "mismatch", "match", why);
  }
  return rep;
}

VerificationReport section_duality(const NamedComplex& c, const HarnessOptions&) {
  VerificationReport rep("duality");
  const auto& k = c.complex;
  for (int d = 0; d < k.dim(); ++d) {
    rep.merge(verify_up_down_duality(k, d));
    rep.merge(verify_hodge_union(k, d));
    guarded(rep, "normalized range " + sd(d), [&] { rep.merge(verify_normalized_range(k, d)); });
  }
  return rep;
}

VerificationReport section_signed_map(const NamedComplex& c, const HarnessOptions&) {
  VerificationReport rep("signed-map");
  const auto& k = c.complex;
  for (int d = 0; d < k.dim(); ++d) {
    guarded(rep, "affine map " + sd(d), [&] { rep.merge(verify_affine_map(k, d)); });
    guarded(rep, "reflection identity " + sd(d), [&] { rep.merge(verify_reflection_identity(k, d)); });
  }
  return rep;
}

VerificationReport section_gap_d2(const NamedComplex& c, const HarnessOptions& opt) {
  VerificationReport rep("gap-d2");
  const auto& k = c.complex;
  for (int d = 0; d < k.dim(); ++d) {
    if (k.count(d) > kGapMaxSimplices) {
      rep.note("gap from d+2 " + sd(d), "skipped", "size",
               std::to_string(k.count(d)) + " d-simplices above " + std::to_string(kGapMaxSimplices));
      continue;
    }
    guarded(rep, "gap from d+2 " + sd(d), [&] { rep.merge(verify_gap_dplus2(k, d, 3, opt.threads, opt.limits)); });
  }
  return rep;
}

VerificationReport section_rough(const NamedComplex& c, const HarnessOptions& opt) {
  VerificationReport rep("rough-cheeger");
  const auto& k = c.complex;
  const GridOptions g{6, opt.threads, opt.limits};
  for (int d = 0; d < k.dim(); ++d) {
    if (!positive_degrees(k, d)) {
      rep.note("rough Cheeger " + sd(d), "skipped", "precondition", "a d-simplex has up-degree 0");
      continue;
    }
    guarded(rep, "rough Cheeger " + sd(d), [&] { rep.merge(verify_rough_cheeger(k, d, g)); });
  }
  return rep;
}

VerificationReport section_equivalence(const NamedComplex& c, const HarnessOptions& opt) {
  VerificationReport rep("d1d4-equivalence");
  const auto& k = c.complex;
  const GridOptions g{kEquivalenceMaxM, opt.threads, opt.limits};
  for (int d = 0; d < k.dim(); ++d) {
    const std::string at = " " + sd(d);
    // A nonzero cohomology class settles every definition at 0 without a sweep.
    if (k.count(d) > kEquivalenceMaxSimplices && reduced_betti(k, d) == 0) {
      rep.note("four definitions" + at, "skipped", "size",
               std::to_string(k.count(d)) + " d-simplices above " + std::to_string(kEquivalenceMaxSimplices));
      continue;
    }
    if (!positive_degrees(k, d)) {
      rep.note("four definitions" + at, "skipped", "precondition", "a d-simplex has up-degree 0");
      continue;
    }
    guarded(rep, "four definitions" + at, [&] {
      const CheegerReport d1 = h_sigma_d_bruteforce(k, d, g);
      const CheegerReport d2 = h_sigma_d_zexpander(k, d, g);
      const CheegerReport d4 = h_sigma_d_filling(k, d, g);
      for (const auto* r : {&d1, &d2, &d4})
        if (r->capped || !r->stabilized) {
          rep.note("four definitions" + at, r->method, r->value.str(), "grid did not stabilize by M=3: " + r->note);
          return;
        }
      rep.expect("D1 = D2" + at, d1.value == d2.value, d1.value.str(), d2.value.str(),
                 "stabilized at M=" + std::to_string(d1.stabilized_at_m) + "/" + std::to_string(d2.stabilized_at_m));
      rep.expect("D2 = D4" + at, d2.value == d4.value, d2.value.str(), d4.value.str(),
                 "stabilized at M=" + std::to_string(d2.stabilized_at_m) + "/" + std::to_string(d4.stabilized_at_m));
      for (const auto* r : {&d1, &d2, &d4}) {
        const D3Certificate cert = certify_d3(k, d, *r);
        rep.expect("D3 certificate for " + r->method + at, cert.certified, cert.ratio.str(), r->value.str(),
                   cert.reason);
      }
      guarded(rep, "circuits cross-check" + at, [&] {
        const CheegerReport cr = h_sigma_d_circuits(k, d, opt.limits);
        rep.expect("circuits = D2" + at, cr.value == d2.value, cr.value.str(), d2.value.str(), cr.note);
      });
    });
  }
  return rep;
}

VerificationReport section_manifold(const NamedComplex& c, const HarnessOptions& opt) {
  VerificationReport rep("manifold-diameter");
  const auto& k = c.complex;
  const auto info = pseudomanifold_info(k);
  if (!info.closed || !info.connected) {
    rep.note("manifold families", "skipped", "precondition", "not a closed connected pseudomanifold");
    return rep;
  }
  const int d = k.dim() - 1;
  guarded(rep, "diameter formula", [&] {
    const Rational formula = diameter_formula(k);
    const CheegerReport exact = h_sigma_d(k, d, {6, opt.threads, opt.limits});
    rep.expect("h(Sigma_d) = 1/diam (" + exact.method + ")", exact.value == formula, exact.value.str(),
               formula.str(), exact.note);
    const CheegerReport dual = h_infinity_dual(k);
    rep.expect("h(Sigma_d) = 1/diam (infinity dual)", dual.value == formula, dual.value.str(), formula.str());
    guarded(rep, "grid bracket", [&] {
      CheegerReport grid;
      try {
        grid = h_sigma_d_zexpander(k, d, {3, opt.threads, opt.limits});
      } catch (const CapacityError& e) {
        // No grid fits: bracket by the dual LP value below and the Rayleigh ratio
        // of the exact minimizer's representative above.
        const D3Certificate cert = certify_d3(k, d, exact);
        const bool ok = !(formula < dual.value) && !cert.ratio.is_zero() && !(cert.ratio < formula);
        rep.expect("bracket [dual LP, witness ratio] contains 1/diam", ok,
                   "[" + dual.value.str() + ", " + cert.ratio.str() + "]", formula.str(),
                   std::string("grid refused: ") + e.what());
        return;
      }
      if (grid.stabilized && !grid.capped)
        rep.expect("h(Sigma_d) = 1/diam (grid)", grid.value == formula, grid.value.str(), formula.str(),
                   "stabilized at M=" + std::to_string(grid.stabilized_at_m));
      else
        rep.expect("grid upper bound >= 1/diam", !(grid.value < formula), grid.value.str(), formula.str(),
                   grid.note);
    });
  });
  guarded(rep, "down bounds", [&] { rep.merge(verify_down_bounds(k)); });
  return rep;
}

VerificationReport section_p_family(const NamedComplex& c, const HarnessOptions& opt) {
  VerificationReport rep("p-family");
  const auto& k = c.complex;
  POptions po;
  po.restarts = opt.restarts;
  po.seed = opt.seed;
  po.threads = opt.threads;
  po.grid = {6, opt.threads, opt.limits};
  for (int d = 0; d < k.dim(); ++d) {
    const std::string at = " " + sd(d);
    if (!positive_degrees(k, d)) {
      rep.note("p-family" + at, "skipped", "precondition", "a d-simplex has up-degree 0");
      continue;
    }
    guarded(rep, "max_eig_p at p=2" + at, [&] {
      const double lin =
          eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::normalized})).back();
      const auto est = max_eig_p({&k, d, 2.0, Direction::up, true}, opt.restarts, opt.seed, opt.threads);
      rep.expect("max_eig_p(p=2) = lambda_n" + at, std::abs(est.value - lin) <= 1e-6, fmt(est.value), fmt(lin));
    });
    if (k.count(d) <= kGapMaxSimplices) {
      guarded(rep, "gap p=2" + at, [&] { rep.merge(verify_gap_p(k, d, 2.0, po)); });
      guarded(rep, "gap p=1.5" + at, [&] { rep.merge(verify_gap_p(k, d, 1.5, po)); });
    }
    guarded(rep, "duality p=3" + at, [&] { rep.merge(verify_p_duality(k, d, 3.0, po)); });
    guarded(rep, "duality p=2" + at, [&] { rep.merge(verify_p_duality(k, d, 2.0, po)); });
    guarded(rep, "rough Cheeger p=1.5" + at, [&] { rep.merge(verify_rough_cheeger_p(k, d, 1.5, po)); });
  }
  return rep;
}

VerificationReport section_z2(const NamedComplex& c, const HarnessOptions& opt) {
  VerificationReport rep("z2");
  const auto& k = c.complex;
  for (int d = 0; d < k.dim(); ++d) {
    const std::string at = " " + sd(d);
    guarded(rep, "z2 Cheeger" + at, [&] {
      const CheegerReport z = z2_cheeger(k, d, opt.limits);
      const std::size_t red = reduced_betti(k, d, Field::gf2);
      rep.expect("z2 value vanishes iff reduced GF(2) Betti > 0" + at, z.value.is_zero() == (red > 0), z.value.str(),
                 "b~_d(GF2) = " + std::to_string(red));
      guarded(rep, "z2 vs rational" + at, [&] {
        const CheegerReport h = h_sigma_d(k, d, {3, opt.threads, opt.limits});
        rep.note("z2 vs rational h" + at, z.value.str(), h.value.str(),
                 z.value.is_zero() && !h.value.is_zero() ? "Z_2 vanishes while the rational constant does not" : "");
      });
    });
  }
  return rep;
}

using SectionFn = VerificationReport (*)(const NamedComplex&, const HarnessOptions&);

const std::vector<std::pair<std::string, SectionFn>>& registry() {
  static const std::vector<std::pair<std::string, SectionFn>> r{
      {"eckmann", section_eckmann},
      {"duality", section_duality},
      {"signed-map", section_signed_map},
      {"gap-d2", section_gap_d2},
      {"rough-cheeger", section_rough},
      {"d1d4-equivalence", section_equivalence},
      {"manifold-diameter", section_manifold},
      {"p-family", section_p_family},
      {"z2", section_z2},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& harness_sections() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

std::vector<std::string> parse_sections(const std::string& csv) {
  if (csv.empty() || csv == "all") return harness_sections();
  std::vector<std::string> out;
  std::size_t b = 0;
  while (b <= csv.size()) {
    const std::size_t e = std::min(csv.find(',', b), csv.size());
    const std::string s = csv.substr(b, e - b);
    const auto& all = harness_sections();
    if (std::find(all.begin(), all.end(), s) == all.end()) throw MalformedInput("unknown section '" + s + "'");
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    b = e + 1;
  }
  return out;
}

std::vector<VerificationReport> run_harness(const NamedComplex& c, const HarnessOptions& opt) {
  const auto wanted = opt.sections.empty() ? harness_sections() : opt.sections;
  std::vector<VerificationReport> out;
  for (const auto& [name, fn] : registry())
    if (std::find(wanted.begin(), wanted.end(), name) != wanted.end()) out.push_back(fn(c, opt));
  return out;
}

nlohmann::json harness_to_json(const NamedComplex& c, const std::vector<VerificationReport>& reports) {
  nlohmann::json j;
  j["complex"] = c.name;
  j["digest"] = complex_digest(c.complex);
  bool ok = true;
  j["sections"] = nlohmann::json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    j["sections"].push_back(r.to_json());
  }
  j["passed"] = ok;
  return j;
}

}  // namespace cpx
