// cpx: command-line front end for the cheegerplex library.
//
// Exit codes: 0 ok, 1 an assertion failed, 2 I/O / parse / format / invalid request,
// 3 a capacity limit was exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cpx/cheeger.hpp"
#include "cpx/complex_io.hpp"
#include "cpx/error.hpp"
#include "cpx/generators.hpp"
#include "cpx/harness.hpp"
#include "cpx/laplacians.hpp"
#include "cpx/limits.hpp"
#include "cpx/p_laplacian.hpp"

namespace {

using nlohmann::json;

struct Common {
  std::string input;
  std::string gen;
  std::size_t threads = 1;
  std::string capacity;
};

struct Run {
  json results = json::object();
  std::vector<cpx::VerificationReport> reports;
};

cpx::NamedComplex load(const Common& c) {
  if (!c.input.empty() && !c.gen.empty()) throw cpx::MalformedInput("give either --input or --gen, not both");
  if (!c.gen.empty()) return cpx::generate(c.gen);
  if (c.input.empty()) throw cpx::MalformedInput("an input complex is required (--input FILE or --gen NAME)");
  return cpx::load_named_complex(c.input);
}

cpx::Limits limits_of(const Common& c) {
  cpx::Limits l = cpx::Limits::from_env();
  if (!c.capacity.empty()) l.apply_overrides(c.capacity);
  return l;
}

json fraction(const cpx::Rational& r) { return {{"exact", r.str()}, {"float", r.to_double()}}; }

json cochain(const std::vector<cpx::Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.str());
  return a;
}

json to_json(const cpx::CheegerReport& r) {
  json j{{"method", r.method}, {"value", fraction(r.value)}, {"witness", r.witness}};
  if (!r.image.empty()) j["image"] = r.image;
  if (!r.representative.empty()) j["representative"] = cochain(r.representative);
  if (!r.sweep.empty()) {
    json s = json::array();
    for (const auto& [m, v] : r.sweep) s.push_back({{"M", m}, {"value", v.str()}});
    j["sweep"] = s;
    j["stabilized"] = r.stabilized;
    j["stabilized_at_M"] = r.stabilized_at_m;
    j["capped"] = r.capped;
  }
  j["vanishing"] = r.vanishing;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--input,-i", c.input, "JSON complex ({\"facets\": ...} or {\"simplices\": {...}})");
  app->add_option("--gen,-g", c.gen, "generator name, e.g. boundary_simplex:3, cone(rp2)");
  app->add_option("--threads", c.threads, "worker cap; results do not depend on it")->check(CLI::PositiveNumber);
  app->add_option("--capacity", c.capacity, "limit overrides key=value,... (also CPX_CAPACITY)");
}

int finish(const std::vector<std::string>& argv, const cpx::NamedComplex* k, Run& run) {
  json out;
  std::string cmd = "cpx";
  for (std::size_t i = 1; i < argv.size(); ++i) cmd += " " + argv[i];
  out["command"] = cmd;
  if (k) {
    out["complex"] = k->name;
    out["digest"] = cpx::complex_digest(k->complex);
  }
  out["results"] = run.results;
  json assertions = json::array();
  std::size_t failed = 0, passed = 0, reported = 0;
  for (const auto& r : run.reports) {
    for (const auto& c : r.checks()) {
      json a{{"section", r.section()}, {"name", c.name}, {"status", cpx::to_string(c.status)}, {"lhs", c.lhs},
             {"rhs", c.rhs}};
      if (!c.detail.empty()) a["detail"] = c.detail;
      assertions.push_back(a);
      if (c.status == cpx::Status::fail) {
        ++failed;
        std::cerr << "FAIL [" << r.section() << "] " << c.name << ": " << c.lhs << " vs " << c.rhs
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      } else if (c.status == cpx::Status::pass) {
        ++passed;
      } else {
        ++reported;
      }
    }
  }
  out["assertions"] = assertions;
  out["passed"] = failed == 0;
  std::cout << out.dump(2) << "\n";
  std::cerr << (k ? k->name + ": " : std::string()) << passed << " passed, " << failed << " failed, " << reported
            << " report-only\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Spectra and Cheeger constants of simplicial complexes"};
  app.require_subcommand(1);

  // gen
  std::string gen_name;
  auto* gen = app.add_subcommand("gen", "emit a generated complex in the JSON facet format");
  gen->add_option("name", gen_name, "generator name")->required();

  // spectra
  Common sc;
  int sp_dim = 0;
  std::string sp_kind = "full";
  bool sp_normalized = false;
  auto* spectra = app.add_subcommand("spectra", "Laplacian spectrum with I_d and zero multiplicity");
  add_common(spectra, sc);
  spectra->add_option("--dim,-d", sp_dim, "dimension d")->required();
  spectra->add_option("--kind", sp_kind, "up | down | full");
  spectra->add_flag("--normalized", sp_normalized, "degree-normalized operator");

  // cheeger
  Common cc;
  int ch_dim = -1;
  std::string which = "gap0";
  bool all_defs = false;
  std::size_t kway = 1;
  std::int64_t max_m = 6;
  auto* cheeger = app.add_subcommand("cheeger", "Cheeger constants with witnesses");
  add_common(cheeger, cc);
  cheeger->add_option("--dim,-d", ch_dim, "dimension d (default: top-1 for diam/dual, else 0)");
  cheeger->add_option("--which", which, "gap0 | gapd2 | down | z2 | diam | dual")
      ->check(CLI::IsMember({"gap0", "gapd2", "down", "z2", "diam", "dual"}));
  cheeger->add_flag("--all-defs", all_defs, "gap0: run all definitions and the certificate");
  cheeger->add_option("--k", kway, "gapd2: number of pairs")->check(CLI::PositiveNumber);
  cheeger->add_option("--max-m", max_m, "largest grid radius")->check(CLI::PositiveNumber);

  // plap
  Common pc;
  int pl_dim = 0;
  double pl_p = 2.0;
  std::string pl_which = "max";
  std::size_t restarts = 32, samples = 4000, ck = 3;
  std::uint64_t seed = 0;
  std::string direction = "up";
  bool unnormalized = false;
  auto* plap = app.add_subcommand("plap", "p-Laplacian estimates and inequality checks");
  add_common(plap, pc);
  plap->add_option("--dim,-d", pl_dim, "dimension d");
  plap->add_option("--p,-p", pl_p, "exponent p")->check(CLI::Range(1.0, 1e6));
  plap->add_option("--which", pl_which, "max | gap | duality | rough | constants")
      ->check(CLI::IsMember({"max", "gap", "duality", "rough", "constants"}));
  plap->add_option("--restarts", restarts, "ascent restarts")->check(CLI::PositiveNumber);
  plap->add_option("--seed", seed, "random seed");
  plap->add_option("--samples", samples, "random samples for claim constants");
  plap->add_option("--k", ck, "constants: k")->check(CLI::Range(2, 12));
  plap->add_option("--direction", direction, "max: up | down")->check(CLI::IsMember({"up", "down"}));
  plap->add_flag("--unnormalized", unnormalized, "max: unit weights");

  // verify
  Common vc;
  bool suite = false;
  std::string sections = "all";
  std::uint64_t vseed = 0;
  std::size_t vrestarts = 32;
  auto* verify = app.add_subcommand("verify", "run assertion families on a complex or the built-in suite");
  add_common(verify, vc);
  verify->add_flag("--suite", suite, "run over the built-in suite");
  verify->add_option("--sections", sections, "comma-separated families or 'all'");
  verify->add_option("--seed", vseed, "random seed for the p-family");
  verify->add_option("--restarts", vrestarts, "ascent restarts for the p-family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      const auto k = cpx::generate(gen_name);
      json out = cpx::complex_to_json(k.complex);
      out["name"] = k.name;
      std::cout << out.dump(2) << "\n";
      std::cerr << k.name << ": " << k.complex.vertices().size() << " vertices, dim " << k.complex.dim() << "\n";
      return 0;
    }

    if (*spectra) {
      const auto k = load(sc);
      cpx::LaplacianSpec spec{sp_dim, cpx::parse_kind(sp_kind),
                              sp_normalized ? cpx::Normalization::normalized : cpx::Normalization::unnormalized};
      const auto rep = cpx::spectral_report(k.complex, spec);
      Run run;
      const auto betti = cpx::betti_numbers(k.complex);
      const std::size_t bd = static_cast<std::size_t>(sp_dim) < betti.size() ? betti[sp_dim] : 0;
      run.results = {{"operator", cpx::describe(spec)},
                     {"eigenvalues", rep.eigenvalues},
                     {"zero_multiplicity", rep.zero_multiplicity},
                     {"I_d", rep.first_nontrivial_index},
                     {"n", rep.n},
                     {"betti", bd}};
      cpx::VerificationReport v("spectra");
      if (spec.kind == cpx::LaplacianKind::full && spec.normalization == cpx::Normalization::unnormalized)
        v.expect("zero multiplicity = b_d", rep.zero_multiplicity == bd, cpx::fmt(rep.zero_multiplicity),
                 cpx::fmt(bd));
      if (spec.kind == cpx::LaplacianKind::up && spec.normalization == cpx::Normalization::normalized)
        v.merge(cpx::verify_normalized_range(k.complex, sp_dim));
      run.reports.push_back(std::move(v));
      return finish(args, &k, run);
    }

    if (*cheeger) {
      const auto k = load(cc);
      const cpx::GridOptions g{max_m, cc.threads, limits_of(cc)};
      const int top = k.complex.dim();
      const int d = ch_dim >= 0 ? ch_dim : ((which == "diam" || which == "dual") ? top - 1 : 0);
      Run run;
      run.results["dim"] = d;
      cpx::VerificationReport v("cheeger");
      if (which == "gap0") {
        const auto h = cpx::h_sigma_d(k.complex, d, g);
        run.results["h"] = to_json(h);
        if (all_defs) {
          const auto d1 = cpx::h_sigma_d_bruteforce(k.complex, d, g);
          const auto d2 = cpx::h_sigma_d_zexpander(k.complex, d, g);
          const auto d4 = cpx::h_sigma_d_filling(k.complex, d, g);
          run.results["D1"] = to_json(d1);
          run.results["D2"] = to_json(d2);
          run.results["D4"] = to_json(d4);
          v.expect("D1 = D2", d1.value == d2.value, d1.value.str(), d2.value.str());
          v.expect("D2 = D4", d2.value == d4.value, d2.value.str(), d4.value.str());
          v.expect("D4 = h", d4.value == h.value, d4.value.str(), h.value.str(), h.method);
          const auto cert = cpx::certify_d3(k.complex, d, d2);
          run.results["D3"] = {{"certified", cert.certified}, {"ratio", cert.ratio.str()}, {"x", cochain(cert.x)},
                               {"u", cochain(cert.u)}};
          v.expect("D3 certificate", cert.certified, cert.ratio.str(), d2.value.str(), cert.reason);
          for (const auto* r : {&d1, &d2, &d4})
            if (r->capped || !r->stabilized) v.note("grid status " + r->method, r->value.str(), "upper bound", r->note);
        }
      } else if (which == "gapd2") {
        run.results["h_k"] = to_json(cpx::h_k_sigma(k.complex, d, kway, cc.threads, g.limits));
        run.results["k"] = kway;
        v.merge(cpx::verify_gap_dplus2(k.complex, d, kway, cc.threads, g.limits));
      } else if (which == "down") {
        run.results["h_down"] = to_json(cpx::h_down(k.complex, d, g));
      } else if (which == "z2") {
        const auto z = cpx::z2_cheeger(k.complex, d, g.limits);
        run.results["z2"] = to_json(z);
        try {
          const auto h = cpx::h_sigma_d(k.complex, d, g);
          run.results["h"] = to_json(h);
          const bool mismatch = z.value.is_zero() && !h.value.is_zero();
          run.results["z2_rational_mismatch"] = mismatch;
          v.note("z2 vs rational h", z.value.str(), h.value.str(),
                 mismatch ? "Z_2 constant vanishes while the rational constant is positive" : "");
        } catch (const cpx::CapacityError& e) {
          v.note("z2 vs rational h", z.value.str(), "skipped", e.what());
        }
      } else if (which == "diam") {
        const auto f = cpx::diameter_formula(k.complex);
        run.results["diameter_formula"] = fraction(f);
      } else {
        run.results["infinity_dual"] = to_json(cpx::h_infinity_dual(k.complex));
      }
      run.reports.push_back(std::move(v));
      return finish(args, &k, run);
    }

    if (*plap) {
      const auto k = load(pc);
      cpx::POptions po;
      po.restarts = restarts;
      po.seed = seed;
      po.samples = samples;
      po.threads = pc.threads;
      po.grid = {6, pc.threads, limits_of(pc)};
      Run run;
      run.results["p"] = pl_p;
      run.results["dim"] = pl_dim;
      if (pl_which == "max") {
        cpx::PRayleighProblem prob{&k.complex, pl_dim, pl_p,
                                   direction == "up" ? cpx::Direction::up : cpx::Direction::down, !unnormalized};
        const auto est = cpx::max_eig_p(prob, restarts, seed, pc.threads);
        run.results["lambda_max"] = {{"value", est.value}, {"argument", est.argument}, {"restarts", est.restarts},
                                     {"converged", est.converged}};
      } else if (pl_which == "constants") {
        const auto [m, big_m] = cpx::estimate_claim_constants(pl_p, ck, samples, seed);
        run.results["k"] = ck;
        run.results["m_est"] = m;
        run.results["M_est"] = big_m;
      } else if (pl_which == "gap") {
        run.reports.push_back(cpx::verify_gap_p(k.complex, pl_dim, pl_p, po));
      } else if (pl_which == "duality") {
        run.reports.push_back(cpx::verify_p_duality(k.complex, pl_dim, pl_p, po));
      } else {
        run.reports.push_back(cpx::verify_rough_cheeger_p(k.complex, pl_dim, pl_p, po));
      }
      return finish(args, &k, run);
    }

    if (*verify) {
      cpx::HarnessOptions ho;
      ho.sections = cpx::parse_sections(sections);
      ho.threads = vc.threads;
      ho.limits = limits_of(vc);
      ho.seed = vseed;
      ho.restarts = vrestarts;
      std::vector<cpx::NamedComplex> targets;
      if (suite) {
        if (!vc.input.empty() || !vc.gen.empty()) throw cpx::MalformedInput("--suite excludes --input/--gen");
        targets = cpx::builtin_suite();
      } else {
        targets.push_back(load(vc));
      }
      Run run;
      json per = json::array();
      for (const auto& t : targets) {
        auto reps = cpx::run_harness(t, ho);
        per.push_back(cpx::harness_to_json(t, reps));
        for (auto& r : reps) {
          cpx::VerificationReport tagged(t.name + "/" + r.section());
          tagged.merge(r);
          run.reports.push_back(std::move(tagged));
        }
      }
      run.results["complexes"] = per;
      return finish(args, targets.size() == 1 ? &targets.front() : nullptr, run);
    }
  } catch (const cpx::CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << " [limit " << e.limit_name() << " = " << e.limit() << "]\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const cpx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
