#include <gtest/gtest.h>

#include <cpx/cheeger.hpp>
#include <cpx/error.hpp>
#include <cpx/generators.hpp>
#include <cpx/laplacians.hpp>
#include <cpx/p_laplacian.hpp>

#include <cmath>
#include <limits>

namespace {

cpx::PRayleighProblem problem(const cpx::SimplicialComplex& k, int d, double p) {
  cpx::PRayleighProblem prob;
  prob.complex = &k;
  prob.dim = d;
  prob.p = p;
  return prob;
}

}  // namespace

TEST(PRayleigh, Conjugate) {
  cpx::PRayleighProblem prob;
  prob.p = 3.0;
  EXPECT_DOUBLE_EQ(prob.conjugate(), 1.5);
  prob.p = 1.0;
  EXPECT_EQ(prob.conjugate(), std::numeric_limits<double>::infinity());
}

TEST(PRayleigh, LinearCaseWithinSpectrum) {
  const auto k = cpx::boundary_of_simplex(3).complex;
  const auto ev = cpx::spectral_report(k, {1, cpx::LaplacianKind::up, cpx::Normalization::normalized}).eigenvalues;
  const double f[] = {0.3, -1.0, 0.2, 0.7, 0.0, -0.4};
  const double r = cpx::p_rayleigh(problem(k, 1, 2.0), f);
  EXPECT_GE(r, ev.front() - 1e-9);
  EXPECT_LE(r, ev.back() + 1e-9);
}

TEST(PRayleigh, OneLaplacianCutRatio) {
  // Indicator of {0,1} on the 4-cycle: two cut edges over volume 4.
  const auto k = cpx::cycle_graph(4).complex;
  const double f[] = {1.0, 1.0, 0.0, 0.0};
  EXPECT_DOUBLE_EQ(cpx::p_rayleigh(problem(k, 0, 1.0), f), 0.5);
  const double constant[] = {1.0, 1.0, 1.0, 1.0};
  EXPECT_DOUBLE_EQ(cpx::p_rayleigh(problem(k, 0, 1.5), constant), 0.0);
}

TEST(MaxEigP, LinearMatchesEigensolver) {
  for (const auto& c : {cpx::boundary_of_simplex(3), cpx::octahedron(), cpx::generate("triangle")}) {
    const auto ev = cpx::spectral_report(c.complex, {1, cpx::LaplacianKind::up, cpx::Normalization::normalized});
    if (c.complex.dim() < 2) continue;
    EXPECT_NEAR(cpx::max_eig_p(problem(c.complex, 1, 2.0)).value, ev.eigenvalues.back(), 1e-6) << c.name;
  }
}

TEST(MaxEigP, BipartiteGraphReachesTwo) {
  const auto k = cpx::cycle_graph(6).complex;
  EXPECT_NEAR(cpx::max_eig_p(problem(k, 0, 2.0)).value, 2.0, 1e-6);
}

TEST(MaxEigP, SeedDeterministicAndThreadIndependent) {
  const auto k = cpx::octahedron().complex;
  const auto a = cpx::max_eig_p(problem(k, 1, 1.5), 16, 7, 1);
  const auto b = cpx::max_eig_p(problem(k, 1, 1.5), 16, 7, 4);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.argument, b.argument);
}

TEST(ClaimConstants, LinearIdentity) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto [m, mm] = cpx::estimate_claim_constants(2.0, k);
    EXPECT_NEAR(m, 1.0, 1e-9);
    EXPECT_NEAR(mm, 1.0, 1e-9);
  }
}

TEST(ClaimConstants, SpotValueAndSampler) {
  const double x[] = {1.0, -1.0, 0.0};
  const double r = cpx::claim_ratio(1.5, x);
  EXPECT_NEAR(r, 2 * std::sqrt(3.0) / (2 * std::sqrt(2.0) + 2), 1e-12);
  const auto [m, mm] = cpx::estimate_claim_constants(1.5, 3);
  EXPECT_LE(m, r + 1e-12);
  EXPECT_GE(mm, r - 1e-12);
  const double constant[] = {2.0, 2.0, 2.0};
  EXPECT_THROW(cpx::claim_ratio(1.5, constant), cpx::PreconditionError);
}

TEST(PFamily, Verifiers) {
  const auto s2 = cpx::boundary_of_simplex(3).complex;
  const auto tri = cpx::generate("triangle").complex;
  const auto gap2 = cpx::verify_gap_p(s2, 1, 2.0);
  EXPECT_TRUE(gap2.passed());
  EXPECT_TRUE(cpx::verify_gap_p(tri, 0, 1.5).passed());
  EXPECT_TRUE(cpx::verify_p_duality(s2, 1, 3.0).passed());
  EXPECT_TRUE(cpx::verify_p_duality(tri, 0, 3.0).passed());
  EXPECT_TRUE(cpx::verify_p_duality(cpx::cycle_graph(5).complex, 0, 2.0).passed());
  EXPECT_TRUE(cpx::verify_rough_cheeger_p(s2, 1, 2.0).passed());
  EXPECT_TRUE(cpx::verify_rough_cheeger_p(s2, 1, 1.0).passed());
  EXPECT_TRUE(cpx::verify_rough_cheeger_p(cpx::torus_7().complex, 1, 1.5).passed());
}
