#include <gtest/gtest.h>

#include <cpx/error.hpp>
#include <cpx/generators.hpp>
#include <cpx/numlin.hpp>
#include <cpx/signed_graph.hpp>

#include "../support/corpus.hpp"

#include <cmath>

using cpx::Rational;
using cpx::SignedGraph;

namespace {

SignedGraph triangle(int sign) { return SignedGraph(3, {{0, 1, sign}, {1, 2, sign}, {0, 2, sign}}); }

std::vector<double> spectrum(const SignedGraph& g) { return cpx::eigenvalues_symmetric(cpx::signed_laplacian(g)); }

}  // namespace

TEST(SignedGraph, RejectsBadInput) {
  EXPECT_THROW(SignedGraph(2, {{0, 0, 1}}), cpx::MalformedInput);
  EXPECT_THROW(SignedGraph(2, {{0, 1, 1}, {1, 0, -1}}), cpx::MalformedInput);
  EXPECT_THROW(SignedGraph(2, {{0, 1, 2}}), cpx::MalformedInput);
  EXPECT_THROW(SignedGraph(2, {{0, 5, 1}}), cpx::MalformedInput);
}

TEST(SignedGraph, UpGraphOfTriangle) {
  const auto g = cpx::build_up_signed_graph(cpx::generate("triangle").complex, 0);
  ASSERT_EQ(g.order(), 3U);
  ASSERT_EQ(g.edges().size(), 3U);
  // Each edge [u,v] has boundary signs +1 at v and -1 at u.
  for (const auto& e : g.edges()) EXPECT_EQ(e.sign, -1);
  const auto lap = cpx::build_up_signed_graph(cpx::generate("triangle").complex, 0, cpx::SignConvention::laplacian);
  for (const auto& e : lap.edges()) EXPECT_EQ(e.sign, 1);
}

TEST(SignedGraph, UpGraphOfTetrahedronBoundary) {
  const auto g = cpx::build_up_signed_graph(cpx::boundary_of_simplex(3).complex, 1);
  EXPECT_EQ(g.order(), 6U);
  EXPECT_EQ(g.edges().size(), 12U);
  EXPECT_THROW(cpx::build_up_signed_graph(cpx::boundary_of_simplex(3).complex, 2), cpx::DimensionError);
}

TEST(SignedGraph, SmallSpectra) {
  const auto path = spectrum(SignedGraph(2, {{0, 1, 1}}));
  EXPECT_NEAR(path[0], 0.0, 1e-12);
  EXPECT_NEAR(path[1], 2.0, 1e-12);
  EXPECT_NEAR(spectrum(triangle(-1)).back(), 2.0, 1e-12);
  EXPECT_NEAR(spectrum(triangle(-1)).front(), 0.5, 1e-12);
}

TEST(SignedGraph, BalanceVerdicts) {
  const auto pos = cpx::balance_decompose(triangle(1));
  ASSERT_EQ(pos.size(), 1U);
  EXPECT_TRUE(pos[0].balanced);
  EXPECT_FALSE(pos[0].antibalanced);

  const SignedGraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, -1}});
  const auto one_neg = cpx::balance_decompose(c4);
  EXPECT_FALSE(one_neg[0].balanced);
  EXPECT_FALSE(one_neg[0].antibalanced);

  const SignedGraph even(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
  const auto both = cpx::balance_decompose(even);
  EXPECT_TRUE(both[0].balanced);
  EXPECT_TRUE(both[0].antibalanced);
}

TEST(SignedGraph, WitnessesSwitchToUniformSigns) {
  for (const auto& g : cpx::testing::signed_corpus(20)) {
    for (const auto& comp : cpx::balance_decompose(g)) {
      if (comp.balanced)
        for (const auto& e : g.switched(comp.balancing_switch).edges()) EXPECT_EQ(e.sign, 1);
      if (comp.antibalanced)
        for (const auto& e : g.switched(comp.antibalancing_switch).edges()) EXPECT_EQ(e.sign, -1);
    }
  }
}

TEST(SignedGraph, CheegerSmallCases) {
  EXPECT_EQ(cpx::signed_cheeger(SignedGraph(2, {{0, 1, 1}}), 1).value, Rational(0));
  // Negative triangle: best is one vertex against the other two, 2 / 6.
  EXPECT_EQ(cpx::signed_cheeger(triangle(-1), 1).value, Rational(1, 3));
  EXPECT_EQ(cpx::signed_cheeger(triangle(1), 1).value, Rational(0));
  EXPECT_EQ(cpx::signed_bipartiteness(triangle(-1), {1, 2, 2}), Rational(1, 3));
}

TEST(SignedGraph, CapacityGuard) {
  std::vector<cpx::SignedEdge> edges;
  for (std::size_t v = 1; v < 17; ++v) edges.push_back({v - 1, v, 1});
  const SignedGraph path(17, edges);
  EXPECT_THROW(cpx::signed_cheeger(path, 1), cpx::CapacityError);
  EXPECT_THROW(cpx::signed_cheeger_enumerate(path, 1), cpx::CapacityError);
}

TEST(SignedCorpus, BalanceSpectralAndEnumerationAgree) {
  for (const auto& g : cpx::testing::signed_corpus()) {
    const auto bfs = cpx::balance_decompose(g);
    const auto brute = cpx::balance_by_enumeration(g, 12);
    ASSERT_EQ(bfs.size(), 1U);
    ASSERT_EQ(brute.size(), 1U);
    EXPECT_EQ(bfs[0].balanced, brute[0].balanced);
    EXPECT_EQ(bfs[0].antibalanced, brute[0].antibalanced);
    const auto ev = spectrum(g);
    EXPECT_EQ(bfs[0].balanced, std::abs(ev.front()) < cpx::kZeroTol);
    EXPECT_EQ(bfs[0].antibalanced, std::abs(ev.back() - 2.0) < cpx::kZeroTol);
  }
}

TEST(SignedCorpus, SignedCheegerInequality) {
  for (const auto& g : cpx::testing::signed_corpus()) {
    const double lambda1 = spectrum(g).front();
    const double h = cpx::signed_cheeger(g, 1).value.to_double();
    EXPECT_LE(lambda1 / 2, h + 1e-12);
    EXPECT_LE(h, std::sqrt(2 * std::max(lambda1, 0.0)) + 1e-12);
  }
}

TEST(SignedCorpus, SupportSearchMatchesEnumeration) {
  for (const auto& g : cpx::testing::signed_corpus()) {
    for (std::size_t k = 1; k <= 3; ++k) {
      if (k > g.order() || g.order() > cpx::Limits{}.signed_cheeger_vertices(k)) continue;
      const auto fast = cpx::signed_cheeger(g, k);
      const auto slow = cpx::signed_cheeger_enumerate(g, k, 4);
      EXPECT_EQ(fast.value, slow.value) << "n=" << g.order() << " k=" << k;
      EXPECT_EQ(fast.assignment, slow.assignment) << "n=" << g.order() << " k=" << k;
      for (const auto& r : fast.pair_ratios) EXPECT_LE(r, fast.value);
    }
  }
}
