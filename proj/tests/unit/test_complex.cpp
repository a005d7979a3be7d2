#include <gtest/gtest.h>

#include <cpx/complex.hpp>
#include <cpx/complex_io.hpp>
#include <cpx/error.hpp>
#include <cpx/generators.hpp>

using cpx::Field;

TEST(Complex, ClosureOfTriangle) {
  const auto k = cpx::build_complex({{0, 1, 2}});
  EXPECT_EQ(k.dim(), 2);
  EXPECT_EQ(k.count(0), 3U);
  EXPECT_EQ(k.count(1), 3U);
  EXPECT_EQ(k.count(2), 1U);
}

TEST(Complex, HollowTriangle) {
  const auto k = cpx::build_complex({{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(k.dim(), 1);
  EXPECT_EQ(k.count(1), 3U);
  EXPECT_EQ(cpx::betti_numbers(k), (std::vector<std::size_t>{1, 1}));
}

TEST(Complex, MalformedFacets) {
  EXPECT_THROW(cpx::build_complex({{0, 0, 1}}), cpx::MalformedInput);
  EXPECT_THROW(cpx::build_complex({{-1, 2}}), cpx::MalformedInput);
  EXPECT_THROW(cpx::build_complex({{}}), cpx::MalformedInput);
}

TEST(Complex, IncidenceSigns) {
  const auto k = cpx::build_complex({{0, 1, 2}});
  const auto b2 = cpx::incidence_matrix(k, 2);
  // edges 01, 02, 12; d[012] = 12 - 02 + 01
  EXPECT_EQ(b2(0, 0), 1);
  EXPECT_EQ(b2(1, 0), -1);
  EXPECT_EQ(b2(2, 0), 1);
  EXPECT_THROW(cpx::incidence_matrix(k, 3), cpx::DimensionError);
  EXPECT_EQ(cpx::coboundary(k, 2).rows(), 0U);
}

TEST(Complex, TorusCountsAndEuler) {
  const auto k = cpx::torus_7().complex;
  EXPECT_EQ(k.count(0), 7U);
  EXPECT_EQ(k.count(1), 21U);
  EXPECT_EQ(k.count(2), 14U);
  EXPECT_EQ(k.euler_characteristic(), 0);
  EXPECT_EQ(cpx::betti_numbers(k), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Complex, ProjectivePlaneFieldsDiffer) {
  const auto k = cpx::rp2_6().complex;
  EXPECT_EQ(cpx::betti_numbers(k, Field::rationals), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(cpx::betti_numbers(k, Field::gf2), (std::vector<std::size_t>{1, 1, 1}));
}

TEST(Complex, EulerMatchesBettiAcrossSuite) {
  for (const auto& c : cpx::builtin_suite()) {
    std::int64_t alt = 0;
    const auto b = cpx::betti_numbers(c.complex);
    for (std::size_t d = 0; d < b.size(); ++d) alt += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(b[d]);
    EXPECT_EQ(alt, c.complex.euler_characteristic()) << c.name;
  }
}

TEST(ComplexIo, RoundTripAndDigest) {
  const auto k = cpx::octahedron().complex;
  const auto again = cpx::complex_from_json(cpx::complex_to_json(k));
  EXPECT_EQ(k, again);
  EXPECT_EQ(cpx::complex_digest(k), cpx::complex_digest(again));
  EXPECT_EQ(cpx::complex_digest(k).size(), 16U);
  EXPECT_NE(cpx::complex_digest(k), cpx::complex_digest(cpx::icosahedron().complex));
}

TEST(ComplexIo, SimplicesFormMustBeClosed) {
  EXPECT_NO_THROW(cpx::parse_complex(R"({"simplices": {"0": [[0],[1]], "1": [[0,1]]}})"));
  EXPECT_THROW(cpx::parse_complex(R"({"simplices": {"0": [[0]], "1": [[0,1]]}})"), cpx::MalformedInput);
  EXPECT_THROW(cpx::parse_complex("{not json"), cpx::MalformedInput);
  EXPECT_THROW(cpx::load_complex("/nonexistent/complex.json"), cpx::IoError);
}

TEST(Generators, ExpectedRecordsHold) {
  for (const auto& c : cpx::builtin_suite()) EXPECT_NO_THROW(cpx::check_expected(c)) << c.name;
}

TEST(Generators, Constructions) {
  const auto s2 = cpx::boundary_of_simplex(3).complex;
  EXPECT_EQ(s2.count(0), 4U);
  EXPECT_EQ(s2.count(1), 6U);
  EXPECT_EQ(s2.count(2), 4U);
  EXPECT_EQ(cpx::boundary_of_simplex(4).complex.euler_characteristic(), 0);
  EXPECT_EQ(cpx::boundary_of_simplex(2).complex, cpx::cycle_graph(3).complex);

  const auto ico = cpx::icosahedron().complex;
  EXPECT_EQ(ico.euler_characteristic(), 2);
  EXPECT_EQ(cpx::octahedron().expected->dual_diameter, 3U);
  EXPECT_EQ(cpx::icosahedron().expected->dual_diameter, 5U);

  const auto cone = cpx::cone(cpx::torus_7()).complex;
  EXPECT_EQ(cpx::betti_numbers(cone), (std::vector<std::size_t>{1, 0, 0, 0}));

  const auto k4 = cpx::k_skeleton(cpx::boundary_of_simplex(3), 1).complex;
  EXPECT_EQ(k4.dim(), 1);
  EXPECT_EQ(k4.count(1), 6U);

  const auto two = cpx::disjoint_union(cpx::octahedron(), cpx::octahedron()).complex;
  EXPECT_EQ(cpx::betti_numbers(two)[0], 2U);
}

TEST(Generators, ClosedSurfacesHaveTwoCofacesPerEdge) {
  for (const auto& c : {cpx::torus_7(), cpx::rp2_6(), cpx::octahedron(), cpx::icosahedron()})
    for (auto deg : c.complex.up_degrees(1)) EXPECT_EQ(deg, 2) << c.name;
}

TEST(Generators, NamesAndDeterminism) {
  EXPECT_EQ(cpx::generate("torus_7").complex, cpx::generate("torus7").complex);
  EXPECT_EQ(cpx::generate("cone(cycle:4)").complex, cpx::cone(cpx::cycle_graph(4)).complex);
  EXPECT_EQ(cpx::generate("triangle").complex, cpx::full_simplex(2).complex);
  EXPECT_THROW(cpx::generate("klein_bottle"), cpx::MalformedInput);
}
