#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpx/complex.hpp"

namespace cpx {

struct ExpectedInvariants {
  std::optional<std::vector<std::size_t>> betti_rationals;
  std::optional<std::vector<std::size_t>> betti_gf2;
  std::optional<std::vector<std::size_t>> counts;  // #Sigma_0, #Sigma_1, ...
  std::optional<std::size_t> dual_diameter;
  bool closed = false;  // every codimension-1 face has exactly two cofaces
};

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
  std::optional<ExpectedInvariants> expected;
};

/// Throws std::logic_error naming the first invariant that does not hold.
void check_expected(const NamedComplex& c);

NamedComplex boundary_of_simplex(int n);
NamedComplex full_simplex(int n);
NamedComplex cycle_graph(int n);
NamedComplex octahedron();
NamedComplex icosahedron();
NamedComplex torus_7();
NamedComplex rp2_6();

NamedComplex k_skeleton(const NamedComplex& k, int dim);
NamedComplex cone(const NamedComplex& k);
NamedComplex disjoint_union(const NamedComplex& a, const NamedComplex& b);

/// Grammar: base | cone(x) | skeleton(x,k) | union(x,y), with base one of
/// boundary_simplex:n, simplex:n, cycle:n, octahedron, icosahedron, torus7, rp2, triangle.
/// Throws MalformedInput on unknown names.
NamedComplex generate(const std::string& name);

/// The complexes every verification family runs over.
std::vector<NamedComplex> builtin_suite();

/// Loads a JSON complex file; an optional "expected" object
/// {"betti": [...], "betti_gf2": [...], "counts": [...], "dual_diameter": n, "closed": b}
/// is kept unverified so the harness can report a mismatch.
NamedComplex load_named_complex(const std::string& path);
ExpectedInvariants expected_from_json(const nlohmann::json& j);

}  // namespace cpx
