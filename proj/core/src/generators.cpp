#include "cpx/generators.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <fstream>
#include <sstream>

#include "cpx/cheeger.hpp"
#include "cpx/complex_io.hpp"
#include "cpx/error.hpp"

namespace cpx {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<std::size_t> counts_of(const SimplicialComplex& k) {
  std::vector<std::size_t> c;
  for (int d = 0; d <= k.dim(); ++d) c.push_back(k.count(d));
  return c;
}

NamedComplex make(std::string name, std::vector<Simplex> facets, std::optional<ExpectedInvariants> e) {
  NamedComplex c{std::move(name), build_complex(std::move(facets)), std::move(e)};
  check_expected(c);
  return c;
}

std::vector<std::size_t> sphere_betti(int dim) {
  std::vector<std::size_t> b(static_cast<std::size_t>(dim) + 1, 0);
  b[0] += 1;
  b.back() += 1;
  return b;
}

}  // namespace

void check_expected(const NamedComplex& c) {
  if (!c.expected) return;
  const auto& e = *c.expected;
  const auto& k = c.complex;
  auto fail = [&](const std::string& what, const std::string& got, const std::string& want) {
    throw std::logic_error(c.name + ": " + what + " is " + got + ", expected " + want);
  };
  if (e.betti_rationals && betti_numbers(k, Field::rationals) != *e.betti_rationals)
    fail("rational Betti vector", join(betti_numbers(k, Field::rationals)), join(*e.betti_rationals));
  if (e.betti_gf2 && betti_numbers(k, Field::gf2) != *e.betti_gf2)
    fail("GF(2) Betti vector", join(betti_numbers(k, Field::gf2)), join(*e.betti_gf2));
  if (e.counts && counts_of(k) != *e.counts) fail("simplex counts", join(counts_of(k)), join(*e.counts));
  if (e.closed) {
    const auto& deg = k.up_degrees(k.dim() - 1);
    if (!std::all_of(deg.begin(), deg.end(), [](std::int64_t x) { return x == 2; }))
      fail("closedness", "false", "true");
  }
  if (e.dual_diameter) {
    const auto diam = graph_diameter(down_adjacency(k, k.dim()));
    if (diam != e.dual_diameter)
      fail("dual-graph diameter", diam ? std::to_string(*diam) : "inf", std::to_string(*e.dual_diameter));
  }
}

NamedComplex boundary_of_simplex(int n) {
  if (n < 2) throw MalformedInput("boundary_simplex:n needs n >= 2");
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n; ++skip) {
    Simplex s;
    for (int v = 0; v <= n; ++v)
      if (v != skip) s.push_back(v);
    facets.push_back(std::move(s));
  }
  ExpectedInvariants e;
  e.betti_rationals = sphere_betti(n - 1);
  e.betti_gf2 = sphere_betti(n - 1);
  e.closed = true;
  e.dual_diameter = 1;
  return make("boundary_simplex:" + std::to_string(n), std::move(facets), e);
}

NamedComplex full_simplex(int n) {
  if (n < 0) throw MalformedInput("simplex:n needs n >= 0");
  Simplex s;
  for (int v = 0; v <= n; ++v) s.push_back(v);
  ExpectedInvariants e;
  e.betti_rationals = std::vector<std::size_t>(static_cast<std::size_t>(n) + 1, 0);
  (*e.betti_rationals)[0] = 1;
  return make("simplex:" + std::to_string(n), {s}, e);
}

NamedComplex cycle_graph(int n) {
  if (n < 3) throw MalformedInput("cycle:n needs n >= 3");
  std::vector<Simplex> facets;
  for (int i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n});
  ExpectedInvariants e;
  e.betti_rationals = std::vector<std::size_t>{1, 1};
  e.closed = true;
  e.dual_diameter = static_cast<std::size_t>(n / 2);
  return make("cycle:" + std::to_string(n), std::move(facets), e);
}

NamedComplex octahedron() {
  // Vertices 0/1, 2/3, 4/5 are the antipodal pairs.
  std::vector<Simplex> facets;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) facets.push_back({a, b, c});
  ExpectedInvariants e;
  e.betti_rationals = std::vector<std::size_t>{1, 0, 1};
  e.counts = std::vector<std::size_t>{6, 12, 8};
  e.closed = true;
  e.dual_diameter = 3;
  return make("octahedron", std::move(facets), e);
}

NamedComplex icosahedron() {
  // Apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11.
  std::vector<Simplex> facets;
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i, u1 = 1 + (i + 1) % 5, l = 6 + i, l1 = 6 + (i + 1) % 5;
    facets.push_back({0, u, u1});
    facets.push_back({11, l, l1});
    facets.push_back({u, u1, l});
    facets.push_back({u1, l, l1});
  }
  ExpectedInvariants e;
  e.betti_rationals = std::vector<std::size_t>{1, 0, 1};
  e.counts = std::vector<std::size_t>{12, 30, 20};
  e.closed = true;
  e.dual_diameter = 5;
  return make("icosahedron", std::move(facets), e);
}

NamedComplex torus_7() {
  // Moebius-Kantor / Csaszar 7-vertex torus.
  std::vector<Simplex> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  ExpectedInvariants e;
  e.betti_rationals = std::vector<std::size_t>{1, 2, 1};
  e.betti_gf2 = std::vector<std::size_t>{1, 2, 1};
  e.counts = std::vector<std::size_t>{7, 21, 14};
  e.closed = true;
  return make("torus7", std::move(facets), e);
}

NamedComplex rp2_6() {
  // Hemi-icosahedron.
  std::vector<Simplex> facets{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                              {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  ExpectedInvariants e;
  e.betti_rationals = std::vector<std::size_t>{1, 0, 0};
  e.betti_gf2 = std::vector<std::size_t>{1, 1, 1};
  e.counts = std::vector<std::size_t>{6, 15, 10};
  e.closed = true;
  return make("rp2", std::move(facets), e);
}

NamedComplex k_skeleton(const NamedComplex& k, int dim) {
  if (dim < 0) throw MalformedInput("skeleton dimension must be >= 0");
  std::vector<Simplex> facets;
  for (int d = 0; d <= std::min(dim, k.complex.dim()); ++d)
    for (const auto& s : k.complex.simplices(d)) facets.push_back(s);
  return make("skeleton(" + k.name + "," + std::to_string(dim) + ")", std::move(facets), std::nullopt);
}

NamedComplex cone(const NamedComplex& k) {
  const auto& verts = k.complex.vertices();
  const std::int64_t apex = verts.empty() ? 0 : verts.back() + 1;
  std::vector<Simplex> facets;
  for (const auto& f : k.complex.facets()) {
    Simplex s = f;
    s.push_back(apex);
    facets.push_back(std::move(s));
  }
  if (facets.empty()) facets.push_back({apex});
  ExpectedInvariants e;
  e.betti_rationals = std::vector<std::size_t>(static_cast<std::size_t>(k.complex.dim()) + 2, 0);
  (*e.betti_rationals)[0] = 1;
  return make("cone(" + k.name + ")", std::move(facets), e);
}

NamedComplex disjoint_union(const NamedComplex& a, const NamedComplex& b) {
  const auto& va = a.complex.vertices();
  const std::int64_t offset = va.empty() ? 0 : va.back() + 1;
  std::vector<Simplex> facets = a.complex.facets();
  for (auto s : b.complex.facets()) {
    for (auto& v : s) v += offset;
    facets.push_back(std::move(s));
  }
  ExpectedInvariants e;
  auto ba = betti_numbers(a.complex), bb = betti_numbers(b.complex);
  std::vector<std::size_t> sum(std::max(ba.size(), bb.size()), 0);
  for (std::size_t i = 0; i < ba.size(); ++i) sum[i] += ba[i];
  for (std::size_t i = 0; i < bb.size(); ++i) sum[i] += bb[i];
  e.betti_rationals = sum;
  return make("union(" + a.name + "," + b.name + ")", std::move(facets), e);
}

namespace {

class NameParser {
 public:
  explicit NameParser(const std::string& s) : s_(s) {}

  NamedComplex parse() {
    auto c = expr();
    skip_ws();
    if (pos_ != s_.size()) error("trailing characters");
    return c;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw MalformedInput("generator name '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string ident() {
    skip_ws();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (b == pos_) error("expected a name");
    return s_.substr(b, pos_ - b);
  }
  int integer() {
    skip_ws();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_ || pos_ - b > 6) error("expected a small integer");
    return std::stoi(s_.substr(b, pos_ - b));
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  NamedComplex expr() {
    const std::string id = ident();
    if (id == "cone") {
      expect('(');
      auto x = expr();
      expect(')');
      return cone(x);
    }
    if (id == "skeleton") {
      expect('(');
      auto x = expr();
      expect(',');
      const int k = integer();
      expect(')');
      return k_skeleton(x, k);
    }
    if (id == "union") {
      expect('(');
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(')');
      return disjoint_union(a, b);
    }
    if (peek(':')) {
      expect(':');
      const int n = integer();
      if (id == "boundary_simplex") return boundary_of_simplex(n);
      if (id == "simplex") return full_simplex(n);
      if (id == "cycle") return cycle_graph(n);
      error("unknown family '" + id + "'");
    }
    if (id == "octahedron") return octahedron();
    if (id == "icosahedron") return icosahedron();
    if (id == "torus7" || id == "torus_7") return torus_7();
    if (id == "rp2" || id == "rp2_6") return rp2_6();
    if (id == "triangle") return full_simplex(2);
    error("unknown complex '" + id + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

NamedComplex generate(const std::string& name) { return NameParser(name).parse(); }

std::vector<NamedComplex> builtin_suite() {
  std::vector<NamedComplex> s;
  for (const char* n : {"boundary_simplex:3", "boundary_simplex:4", "octahedron", "icosahedron", "torus7", "rp2",
                        "triangle", "cycle:5", "cone(boundary_simplex:2)", "cone(cycle:4)",
                        "skeleton(boundary_simplex:3,1)", "skeleton(octahedron,1)",
                        "union(boundary_simplex:2,boundary_simplex:3)"})
    s.push_back(generate(n));
  return s;
}

ExpectedInvariants expected_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw MalformedInput("\"expected\" must be an object");
  ExpectedInvariants e;
  auto counts = [&](const char* key) -> std::optional<std::vector<std::size_t>> {
    if (!j.contains(key)) return std::nullopt;
    const auto& a = j.at(key);
    if (!a.is_array()) throw MalformedInput(std::string("\"expected.") + key + "\" must be an array");
    std::vector<std::size_t> v;
    for (const auto& x : a) {
      if (!x.is_number_unsigned()) throw MalformedInput(std::string("\"expected.") + key + "\" needs non-negative integers");
      v.push_back(x.get<std::size_t>());
    }
    return v;
  };
  e.betti_rationals = counts("betti");
  e.betti_gf2 = counts("betti_gf2");
  e.counts = counts("counts");
  if (j.contains("dual_diameter")) {
    if (!j.at("dual_diameter").is_number_unsigned()) throw MalformedInput("\"expected.dual_diameter\" must be a count");
    e.dual_diameter = j.at("dual_diameter").get<std::size_t>();
  }
  if (j.contains("closed")) {
    if (!j.at("closed").is_boolean()) throw MalformedInput("\"expected.closed\" must be a boolean");
    e.closed = j.at("closed").get<bool>();
  }
  return e;
}

NamedComplex load_named_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("JSON parse error: ") + e.what());
  }
  NamedComplex c{path, complex_from_json(j), std::nullopt};
  if (j.is_object() && j.contains("expected")) c.expected = expected_from_json(j.at("expected"));
  return c;
}

}  // namespace cpx
