#include "cpx/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cpx/error.hpp"

namespace cpx {

namespace {

const std::vector<Simplex> kNoSimplices;
const std::vector<std::int64_t> kNoDegrees;

std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

}  // namespace

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  if (d < 0 || d > dim()) return kNoSimplices;
  return by_dim_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dim()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(d)];
  const auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::int64_t>& SimplicialComplex::up_degrees(int d) const {
  if (d < 0 || d > dim()) return kNoDegrees;
  return up_degree_[static_cast<std::size_t>(d)];
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dim(); ++d) {
    const auto& deg = up_degrees(d);
    const auto& s = simplices(d);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (deg[i] == 0) out.push_back(s[i]);
  }
  return out;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (int d = 0; d <= dim(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(count(d));
  return chi;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets())
    if (static_cast<int>(f.size()) - 1 != dim()) return false;
  return true;
}

std::vector<Simplex> faces_of_size(const Simplex& s, std::size_t size) {
  std::vector<Simplex> out;
  if (size == 0 || size > s.size()) return out;
  std::vector<bool> mask(s.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
  do {
    Simplex f;
    f.reserve(size);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask[i]) f.push_back(s[i]);
    out.push_back(std::move(f));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

SimplicialComplex build_complex(std::vector<Simplex> facets) {
  std::vector<std::set<Simplex>> layers;
  for (auto& f : facets) {
    if (f.empty()) throw MalformedInput("empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw MalformedInput("facet " + to_string(f) + " repeats a vertex");
    if (f.front() < 0) throw MalformedInput("negative vertex id in facet " + to_string(f));
    if (layers.size() < f.size()) layers.resize(f.size());
    for (std::size_t size = 1; size <= f.size(); ++size)
      for (auto& face : faces_of_size(f, size)) layers[size - 1].insert(std::move(face));
  }

  SimplicialComplex k;
  k.by_dim_.reserve(layers.size());
  for (const auto& layer : layers) k.by_dim_.emplace_back(layer.begin(), layer.end());
  for (const auto& v : k.by_dim_.empty() ? kNoSimplices : k.by_dim_[0]) k.vertices_.push_back(v[0]);

  k.index_.resize(k.by_dim_.size());
  for (std::size_t d = 0; d < k.by_dim_.size(); ++d)
    for (std::size_t i = 0; i < k.by_dim_[d].size(); ++i) k.index_[d].emplace(k.by_dim_[d][i], i);

  k.up_degree_.resize(k.by_dim_.size());
  for (std::size_t d = 0; d < k.by_dim_.size(); ++d) {
    k.up_degree_[d].assign(k.by_dim_[d].size(), 0);
    if (d + 1 >= k.by_dim_.size()) continue;
    for (const auto& sigma : k.by_dim_[d + 1])
      for (const auto& tau : faces_of_size(sigma, d + 1)) ++k.up_degree_[d][k.index_[d].at(tau)];
  }
  return k;
}

IntMatrix incidence_matrix(const SimplicialComplex& k, int d) {
  if (d < 1 || d > k.dim())
    throw DimensionError("incidence matrix B_" + std::to_string(d) + " requested on a complex of dimension " +
                         std::to_string(k.dim()));
  const auto& cols = k.simplices(d);
  IntMatrix b(k.count(d - 1), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Simplex& sigma = cols[c];
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      Simplex tau;
      tau.reserve(sigma.size() - 1);
      for (std::size_t i = 0; i < sigma.size(); ++i)
        if (i != j) tau.push_back(sigma[i]);
      b(*k.index_of(tau), c) = (j % 2 == 0) ? 1 : -1;
    }
  }
  return b;
}

IntMatrix reduced_boundary(const SimplicialComplex& k, int d) {
  if (d == 0) {
    IntMatrix aug(1, k.count(0));
    for (std::size_t i = 0; i < k.count(0); ++i) aug(0, i) = 1;
    return aug;
  }
  if (d == k.dim() + 1) return IntMatrix(k.count(d - 1), 0);
  return incidence_matrix(k, d);
}

IntMatrix coboundary(const SimplicialComplex& k, int d) {
  if (d < 0 || d > k.dim()) throw DimensionError("coboundary at dimension " + std::to_string(d) + " out of range");
  if (d == k.dim()) return IntMatrix(0, k.count(d));
  return incidence_matrix(k, d + 1).transposed();
}

std::size_t boundary_rank(const SimplicialComplex& k, int d) {
  if (d < 1 || d > k.dim()) return 0;
  return rank_rational(incidence_matrix(k, d));
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k, Field field) {
  const int top = k.dim();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int d = 1; d <= top; ++d) {
    const IntMatrix b = incidence_matrix(k, d);
    ranks[static_cast<std::size_t>(d)] = field == Field::rationals ? rank_rational(b) : rank_gf2(b);
  }
  std::vector<std::size_t> betti;
  for (int d = 0; d <= top; ++d)
    betti.push_back(k.count(d) - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d + 1)]);
  return betti;
}

std::size_t reduced_betti(const SimplicialComplex& k, int d, Field field) {
  const auto b = betti_numbers(k, field);
  if (d < 0 || d >= static_cast<int>(b.size())) return 0;
  const std::size_t v = b[static_cast<std::size_t>(d)];
  return d == 0 ? v - 1 : v;
}

}  // namespace cpx
