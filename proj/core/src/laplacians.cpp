#include "cpx/laplacians.hpp"

#include <algorithm>
#include <cmath>

#include "cpx/error.hpp"

namespace cpx {

namespace {

// M M^T for an integer matrix, as doubles.
SymmetricMatrix gram_rows(const IntMatrix& m) {
  SymmetricMatrix g(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.rows(); ++j) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) s += m(i, c) * m(j, c);
      if (s != 0) g.set(i, j, static_cast<double>(s));
    }
  return g;
}

std::string simplex_str(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

}  // namespace

std::string describe(const LaplacianSpec& spec) {
  const char* kind = spec.kind == LaplacianKind::up ? "up" : spec.kind == LaplacianKind::down ? "down" : "full";
  return std::string(kind) + (spec.normalization == Normalization::normalized ? "-normalized" : "") + "@" +
         std::to_string(spec.dim);
}

LaplacianKind parse_kind(const std::string& s) {
  if (s == "up") return LaplacianKind::up;
  if (s == "down") return LaplacianKind::down;
  if (s == "full") return LaplacianKind::full;
  throw MalformedInput("unknown Laplacian kind \"" + s + "\" (expected up, down or full)");
}

SymmetricMatrix assemble_laplacian(const SimplicialComplex& k, const LaplacianSpec& spec) {
  const int d = spec.dim;
  if (d < 0 || d > k.dim()) throw DimensionError("Laplacian dimension " + std::to_string(d) + " out of range");
  const std::size_t n = k.count(d);
  const bool norm = spec.normalization == Normalization::normalized;

  SymmetricMatrix up(n);
  if (spec.kind != LaplacianKind::down && d < k.dim()) {
    up = gram_rows(incidence_matrix(k, d + 1));
  }
  if (spec.kind != LaplacianKind::down && norm) {
    const auto& deg = k.up_degrees(d);
    for (std::size_t i = 0; i < n; ++i)
      if (deg[i] == 0)
        throw DegenerateDegree("normalized up-Laplacian needs positive degrees; simplex " +
                               simplex_str(k.simplices(d)[i]) + " has no coface");
    SymmetricMatrix scaled(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (up(i, j) != 0.0)
          scaled.set(i, j, up(i, j) / std::sqrt(static_cast<double>(deg[i]) * static_cast<double>(deg[j])));
    up = std::move(scaled);
  }
  if (spec.kind == LaplacianKind::up) return up;

  SymmetricMatrix down(n);
  if (d >= 1) {
    down = gram_rows(incidence_matrix(k, d).transposed());
    if (norm) {
      SymmetricMatrix scaled(n);
      const double f = 1.0 / static_cast<double>(d + 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          if (down(i, j) != 0.0) scaled.set(i, j, down(i, j) * f);
      down = std::move(scaled);
    }
  } else if (norm) {
    throw DegenerateDegree("normalized down-Laplacian is undefined at dimension 0 (vertices have no facets)");
  }
  if (spec.kind == LaplacianKind::down) return down;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (down(i, j) != 0.0) up.set(i, j, up(i, j) + down(i, j));
  return up;
}

std::size_t first_nontrivial_index(const SimplicialComplex& k, int d) {
  if (d == 0) return k.count(0) > 0 ? 2 : 1;
  return boundary_rank(k, d) + 1;
}

SpectralReport spectral_report(const SimplicialComplex& k, const LaplacianSpec& spec) {
  SpectralReport r;
  r.spec = spec;
  r.n = k.count(spec.dim);
  r.eigenvalues = eigenvalues_symmetric(assemble_laplacian(k, spec));
  r.zero_multiplicity = multiplicity_of(r.eigenvalues, 0.0);
  r.first_nontrivial_index = first_nontrivial_index(k, spec.dim);
  return r;
}

VerificationReport verify_eckmann(const SimplicialComplex& k) {
  VerificationReport rep("eckmann");
  const auto betti = betti_numbers(k, Field::rationals);
  for (int d = 0; d <= k.dim(); ++d) {
    const auto ev = eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::full, Normalization::unnormalized}));
    const std::size_t zeros = multiplicity_of(ev, 0.0);
    const std::size_t b = betti[static_cast<std::size_t>(d)];
    rep.expect("zero multiplicity of L_" + std::to_string(d) + " = b_" + std::to_string(d), zeros == b, fmt(zeros),
               fmt(b));
  }
  return rep;
}

VerificationReport verify_up_down_duality(const SimplicialComplex& k, int d) {
  VerificationReport rep("duality");
  if (d < 0 || d + 1 > k.dim()) throw DimensionError("up/down duality needs d+1 <= dim");
  const auto up = nonzero_part(
      eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::unnormalized})));
  const auto down = nonzero_part(
      eigenvalues_symmetric(assemble_laplacian(k, {d + 1, LaplacianKind::down, Normalization::unnormalized})));
  double gap = up.size() == down.size() ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < up.size() && i < down.size(); ++i) gap = std::max(gap, std::abs(up[i] - down[i]));
  rep.expect("nonzero spec L_" + std::to_string(d) + "^up = nonzero spec L_" + std::to_string(d + 1) + "^down",
             spectra_match(up, down), fmt(up.size()) + " values", fmt(down.size()) + " values",
             "max deviation " + fmt(gap));
  return rep;
}

VerificationReport verify_hodge_union(const SimplicialComplex& k, int d) {
  VerificationReport rep("hodge-union");
  auto spec = [&](LaplacianKind kind) {
    return nonzero_part(eigenvalues_symmetric(assemble_laplacian(k, {d, kind, Normalization::unnormalized})));
  };
  const auto full = spec(LaplacianKind::full);
  auto merged = spec(LaplacianKind::up);
  const auto down = spec(LaplacianKind::down);
  merged.insert(merged.end(), down.begin(), down.end());
  std::sort(merged.begin(), merged.end());
  rep.expect("nonzero spec L_" + std::to_string(d) + " = up U down", spectra_match(full, merged),
             fmt(full.size()) + " values", fmt(merged.size()) + " values");
  return rep;
}

VerificationReport verify_normalized_range(const SimplicialComplex& k, int d) {
  VerificationReport rep("normalized-range");
  const auto ev =
      eigenvalues_symmetric(assemble_laplacian(k, {d, LaplacianKind::up, Normalization::normalized}));
  const double lo = ev.front();
  const double hi = ev.back();
  rep.expect("spec Delta_" + std::to_string(d) + "^up within [0, d+2]", lo >= -kResidualTol && hi <= d + 2 + kResidualTol,
             "[" + fmt(lo) + ", " + fmt(hi) + "]", "[0, " + std::to_string(d + 2) + "]");
  if (k.is_pure() && d + 1 <= k.dim()) {
    const std::size_t zeros = multiplicity_of(ev, 0.0);
    rep.expect("zero multiplicity of Delta_" + std::to_string(d) + "^up >= d+1", zeros >= static_cast<std::size_t>(d + 1),
               fmt(zeros), std::to_string(d + 1));
  }
  return rep;
}

}  // namespace cpx
