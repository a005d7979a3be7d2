#pragma once

#include <cpx/signed_graph.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace cpx::testing {

/// Seeded corpus of connected signed graphs on 3..12 vertices. Every fifth graph is a
/// switched all-positive graph and every fifth (offset 1) a switched all-negative one,
/// so balance and antibalance both occur.
inline std::vector<SignedGraph> signed_corpus(std::size_t count = 50, std::uint64_t seed = 20240611) {
  std::mt19937_64 rng(seed);
  std::vector<SignedGraph> out;
  for (std::size_t g = 0; g < count; ++g) {
    const std::size_t n = 3 + rng() % 10;
    std::bernoulli_distribution extra(0.35), coin(0.5);
    std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t v = 1; v < n; ++v) {
      const std::size_t u = rng() % v;
      has[u][v] = true;
      pairs.emplace_back(u, v);
    }
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (!has[u][v] && extra(rng)) pairs.emplace_back(u, v);
    std::vector<int> tau(n);
    for (auto& t : tau) t = coin(rng) ? 1 : -1;
    std::vector<SignedEdge> edges;
    for (auto [u, v] : pairs) {
      int s = coin(rng) ? 1 : -1;
      if (g % 5 == 0) s = tau[u] * tau[v];
      if (g % 5 == 1) s = -tau[u] * tau[v];
      edges.push_back({u, v, s});
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace cpx::testing
