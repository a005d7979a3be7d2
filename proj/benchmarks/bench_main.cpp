#include <benchmark/benchmark.h>

#include <cpx/cheeger.hpp>
#include <cpx/generators.hpp>
#include <cpx/laplacians.hpp>
#include <cpx/numlin.hpp>
#include <cpx/p_laplacian.hpp>
#include <cpx/signed_graph.hpp>

#include <random>
#include <string>
#include <vector>

namespace {

const char* const kComplexes[] = {"boundary_simplex:3", "octahedron", "torus7", "icosahedron"};

void BM_UpSpectrum(benchmark::State& state) {
  const auto c = cpx::generate(kComplexes[state.range(0)]);
  for (auto _ : state) {
    auto ev = cpx::eigenvalues_symmetric(
        cpx::assemble_laplacian(c.complex, {1, cpx::LaplacianKind::up, cpx::Normalization::normalized}));
    benchmark::DoNotOptimize(ev);
  }
  state.SetLabel(c.name);
}
BENCHMARK(BM_UpSpectrum)->DenseRange(0, 3);

void BM_Betti(benchmark::State& state) {
  const auto c = cpx::generate(kComplexes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(cpx::betti_numbers(c.complex));
  state.SetLabel(c.name);
}
BENCHMARK(BM_Betti)->DenseRange(0, 3);

void BM_HSigmaExact(benchmark::State& state) {
  const auto c = cpx::generate(kComplexes[state.range(0)]);
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cpx::h_sigma_d(c.complex, d, {3}));
  state.SetLabel(c.name + " d=" + std::to_string(d));
}
BENCHMARK(BM_HSigmaExact)->Args({0, 1})->Args({1, 1})->Args({2, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_HkSigma(benchmark::State& state) {
  const auto c = cpx::generate("octahedron");
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cpx::h_k_sigma(c.complex, 1, k));
  state.SetLabel("octahedron d=1");
}
BENCHMARK(BM_HkSigma)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

cpx::SignedGraph random_signed(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<cpx::SignedEdge> edges;
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = rng() % v;
    has[u][v] = true;
    edges.push_back({u, v, rng() % 2 ? 1 : -1});
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!has[u][v] && rng() % 3 == 0) edges.push_back({u, v, rng() % 2 ? 1 : -1});
  return {n, std::move(edges)};
}

void BM_SignedCheegerDp(benchmark::State& state) {
  const auto g = random_signed(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(cpx::signed_cheeger(g, 2));
}
BENCHMARK(BM_SignedCheegerDp)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_SignedCheegerEnumerate(benchmark::State& state) {
  const auto g = random_signed(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(cpx::signed_cheeger_enumerate(g, 2));
}
BENCHMARK(BM_SignedCheegerEnumerate)->DenseRange(6, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MaxEigP(benchmark::State& state) {
  const auto c = cpx::generate("octahedron");
  const double p = static_cast<double>(state.range(0)) / 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(cpx::max_eig_p({&c.complex, 1, p, cpx::Direction::up, true}, 8));
}
BENCHMARK(BM_MaxEigP)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
