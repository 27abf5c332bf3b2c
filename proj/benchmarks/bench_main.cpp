#include <benchmark/benchmark.h>

#include <cmath>

#include "ogplab/ogplab.hpp"

using namespace ogplab;

static void BM_ExactDiscrepancy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = generate(8, n, Disorder::rademacher(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(exact_discrepancy(inst).value);
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n - 1)));
}
BENCHMARK(BM_ExactDiscrepancy)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_ExactDiscrepancyGaussian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = generate(8, n, Disorder::gaussian(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(exact_discrepancy(inst).value);
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n - 1)));
}
BENCHMARK(BM_ExactDiscrepancyGaussian)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_PotentialOnline(benchmark::State& state) {
  const auto inst = generate(32, static_cast<std::size_t>(state.range(0)), Disorder::rademacher(), 2);
  for (auto _ : state) {
    PotentialOnline alg;
    benchmark::DoNotOptimize(run_online(alg, inst).disc.value);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PotentialOnline)->Arg(1024)->Arg(8192);

static void BM_GenerateGaussian(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate(64, 1024, Disorder::gaussian(), seed++).data().data());
  state.SetItemsProcessed(state.iterations() * 64 * 1024);
}
BENCHMARK(BM_GenerateGaussian);

static void BM_MonteCarloBox(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto cov = SquareMatrix::equicorrelated(m, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(mc_box_probability(cov, 1.0, 100'000, 3).estimate);
  state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_MonteCarloBox)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BoxQuadrature(benchmark::State& state) {
  const auto cov = SquareMatrix::equicorrelated(3, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(box_probability_quadrature(cov, 1.0));
}
BENCHMARK(BM_BoxQuadrature)->Unit(benchmark::kMillisecond);

static void BM_XiSearch(benchmark::State& state) {
  const auto ens = make_suffix_ensemble(4, 16, Disorder::gaussian(), 5, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_xi(ens, std::sqrt(16.0)));
}
BENCHMARK(BM_XiSearch)->Unit(benchmark::kMillisecond);

static void BM_OgpSearch(benchmark::State& state) {
  const auto ens = make_interpolated_ensemble(3, 14, 6, 2, default_angle_grid(4));
  const OgpWindow w{0.6, 0.2, 0.9 * std::sqrt(14.0), 2};
  for (auto _ : state) benchmark::DoNotOptimize(search_ogp_tuples(ens, w).has_value());
}
BENCHMARK(BM_OgpSearch)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
