#include "sigidx/bounds.hpp"
#include "sigidx/graph.hpp"
#include "sigidx/indices.hpp"
#include "sigidx/search.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_CountFreeTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigidx::count_free_trees(n));
}
BENCHMARK(BM_CountFreeTrees)->DenseRange(10, 18, 2)->Unit(benchmark::kMillisecond);

void BM_SigmaComplete(benchmark::State& state) {
  const auto g = sigidx::complete_bipartite_graph(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(sigidx::sigma(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_SigmaComplete)->Range(8, 512);

void BM_SigmaTotal(benchmark::State& state) {
  const auto g = sigidx::path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sigidx::sigma_total(g));
}
BENCHMARK(BM_SigmaTotal)->Range(64, 4096);

void BM_ExtremalSigma(benchmark::State& state) {
  const auto cls = sigidx::TreeClass::all(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sigidx::extremal(cls, sigidx::Objective::sigma, sigidx::Direction::max));
}
BENCHMARK(BM_ExtremalSigma)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);

void BM_EvaluateAllBounds(benchmark::State& state) {
  const auto input = sigidx::BoundInput::from_graph(sigidx::double_star_graph(5, 9), {});
  for (auto _ : state) benchmark::DoNotOptimize(sigidx::evaluate_all(input));
}
BENCHMARK(BM_EvaluateAllBounds)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
