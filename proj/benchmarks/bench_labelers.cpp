#include <benchmark/benchmark.h>

#include "antimagic/dense.hpp"
#include "antimagic/enumerate.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/partite.hpp"
#include "antimagic/problab.hpp"
#include "antimagic/special.hpp"

namespace am = antimagic;

static void BM_Verify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  am::Graph g = am::random_min_degree(n, n / 4, 1);
  am::Labeling l = am::label_dense(g, am::DenseConfig{}).labeling.value();
  for (auto _ : state) benchmark::DoNotOptimize(am::verify_antimagic(g, l));
  state.SetItemsProcessed(state.iterations() * g.m());
}
BENCHMARK(BM_Verify)->Arg(128)->Arg(512);

static void BM_Dense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  am::Graph g = am::random_min_degree(n, 5 * static_cast<int>(std::ceil(std::log2(n))), 7);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    am::DenseConfig cfg;
    cfg.seed = seed++;
    benchmark::DoNotOptimize(am::label_dense(g, cfg));
  }
}
BENCHMARK(BM_Dense)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_Universal(benchmark::State& state) {
  am::Graph g = am::named_graph("complete:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(am::label_universal_vertex(g));
}
BENCHMARK(BM_Universal)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_MaxDegreeNMinus2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  am::Graph base = am::random_graph(n - 1, 0.3, 3);
  std::vector<std::pair<int, int>> e;
  for (const auto& ed : base.edges()) e.emplace_back(ed.u, ed.v);
  for (int v = 1; v < n - 1; ++v) e.emplace_back(v, n - 1);
  am::Graph g = am::Graph::from_edges(n, e);
  for (auto _ : state) benchmark::DoNotOptimize(am::label_max_degree_n_minus_2(g));
}
BENCHMARK(BM_MaxDegreeNMinus2)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

static void BM_Multipartite(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  am::PartiteSpec spec{{k, k, 2 * k}};
  for (auto _ : state) benchmark::DoNotOptimize(am::label_complete_multipartite(spec));
}
BENCHMARK(BM_Multipartite)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_ExhaustiveSweep(benchmark::State& state) {
  auto graphs = am::enumerate_graphs(static_cast<int>(state.range(0)), true);
  am::SearchBudget b{am::SearchMode::exhaustive};
  for (auto _ : state) {
    for (const auto& g : graphs) benchmark::DoNotOptimize(am::exhaustive_search(g, b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_ExhaustiveSweep)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Heuristic(benchmark::State& state) {
  am::Graph g = am::named_graph("petersen");
  std::uint64_t seed = 0;
  for (auto _ : state) {
    am::SearchBudget b{am::SearchMode::heuristic};
    b.seed = seed++;
    benchmark::DoNotOptimize(am::heuristic_search(g, b));
  }
}
BENCHMARK(BM_Heuristic)->Unit(benchmark::kMicrosecond);

static void BM_CharacterBounds(benchmark::State& state) {
  std::mt19937_64 rng(1);
  am::PairSample s = am::sample_pairs(300, 30, rng);
  for (auto _ : state) benchmark::DoNotOptimize(am::check_character_bounds(s));
}
BENCHMARK(BM_CharacterBounds)->Unit(benchmark::kMillisecond);

static void BM_SumDistribution(benchmark::State& state) {
  std::mt19937_64 rng(2);
  am::PairSample s = am::sample_pairs(300, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(am::sum_distribution(s));
}
BENCHMARK(BM_SumDistribution)->Arg(16)->Arg(30)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
