#include <benchmark/benchmark.h>

#include "drg/catalog.hpp"
#include "drg/exact_cover.hpp"
#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"
#include "drg/search.hpp"

namespace {

const drg::Graph& graph_for(std::int64_t which) {
  static const drg::Graph small = drg::build("IG(GQ(4,4))");
  static const drg::Graph medium = drg::build("IG(GH(3,3))");
  static const drg::Graph large = drg::build("L(IG(GH(3,3)))");
  return which == 0 ? small : which == 1 ? medium : large;
}

void BM_DistanceTableSerial(benchmark::State& s) {
  const auto& g = graph_for(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(drg::distance_table_serial(g));
  s.SetLabel(std::to_string(g.order()) + " vertices");
}

void BM_DistanceTableParallel(benchmark::State& s) {
  const auto& g = graph_for(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(drg::distance_table(g));
  s.SetLabel(std::to_string(g.order()) + " vertices");
}

void BM_VerifyArraySerial(benchmark::State& s) {
  const auto& g = graph_for(s.range(0));
  const auto t = drg::distance_table(g);
  for (auto _ : s) benchmark::DoNotOptimize(drg::verify_intersection_array_serial(g, t));
}

void BM_VerifyArrayParallel(benchmark::State& s) {
  const auto& g = graph_for(s.range(0));
  const auto t = drg::distance_table(g);
  for (auto _ : s) benchmark::DoNotOptimize(drg::verify_intersection_array(g, t));
}

void BM_SearchSerial(benchmark::State& s) {
  const drg::Graph g = drg::build("GH(2,2) (Graph 2)");
  drg::SearchOptions o;
  o.parallel = false;
  for (auto _ : s) benchmark::DoNotOptimize(drg::search_perfect_1(g, o));
}

void BM_SearchParallel(benchmark::State& s) {
  const drg::Graph g = drg::build("GH(2,2) (Graph 2)");
  for (auto _ : s) benchmark::DoNotOptimize(drg::search_perfect_1(g));
}

}  // namespace

BENCHMARK(BM_DistanceTableSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceTableParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyArraySerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyArrayParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
