#include <benchmark/benchmark.h>

#include "lf/analyzer.hpp"
#include "lf/fixtures.hpp"

namespace {

void BM_FindDescendingComplete(benchmark::State& state) {
  const auto e = lf::random_embedding(lf::complete_graph(static_cast<int>(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lf::find_descending_direction(e));
}
BENCHMARK(BM_FindDescendingComplete)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_CandidatesNoDirection(benchmark::State& state) {
  const auto e = lf::fig4_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(lf::direction_candidates(e));
}
BENCHMARK(BM_CandidatesNoDirection)->Unit(benchmark::kMillisecond);

void BM_AnalyzeComplete(benchmark::State& state) {
  const auto e = lf::random_embedding(lf::complete_graph(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(lf::analyze(e));
}
BENCHMARK(BM_AnalyzeComplete)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_AnalyzeKnotted(benchmark::State& state) {
  const auto e = lf::fig4_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(lf::analyze(e));
}
BENCHMARK(BM_AnalyzeKnotted)->Unit(benchmark::kMillisecond);

void BM_Tricolorings(benchmark::State& state) {
  const auto d = lf::theta_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(lf::count_tricolorings(d));
}
BENCHMARK(BM_Tricolorings);

void BM_FourCycleSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lf::four_cycle_sweep(static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_FourCycleSweep)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
