// Serial against parallel for each OpenMP kernel. The second argument of
// every benchmark is 0 for the serial twin and 1 for the parallel one.
#include <benchmark/benchmark.h>

#include "mingens/breen.hpp"
#include "mingens/genset.hpp"
#include "mingens/monoid.hpp"
#include "mingens/prime_filter.hpp"
#include "mingens/zn.hpp"

using namespace mingens;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(1) ? "parallel" : "serial"); }

void BM_TrimBreen(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(trim_breen(n, exec_of(st)));
  label(st);
}
BENCHMARK(BM_TrimBreen)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CanonicalSuperset(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(canonical_superset(n, exec_of(st)));
  label(st);
}
BENCHMARK(BM_CanonicalSuperset)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_RowSpaceFilter(benchmark::State& st) {
  const auto q = filter_input(canonical_superset(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(filter_by_row_spaces(q, exec_of(st)));
  label(st);
}
BENCHMARK(BM_RowSpaceFilter)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EmbeddingFilter(benchmark::State& st) {
  const auto q = filter_input(canonical_superset(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(filter_by_embeddings(q, exec_of(st)));
  label(st);
}
BENCHMARK(BM_EmbeddingFilter)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CountLClasses(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_lclasses(n, exec_of(st)));
  label(st);
}
BENCHMARK(BM_CountLClasses)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ReflexiveRepresentatives(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reflexive_representatives(n, exec_of(st)));
  label(st);
}
BENCHMARK(BM_ReflexiveRepresentatives)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Closure(benchmark::State& st) {
  const auto gens = devadze_generators(static_cast<int>(st.range(0))).generators;
  ClosureOptions opt;
  opt.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(closure<BoolMat>(std::span<const BoolMat>(gens), opt).size());
  label(st);
}
BENCHMARK(BM_Closure)->ArgsProduct({{4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EnumerateUnits(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_units(static_cast<Residue>(st.range(0)), 2, 20'000'000, exec_of(st)));
  label(st);
}
BENCHMARK(BM_EnumerateUnits)->ArgsProduct({{12}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
