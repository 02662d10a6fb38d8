#include "cyclic/coherence.hpp"
#include "cyclic/paths.hpp"
#include "cyclic/presets.hpp"
#include "cyclic/subdiv.hpp"

#include <benchmark/benchmark.h>

using namespace cyclic;

namespace {

void BM_FlipEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangulations(n, d).triangulations.size());
}
BENCHMARK(BM_FlipEnumeration)->Args({8, 3})->Args({9, 4})->Args({10, 4})->Args({10, 3})->Unit(benchmark::kMillisecond);

void BM_FlipEnumerationParallel(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangulations(10, 4, workers).triangulations.size());
}
BENCHMARK(BM_FlipEnumerationParallel)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_RegularityLp(benchmark::State& state) {
  const Triangulation t = read_subdivision_file(std::string(FIXTURE_DIR) + "/param_dependent_c95.txt", 9, 5).front();
  const ParamVector p = ParamVector::standard(9, 5);
  for (auto _ : state) benchmark::DoNotOptimize(is_regular(t, p).feasible());
}
BENCHMARK(BM_RegularityLp)->Unit(benchmark::kMicrosecond);

void BM_RegularitySweep(benchmark::State& state) {
  const auto all = enumerate_triangulations(8, 3).triangulations;
  const ParamVector p = ParamVector::standard(8, 3);
  for (auto _ : state)
    for (const auto& t : all) benchmark::DoNotOptimize(is_regular(t, p).feasible());
}
BENCHMARK(BM_RegularitySweep)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const FlipGraph g = enumerate_triangulations(8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_subdivisions(g).size());
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

void BM_FiberPoset(benchmark::State& state) {
  const ParamVector p = resolve_params("step1-regime1", 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fiber_face_poset(6, 2, 4, p).polygon);
}
BENCHMARK(BM_FiberPoset)->Unit(benchmark::kMillisecond);

void BM_CoherentPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ParamVector p = ParamVector::standard(n, 4);
  const auto paths = enumerate_monotone_paths(n, 4);
  for (auto _ : state) {
    std::size_t count = 0;
    for (const auto& s : paths) count += is_coherent_string_lp(s, p);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CoherentPaths)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
