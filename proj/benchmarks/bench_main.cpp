#include <benchmark/benchmark.h>

#include <string>

#include "posetkit/complement.hpp"
#include "posetkit/completion.hpp"
#include "posetkit/enumerate.hpp"
#include "posetkit/format.hpp"
#include "posetkit/residuation.hpp"
#include "posetkit/structure.hpp"

using namespace posetkit;

namespace {

BoundedPoset fixture(const std::string& name) {
  return as_bounded(load_poset(std::string(POSETKIT_FIXTURE_DIR) + "/" + name + ".poset"));
}

const char* const kNames[] = {"fig9", "n5", "fig4", "fig6", "fig1", "fig7"};

}  // namespace

static void BM_CanonicalForm(benchmark::State& state) {
  auto bp = fixture(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(bp));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_CanonicalForm)->DenseRange(0, 5);

static void BM_GeneratePosets(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_posets(m, 1));
  state.counters["classes"] = static_cast<double>(generate_posets(m, 1).size());
}
BENCHMARK(BM_GeneratePosets)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_ClosedSets(benchmark::State& state) {
  auto bp = fixture(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(closed_sets(bp).size());
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_ClosedSets)->DenseRange(0, 5);

static void BM_ConvStar(benchmark::State& state) {
  auto bp = fixture(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(conv_star(bp).size());
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_ConvStar)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

static void BM_DistributiveCheck(benchmark::State& state) {
  auto bp = fixture(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(is_distributive(bp, 1).holds);
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_DistributiveCheck)->DenseRange(0, 5);

static void BM_ConditionFive(benchmark::State& state) {
  auto bp = fixture(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(condition(bp, 5).holds);
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_ConditionFive)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
