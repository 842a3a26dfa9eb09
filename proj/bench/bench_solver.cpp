// Serial reference vs OpenMP kernels: all-pairs line-graph distances and the
// exact solver. Run with OMP_NUM_THREADS=<n> to pick the pool size.

#include <benchmark/benchmark.h>

#include "packedge/families.hpp"
#include "packedge/packing.hpp"

using namespace packedge;

namespace {

Graph big_gp(int n) { return generate(FamilySpec::gp(n, 3)); }

void BM_DistancesSerial(benchmark::State& state) {
  const Graph g = big_gp(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(DistanceTable::compute_serial(g));
  state.SetItemsProcessed(state.iterations() * g.size());
}

void BM_DistancesParallel(benchmark::State& state) {
  const Graph g = big_gp(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(DistanceTable(g));
  state.SetItemsProcessed(state.iterations() * g.size());
}

struct Instance {
  const char* name;
  FamilySpec spec;
  const char* sequence;
};

const Instance kInstances[] = {
    {"fig6 1,2^6", FamilySpec::fig6(), "1,2^6"},
    {"flower7 1,2^7", FamilySpec::flower(7), "1,2^7"},
    {"gp(10,3) 1,1,2,2", FamilySpec::gp(10, 3), "1,1,2,2"},
    {"tietze 1,2^6", FamilySpec::tietze(), "1,2^6"},
};

void BM_SolveSerial(benchmark::State& state) {
  const Instance& in = kInstances[state.range(0)];
  const Graph g = generate(in.spec);
  const auto s = PackingSequence::parse(in.sequence);
  state.SetLabel(in.name);
  for (auto _ : state) benchmark::DoNotOptimize(solve_serial(g, s));
}

void BM_SolveParallel(benchmark::State& state) {
  const Instance& in = kInstances[state.range(0)];
  const Graph g = generate(in.spec);
  const auto s = PackingSequence::parse(in.sequence);
  state.SetLabel(in.name);
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, s));
}

}  // namespace

BENCHMARK(BM_DistancesSerial)->Arg(50)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistancesParallel)->Arg(50)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
