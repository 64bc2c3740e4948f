#include <benchmark/benchmark.h>

#include "nonvanish/cli/keyvalue.hpp"
#include "nonvanish/cli/sweep.hpp"

using namespace nonvanish::cli;

namespace {

void BM_Sweep(benchmark::State& state) {
  const SweepSpec spec = parse_sweep_spec(KvDocument::parse(
      "[sweep]\nhypersurface_degree = 1..10\nc1 = 0, -1\nc2 = -50..50\nalpha = -10..10\n", "bench"));
  const unsigned jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, kDefaultSweepCap, jobs));
  state.SetItemsProcessed(state.iterations() * 10 * 2 * 101 * 21);
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
