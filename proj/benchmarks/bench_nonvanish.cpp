#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "nonvanish/bundle.hpp"
#include "nonvanish/exactnum.hpp"
#include "nonvanish/nonvanishing.hpp"

using namespace nonvanish;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

std::vector<Surd> surds(std::size_t count, bool big) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 97);
  std::vector<Surd> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rational r = q(std::abs(num(rng)), den(rng));
    if (big) r = r * Rational(Integer(1) << 200);
    out.emplace_back(q(num(rng), den(rng)), r);
  }
  return out;
}

void BM_SurdCmp(benchmark::State& state) {
  const auto s = surds(1024, state.range(0) != 0);
  std::size_t i = 0;
  for (auto _ : state) {
    const Surd& x = s[i++ & 1023];
    benchmark::DoNotOptimize(surd_cmp(x.base(), x));
  }
}
BENCHMARK(BM_SurdCmp)->Arg(0)->Arg(1);

void BM_FloorSurd(benchmark::State& state) {
  const auto s = surds(1024, state.range(0) != 0);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(floor_surd(s[i++ & 1023]));
}
BENCHMARK(BM_FloorSurd)->Arg(0)->Arg(1);

void BM_CubicBracket(benchmark::State& state) {
  const Cubic f{q(0), q(-24)};
  const Rational width(Integer(1), Integer(1) << state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cubic_unique_root_bracket(f, width));
}
BENCHMARK(BM_CubicBracket)->Arg(10)->Arg(64);

void BM_AnalyzeQuintic(benchmark::State& state) {
  const Threefold x = hypersurface(5);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(x, {0, 45, -3}));
}
BENCHMARK(BM_AnalyzeQuintic);

// Wide T4_3 / T4_5 ranges: cost grows with the number of certified twists.
void BM_AnalyzeWideRange(benchmark::State& state) {
  const Threefold x = hypersurface(5);
  const std::int64_t alpha = -state.range(0);
  const BundleInvariants b{0, 1 - 5 * alpha * alpha, alpha};
  for (auto _ : state) benchmark::DoNotOptimize(analyze(x, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AnalyzeWideRange)->RangeMultiplier(10)->Range(10, 10000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
