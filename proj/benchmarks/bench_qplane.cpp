#include <benchmark/benchmark.h>

#include "cohana/ncpoly.hpp"
#include "cohana/qplane.hpp"

using namespace cohana::qplane;

static void BM_NormalOrder(benchmark::State& state) {
  RelationSet manin = manin_relations();
  NCPoly p = parse_nc("(x + y)^" + std::to_string(state.range(0)));
  for (auto _ : state) {
    NCPoly n = normal_order(p, manin);
    benchmark::DoNotOptimize(&n);
  }
}
BENCHMARK(BM_NormalOrder)->Arg(4)->Arg(6)->Arg(8);

static void BM_VerifyMq2(benchmark::State& state) {
  for (auto _ : state) {
    Mq2Report rep = verify_mq2();
    benchmark::DoNotOptimize(&rep);
  }
}
BENCHMARK(BM_VerifyMq2);

static void BM_ClockShift(benchmark::State& state) {
  for (auto _ : state) {
    ClockShift cs = clock_shift(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(&cs);
  }
}
BENCHMARK(BM_ClockShift)->Arg(4)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
