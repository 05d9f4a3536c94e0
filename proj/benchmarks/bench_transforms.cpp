#include <benchmark/benchmark.h>

#include "cohana/cstrans.hpp"
#include "cohana/functions.hpp"

using namespace cohana;
using cplx = std::complex<double>;

static void BM_HardyReducedTransform(benchmark::State& state) {
  auto th = cstrans::make_hardy(static_cast<int>(state.range(0)));
  auto f = grids::make_sampled(
      th.x_grid, fn::ClosedForm(fn::RationalFn::from_poly(fn::Polynomial::monomial(3))));
  for (auto _ : state) {
    auto fhat = cstrans::reduced_transform(th, f);
    benchmark::DoNotOptimize(fhat.values.data());
  }
}
BENCHMARK(BM_HardyReducedTransform)->Arg(128)->Arg(256)->Arg(512);

static void BM_BergmanRoundTrip(benchmark::State& state) {
  auto th = cstrans::make_bergman(2, 64, static_cast<int>(state.range(0)));
  auto f = grids::make_sampled(
      th.x_grid, fn::ClosedForm(fn::RationalFn::from_poly(fn::Polynomial::monomial(4))));
  for (auto _ : state) {
    auto round = cstrans::inverse_transform(th, cstrans::reduced_transform(th, f));
    benchmark::DoNotOptimize(round.values.data());
  }
}
BENCHMARK(BM_BergmanRoundTrip)->Arg(128)->Arg(256);

static void BM_SegalBargmannTransform(benchmark::State& state) {
  auto th = cstrans::make_segal_bargmann(128, static_cast<int>(state.range(0)));
  auto f = grids::make_sampled(th.x_grid, fn::ClosedForm(fn::hermite_function(2)));
  for (auto _ : state) {
    auto fhat = cstrans::reduced_transform(th, f);
    benchmark::DoNotOptimize(fhat.values.data());
  }
}
BENCHMARK(BM_SegalBargmannTransform)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
