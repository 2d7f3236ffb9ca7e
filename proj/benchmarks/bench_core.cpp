#include "isomon/correspondence.hpp"
#include "isomon/oper.hpp"
#include "isomon/reduction.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace isomon;

namespace {

struct Fixture {
  IrregularTimes times;
  DarbouxChart chart;
};

Fixture fixture(int r_inf) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(r_inf));
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  auto rational = [&] {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    return x;
  };
  RVec tau, q, p;
  for (int i = 0; i < r_inf - 3; ++i) tau.push_back(rational());
  for (int i = 0; i < r_inf - 3; ++i) {
    q.push_back(Rational(2 * i + 1, 3));
    p.push_back(rational());
  }
  return {canonical_times(r_inf, tau), qp_chart(q, p)};
}

void BM_BuildConnection(benchmark::State& state) {
  Fixture f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_connection(f.chart, f.times));
}

void BM_SpectralData(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  Fixture f = fixture(r);
  TwistedConnection c = build_connection(f.chart, f.times);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_data(c, default_series_order2(r)));
}

void BM_HIMapTwoRoutes(benchmark::State& state) {
  Fixture f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    HIMap map = h_i_map(f.chart, f.times);
    benchmark::DoNotOptimize(isospectral_from_oper(map, map.H));
  }
}

void BM_ChartChain(benchmark::State& state) {
  Fixture f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lax_forward(geometric_forward(f.chart), f.times));
}

void BM_SolveShiftSystem(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_isospectral_u(r));
}

}  // namespace

BENCHMARK(BM_BuildConnection)->DenseRange(4, 7);
BENCHMARK(BM_SpectralData)->DenseRange(4, 7);
BENCHMARK(BM_HIMapTwoRoutes)->DenseRange(4, 7);
BENCHMARK(BM_ChartChain)->DenseRange(4, 7);
BENCHMARK(BM_SolveShiftSystem)->DenseRange(5, 8);

BENCHMARK_MAIN();
