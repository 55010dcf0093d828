#include <benchmark/benchmark.h>

#include "ribbonforge/cyclotomic.hpp"
#include "ribbonforge/double.hpp"
#include "ribbonforge/qcalc.hpp"
#include "ribbonforge/radford.hpp"
#include "ribbonforge/ribbon.hpp"

namespace {

using namespace ribbonforge;

void BM_CyclotomicMul(benchmark::State& state) {
  const auto ctx = cyc::make_context(state.range(0));
  const cyc::CycNumber a = cyc::root_power(*ctx, 1) + cyc::constant(*ctx, Rational(3, 7));
  const cyc::CycNumber b = cyc::root_power(*ctx, 2) - cyc::constant(*ctx, Rational(5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(6)->Arg(12)->Arg(36);

void BM_CyclotomicInverse(benchmark::State& state) {
  const auto ctx = cyc::make_context(state.range(0));
  const cyc::CycNumber a = cyc::root_power(*ctx, 1) + cyc::constant(*ctx, Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(6)->Arg(12)->Arg(36);

void BM_QBinomial(benchmark::State& state) {
  const auto ctx = cyc::make_context(12);
  const cyc::CycNumber q = cyc::root_power(*ctx, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qcalc::q_binomial(*ctx, q, state.range(0), state.range(0) / 2));
}
BENCHMARK(BM_QBinomial)->Arg(4)->Arg(8)->Arg(16);

void BM_BuildRadford(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_radford(m, n));
}
BENCHMARK(BM_BuildRadford)->Args({2, 3})->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

// Every basis product of D on a fresh (unmemoised) double.
void BM_DoubleProductTable(benchmark::State& state) {
  const Family f = build_radford(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    state.PauseTiming();
    DoubleData dd = build_double(f);
    state.ResumeTiming();
    const HopfAlgebra& d = *dd.dbl;
    for (std::uint32_t i = 0; i < d.dim(); i += 7) {
      for (std::uint32_t j = 0; j < d.dim(); j += 7) benchmark::DoNotOptimize(d.mul(d.basis(i), d.basis(j)));
    }
  }
}
BENCHMARK(BM_DoubleProductTable)->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_DrinfeldU(benchmark::State& state) {
  const Family f = build_radford(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const DoubleData dd = build_double(f);
  for (auto _ : state) benchmark::DoNotOptimize(drinfeld_u(dd));
}
BENCHMARK(BM_DrinfeldU)->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_ClassifyRibbon(benchmark::State& state) {
  const Family f = build_radford(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    const DoubleData dd = build_double(f);
    benchmark::DoNotOptimize(classify_ribbon(f, dd));
  }
}
BENCHMARK(BM_ClassifyRibbon)->Args({2, 1})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
