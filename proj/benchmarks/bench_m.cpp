#include <benchmark/benchmark.h>

#include <numbers>

#include "krein/criteria.hpp"
#include "krein/mcatalog.hpp"
#include "krein/sl_ode.hpp"

using namespace krein;

namespace {

void BM_m_numeric_free(benchmark::State& st) {
  const HalfLineProblem p{Side::Plus, Coefficient::constant(0.0)};
  const cplx l = std::polar(std::pow(10.0, st.range(0) / 10.0), 1.0);
  for (auto _ : st) benchmark::DoNotOptimize(m_numeric(p, l).m);
}
BENCHMARK(BM_m_numeric_free)->Arg(-10)->Arg(0)->Arg(10);

void BM_m_numeric_q0(benchmark::State& st) {
  const HalfLineProblem p{Side::Plus, example_q0_potential()};
  for (auto _ : st) benchmark::DoNotOptimize(m_numeric(p, cplx(0.3, 0.2)).m);
}
BENCHMARK(BM_m_numeric_q0);

void BM_m_periodic(benchmark::State& st) {
  const PeriodicData p{Coefficient::cosine(2.0, 2.0), std::numbers::pi};
  for (auto _ : st) benchmark::DoNotOptimize(m_periodic(p, cplx(0.3, 0.2), Side::Plus));
}
BENCHMARK(BM_m_periodic);

void BM_finitezone_build(benchmark::State& st) {
  std::mt19937_64 rng(1);
  const ZoneData z = random_zone_data(rng, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(finitezone_build(z).residual);
}
BENCHMARK(BM_finitezone_build)->DenseRange(1, 5, 2);

void BM_shift_optimized_scan(benchmark::State& st) {
  const auto pair = make_pair(NumericKind{FullLineProblem{Coefficient::characteristic(0.0, 2.0, -1.5)}.plus(), {}});
  const auto region = ScanRegion::near_zero(0.1, 2);
  for (auto _ : st) benchmark::DoNotOptimize(optimize_shift(pair.plus, pair.minus, region).sup_value);
}
BENCHMARK(BM_shift_optimized_scan)->Unit(benchmark::kMillisecond);

}  // namespace
