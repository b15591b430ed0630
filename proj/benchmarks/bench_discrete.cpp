#include <benchmark/benchmark.h>

#include "krein/discrete.hpp"
#include "krein/mcatalog.hpp"

using namespace krein;

namespace {

const FullLineProblem kWell{Coefficient::characteristic(-1.0, 1.0, -5.0)};

void BM_interface_eigenvalues(benchmark::State& st) {
  const auto op = discretize(kWell, 40.0, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nonreal_eigenvalues(op, {0.5, 5, 0.2, 5}).size());
}
BENCHMARK(BM_interface_eigenvalues)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_dense_spectrum(benchmark::State& st) {
  const auto op = discretize(kWell, 40.0, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(spectrum(op).complex_pairs.size());
}
BENCHMARK(BM_dense_spectrum)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_functional_kernel(benchmark::State& st) {
  const auto op = discretize({example_q0_potential()}, 10.0, static_cast<int>(st.range(0)));
  const Eigen::MatrixXd T = op.dense_weighted();
  for (auto _ : st) benchmark::DoNotOptimize(functional_kernel(T, 0.1).norm());
}
BENCHMARK(BM_functional_kernel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
