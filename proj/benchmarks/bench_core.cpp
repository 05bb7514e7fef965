#include <benchmark/benchmark.h>

#include "squint/canonical.hpp"
#include "squint/hamiltonian.hpp"
#include "squint/states.hpp"
#include "squint/uncertainty.hpp"

using namespace squint;

namespace {

void BM_MatrixExponential(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymplecticMatrix s = random_symplectic(n / 2, 17);
  const Matrix m = 0.5 * (s.matrix() + s.matrix().transpose());
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_exponential(m));
  }
}
BENCHMARK(BM_MatrixExponential)->Arg(2)->Arg(4)->Arg(8);

void BM_CharacteristicCoefficients(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GaussianState s = random_valid_state(n / 2, 3, Purity::Mixed);
  for (auto _ : state) {
    benchmark::DoNotOptimize(characteristic_coefficients(s.cov()));
  }
}
BENCHMARK(BM_CharacteristicCoefficients)->Arg(4)->Arg(6)->Arg(8);

void BM_Williamson(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const GaussianState s = random_valid_state(modes, 5, Purity::Mixed);
  for (auto _ : state) {
    benchmark::DoNotOptimize(williamson(s.cov()));
  }
}
BENCHMARK(BM_Williamson)->Arg(1)->Arg(2)->Arg(4);

void BM_PropagateStationary(benchmark::State& state) {
  const HamiltonianSpec spec = preset_stationary(1.0, 1.0);
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate_ct(spec, 0.0, 1.0, step));
  }
}
BENCHMARK(BM_PropagateStationary)->Arg(1000)->Arg(10000);

void BM_RandomAudit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_random_audit(3, 50, 11));
  }
}
BENCHMARK(BM_RandomAudit);

}  // namespace

BENCHMARK_MAIN();
