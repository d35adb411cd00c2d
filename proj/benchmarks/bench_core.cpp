// Microbenchmarks for the FFT-bound kernels: transforms, multiplier
// application, the dealiased flux divergence, and one exponential-RK4 step.

#include <benchmark/benchmark.h>

#include "radgas/fft.hpp"
#include "radgas/initial_data.hpp"
#include "radgas/integrator.hpp"
#include "radgas/model.hpp"
#include "radgas/norms.hpp"
#include "radgas/operators.hpp"
#include "radgas/symbols.hpp"

using namespace radgas;

namespace {

Field make_field(int n, int N) {
  Grid g(n, N, 100.0);
  return build_initial_data(InitialDataSpec::gaussian(0.1, 2.5), g);
}

void BM_forward_transform(benchmark::State& state) {
  Field f = make_field(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(forward_transform(f));
}
BENCHMARK(BM_forward_transform)->Arg(128)->Arg(256)->Arg(512);

void BM_roundtrip(benchmark::State& state) {
  Field f = make_field(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_transform(forward_transform(f)));
}
BENCHMARK(BM_roundtrip)->Arg(256);

void BM_apply_semigroup(benchmark::State& state) {
  Field f = make_field(2, static_cast<int>(state.range(0)));
  SpectralField F = forward_transform(f);
  const PropagatorSymbol g = semigroup_symbol(1.0);
  for (auto _ : state) {
    SpectralField work = F;
    apply_multiplier_inplace(work, g);
    benchmark::DoNotOptimize(work);
  }
}
BENCHMARK(BM_apply_semigroup)->Arg(256)->Arg(512);

void BM_flux_divergence(benchmark::State& state) {
  Field f = make_field(2, static_cast<int>(state.range(0)));
  SpectralField F = forward_transform(f);
  const FluxSpec flux = burgers_flux(2);
  for (auto _ : state) benchmark::DoNotOptimize(flux_divergence_spectral(F, flux));
}
BENCHMARK(BM_flux_divergence)->Arg(256)->Arg(512);

void BM_rk4_step(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Grid g(2, N, 100.0);
  Field f = build_initial_data(InitialDataSpec::gaussian(0.1, 2.5), g);
  Stepper stepper(g, 0.1, Scheme::ExpRK4, burgers_flux(2), true, 10.0);
  SpectralField U = forward_transform(f);
  for (auto _ : state) {
    stepper.step(U, 0.0);
    benchmark::DoNotOptimize(U);
  }
}
BENCHMARK(BM_rk4_step)->Arg(128)->Arg(256)->Arg(512);

void BM_sobolev_norm(benchmark::State& state) {
  Field f = make_field(2, 256);
  SpectralField F = forward_transform(f);
  for (auto _ : state) benchmark::DoNotOptimize(sobolev_norm(F, 3));
}
BENCHMARK(BM_sobolev_norm);

}  // namespace

BENCHMARK_MAIN();
