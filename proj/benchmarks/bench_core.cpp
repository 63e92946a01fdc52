#include <benchmark/benchmark.h>

#include "gbx/diagnostics.hpp"
#include "gbx/integrator.hpp"
#include "gbx/solutions.hpp"

namespace {

using namespace gbx;

WaveState soliton_state(const Dft& dft) {
  const InitialData init = initial_single(dft.grid(), 0.375, 0.0, +1);
  return make_wave_state(dft, init.z0, init.z1);
}

void BM_TransformRoundTrip(benchmark::State& state) {
  const TorusGrid grid(-60.0, 60.0, static_cast<int>(state.range(0)));
  const Dft dft(grid);
  const InitialData init = initial_single(grid, 0.375, 0.0, +1);
  const SpectrumField spec = dft.forward(init.z0);
  for (auto _ : state) {
    NodalField z = dft.inverse(spec);
    benchmark::DoNotOptimize(dft.forward(z));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TransformRoundTrip)->Arg(240)->Arg(960)->Arg(4800)->Arg(6400);

void BM_Step(benchmark::State& state) {
  const TorusGrid grid(-60.0, 60.0, static_cast<int>(state.range(0)));
  const Dft dft(grid);
  const Stepper stepper(grid, 1e-3, Nonlinearity::quadratic());
  WaveState wave = soliton_state(dft);
  for (auto _ : state) {
    wave = stepper.step(wave);
    wave.t = 0.0;  // keep the run bounded
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Step)->Arg(240)->Arg(960)->Arg(4800)->Arg(6400);

void BM_SobolevNorm(benchmark::State& state) {
  const TorusGrid grid(-60.0, 60.0, static_cast<int>(state.range(0)));
  const Dft dft(grid);
  const WaveState wave = soliton_state(dft);
  for (auto _ : state) benchmark::DoNotOptimize(sobolev_norm(wave.zhat, 2.0));
}
BENCHMARK(BM_SobolevNorm)->Arg(960)->Arg(6400);

void BM_BlowupDetect(benchmark::State& state) {
  const TorusGrid grid(-60.0, 60.0, 6400);
  const Dft dft(grid);
  const WaveState wave = soliton_state(dft);
  const BlowupPolicy policy{};
  for (auto _ : state) benchmark::DoNotOptimize(detect_blowup(wave, policy, dft));
}
BENCHMARK(BM_BlowupDetect);

}  // namespace

BENCHMARK_MAIN();
