#include <benchmark/benchmark.h>

#include "moems/actuation.hpp"
#include "moems/cantilever.hpp"
#include "moems/modal.hpp"
#include "moems/pipeline.hpp"
#include "moems/presets.hpp"

using namespace moems;

static void modal_assemble(benchmark::State& state) {
  const BridgeGeometry g = presets::fig5_bridge();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_modal_system(g, gold(), 30e6, n));
}
BENCHMARK(modal_assemble)->Arg(8)->Arg(16)->Arg(32);

static void modal_solve(benchmark::State& state) {
  const ModalSystem sys =
      assemble_modal_system(presets::fig5_bridge(), gold(), 30e6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_mode(sys));
}
BENCHMARK(modal_solve)->Arg(8)->Arg(16)->Arg(32);

static void temperature_sweep(benchmark::State& state) {
  FrequencySweepRequest r;
  r.axis = SweepAxis::temperature;
  r.lo = 77.0;
  r.hi = 320.0;
  r.steps = 244;
  r.geometry = presets::fig5_bridge();
  r.material = gold();
  r.substrate = silicon();
  for (auto _ : state) benchmark::DoNotOptimize(frequency_sweep(r, static_cast<int>(state.range(0))));
}
BENCHMARK(temperature_sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void transient_60khz(benchmark::State& state) {
  const BridgeGeometry g = presets::fig5_bridge();
  const LumpedModel l = effective_spring_and_mass(g, gold(), 30e6);
  DriveWaveform d;
  d.kind = DriveWaveform::Kind::square;
  d.frequency = 60e3;
  d.v_on = 1.5 * pull_in_voltage(g, l.stiffness).voltage;
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_transient(g, l, d, 2.0, 2.5e-3, 1.0 / (200.0 * l.frequency)));
}
BENCHMARK(transient_60khz)->Unit(benchmark::kMillisecond);

static void cantilever_pulldown(benchmark::State& state) {
  const CantileverGeometry c = presets::fig13_cantilever();
  for (auto _ : state) benchmark::DoNotOptimize(pulldown_voltage(c, gold(), 300.0));
}
BENCHMARK(cantilever_pulldown)->Unit(benchmark::kMicrosecond);

static void qswitch_60khz(benchmark::State& state) {
  const QSwitchScenario s = presets::fig5_scenario();
  for (auto _ : state) benchmark::DoNotOptimize(run_qswitch(s));
}
BENCHMARK(qswitch_60khz)->Unit(benchmark::kMillisecond);

static void dual_30khz(benchmark::State& state) {
  const DualScenario s = presets::dual_scenario();
  for (auto _ : state) benchmark::DoNotOptimize(run_dual(s, static_cast<int>(state.range(0))));
}
BENCHMARK(dual_30khz)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
