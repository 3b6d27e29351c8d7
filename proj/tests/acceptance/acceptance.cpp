// One PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "beam.hpp"
#include "moems/actuation.hpp"
#include "moems/cantilever.hpp"
#include "moems/errors.hpp"
#include "moems/materials.hpp"
#include "moems/modal.hpp"
#include "moems/pipeline.hpp"
#include "moems/presets.hpp"
#include "pullin_grid.hpp"

using namespace moems;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [miss]");
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool within(double v, double target, double rel) { return std::abs(v - target) <= rel * target; }

// Every bridge geometry a shipped preset evaluates.
std::vector<std::pair<BridgeGeometry, MaterialProps>> preset_bridges() {
  std::vector<std::pair<BridgeGeometry, MaterialProps>> out;
  for (int i = 0; i <= 10; ++i) {
    const double l = 100e-6 + 20e-6 * i;
    out.emplace_back(presets::bridge(l, 80e-6), gold());
    out.emplace_back(presets::bridge(l, 80e-6), aluminum());
  }
  out.emplace_back(presets::fig5_bridge(), gold());
  out.emplace_back(presets::edfa_bridge(), gold());
  return out;
}

Outcome fig3_anchors() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const double f120 = fundamental_frequency(presets::bridge(120e-6, 80e-6), gold(), silicon(), 293.0);
  const double f240 = fundamental_frequency(presets::bridge(240e-6, 80e-6), gold(), silicon(), 293.0);
  const double dt = seconds_since(t0);
  o.require(within(f120, 170e3, 0.25), fmt::format("f(120 um) = {:.1f} kHz", f120 / 1e3));
  o.require(within(f240, 65e3, 0.40), fmt::format("f(240 um) = {:.1f} kHz", f240 / 1e3));
  o.require(dt < 1.0, fmt::format("{:.3f} s", dt));
  return o;
}

Outcome fig4_anchor() {
  Outcome o;
  const BridgeGeometry g = presets::fig5_bridge();
  const double f77 = fundamental_frequency(g, gold(), silicon(), 77.0);
  o.require(within(f77, 250e3, 0.15), fmt::format("f(77 K) = {:.1f} kHz", f77 / 1e3));
  bool decreasing = true;
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 243; ++i) {
    const double f = fundamental_frequency(g, gold(), silicon(), 77.0 + i);
    decreasing = decreasing && f < prev;
    prev = f;
  }
  o.require(decreasing, fmt::format("strictly decreasing to {:.1f} kHz at 320 K", prev / 1e3));
  return o;
}

Outcome buckling() {
  Outcome o;
  const BucklingOnset b = buckling_onset(gold(), silicon(), presets::fig5_bridge());
  o.require(b.has_onset && b.onset_temperature >= 310.0 && b.onset_temperature <= 420.0,
            fmt::format("onset {:.2f} K", b.onset_temperature));
  return o;
}

Outcome ritz_properties() {
  Outcome o;
  // Converged values may differ by rounding; a rise above 1e-12 is real.
  double worst_rise = 0.0;
  double worst_spread = 0.0;
  for (const auto& [g, m] : preset_bridges()) {
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 20; ++n) {
      const double f = fundamental_frequency(g, m, silicon(), 293.0, n);
      if (n > 1) worst_rise = std::max(worst_rise, (f - prev) / prev);
      prev = f;
    }
    const double f8 = fundamental_frequency(g, m, silicon(), 293.0, 8);
    const double f16 = fundamental_frequency(g, m, silicon(), 293.0, 16);
    worst_spread = std::max(worst_spread, std::abs(f16 - f8) / f16);
  }
  for (double t = 77.0; t <= 320.0; t += 9.0) {
    const BridgeGeometry g = presets::fig5_bridge();
    const double f8 = fundamental_frequency(g, gold(), silicon(), t, 8);
    const double f16 = fundamental_frequency(g, gold(), silicon(), t, 16);
    worst_spread = std::max(worst_spread, std::abs(f16 - f8) / f16);
  }
  o.require(worst_rise <= 1e-12,
            fmt::format("f(N) non-increasing for N = 1..20 (worst rise {:.1e})", worst_rise));
  o.require(worst_spread < 1e-3, fmt::format("worst |f16 - f8| / f16 = {:.2e}", worst_spread));

  const BridgeGeometry g = presets::bridge(220e-6, 80e-6);
  const double beam = oracle::clamped_beam_frequency(g.length, g.thickness, 78e9, 19300.0);
  const double beam_err = std::abs(frequency_at_stress(g, gold(), 0.0) / beam - 1.0);
  const double string = oracle::string_frequency(g.length, 19300.0, 3e9);
  const double string_err = std::abs(frequency_at_stress(g, gold(), 3e9) / string - 1.0);
  o.require(beam_err < 0.005, fmt::format("beam limit {:.3f}%", 100 * beam_err));
  o.require(string_err < 0.02, fmt::format("string limit {:.2f}%", 100 * string_err));
  return o;
}

Outcome pull_in() {
  Outcome o;
  double worst_v = 0.0, worst_x = 0.0;
  for (double l : {80e-6, 140e-6, 220e-6, 300e-6, 400e-6})
    for (double k : {5.0, 300.0}) {
      BridgeGeometry g = presets::bridge(l, 0.6 * l);
      g.gap = 1.0e-6 + l * 5e-3;
      const PullIn p = pull_in_voltage(g, k);
      const auto ref = oracle::brute_force_pull_in(g.area(), g.effective_gap(), k);
      worst_v = std::max(worst_v, std::abs(p.voltage / ref.voltage - 1.0));
      worst_x = std::max(worst_x, std::abs(ref.displacement / (g.effective_gap() / 3.0) - 1.0));
    }
  o.require(worst_v < 0.01, fmt::format("worst V_PI error {:.2e}", worst_v));
  o.require(worst_x < 0.01, fmt::format("worst x_PI vs g_eff/3 {:.2e}", worst_x));
  return o;
}

Outcome transient() {
  Outcome o;
  const BridgeGeometry g = presets::fig5_bridge();
  const LumpedModel l = effective_spring_and_mass(g, gold(), 30e6);
  const double period = 1.0 / l.frequency;
  DriveWaveform off;
  off.kind = DriveWaveform::Kind::constant;
  const MembraneTrajectory free =
      integrate_transient(g, l, off, std::numeric_limits<double>::infinity(), 100.0 * period,
                          period / 200.0, {0.2 * g.gap, 0.0});
  auto energy = [&](std::size_t i) {
    return 0.5 * l.effective_mass * free.velocity[i] * free.velocity[i] +
           0.5 * l.stiffness * free.displacement[i] * free.displacement[i];
  };
  double drift = 0.0;
  for (std::size_t i = 0; i < free.size(); ++i)
    drift = std::max(drift, std::abs(energy(i) / energy(0) - 1.0));
  o.require(drift < 1e-3, fmt::format("energy drift {:.1e} over 100 cycles", drift));

  DriveWaveform d;
  d.kind = DriveWaveform::Kind::square;
  d.frequency = 60e3;
  d.v_on = 1.5 * pull_in_voltage(g, l.stiffness).voltage;
  const double dt = period / 200.0;
  const TrajectoryMetrics a = trajectory_metrics(integrate_transient(g, l, d, 2.0, 10.0 / 60e3, dt));
  const TrajectoryMetrics b =
      trajectory_metrics(integrate_transient(g, l, d, 2.0, 10.0 / 60e3, dt / 2.0));
  const double e_down = std::abs(*a.switch_down_time / *b.switch_down_time - 1.0);
  const double e_up = std::abs(*a.release_time / *b.release_time - 1.0);
  const double e_duty = std::abs(a.contact_duty / b.contact_duty - 1.0);
  o.require(std::max({e_down, e_up, e_duty}) < 0.01,
            fmt::format("dt halving: down {:.1e}, release {:.1e}, duty {:.1e}", e_down, e_up,
                        e_duty));
  return o;
}

Outcome cantilever_curl() {
  Outcome o;
  const CantileverGeometry c = presets::fig13_cantilever();
  const CantileverProfile p = profile_and_tip(c, curvature_from_stress(c, gold()));
  const double tip_um = p.tip_deflection * 1e6;
  const double slope_deg = p.tip_slope * 180.0 / 3.14159265358979323846;
  o.require(within(tip_um, 33.0, 0.10), fmt::format("tip {:.2f} um", tip_um));
  o.require(within(slope_deg, 15.0, 0.10), fmt::format("slope {:.2f} deg", slope_deg));
  return o;
}

Outcome cantilever_frequencies() {
  Outcome o;
  const CantileverGeometry big = presets::cantilever(300e-6, 500e-6, 500e-6);
  const CantileverGeometry small = presets::cantilever(50e-6, 30e-6, 30e-6);
  const double f_big = cantilever_frequency(big, gold());
  const double f_small = cantilever_frequency(small, gold());
  o.require(f_big >= 6e3 / 3.0 && f_big <= 6e3 * 3.0 && f_small >= 236e3 / 3.0 &&
                f_small <= 236e3 * 3.0,
            fmt::format("raw {:.2f} / {:.1f} kHz", f_big / 1e3, f_small / 1e3));

  const double s = fit_stiffening_factor({{big, 6e3}, {small, 236e3}}, gold());
  o.require(within(s * f_big, 6e3, 0.20) && within(s * f_small, 236e3, 0.20),
            fmt::format("s = {:.3f}: {:.2f} / {:.1f} kHz", s, s * f_big / 1e3,
                        s * f_small / 1e3));

  const CantileverGeometry tri = presets::triangular_cantilever();
  const double f_tri = cantilever_frequency(tri, gold());
  const double s_tri = fit_stiffening_factor({{tri, 45e3}}, gold());
  o.require(within(s_tri * f_tri, 45e3, 0.20),
            fmt::format("triangular raw {:.1f} kHz, own scalar {:.2f} -> {:.1f} kHz "
                        "(rectangular scalar gives {:.1f} kHz)",
                        f_tri / 1e3, s_tri, s_tri * f_tri / 1e3, s * f_tri / 1e3));
  return o;
}

// Shared by the laser criteria so each run happens once.
struct LaserRuns {
  std::vector<std::pair<double, QSwitchResult>> edfa;
  std::vector<double> edfa_seconds;
  QSwitchResult imaged39;
  QSwitchResult bare39;
  DualScenarioResult dual;
  DualScenario dual_scenario;
};

const LaserRuns& laser_runs() {
  static const LaserRuns runs = [] {
    LaserRuns r;
    for (double f : {20e3, 39e3, 60e3, 120e3}) {
      const auto t0 = std::chrono::steady_clock::now();
      r.edfa.emplace_back(f, run_qswitch(presets::edfa_scenario(f)));
      r.edfa_seconds.push_back(seconds_since(t0));
    }
    r.imaged39 = r.edfa[1].second;
    r.bare39 = run_qswitch(presets::no_imaging_scenario(39e3));
    r.dual_scenario = presets::dual_scenario();
    r.dual = run_dual(r.dual_scenario, 2);
    return r;
  }();
  return runs;
}

Outcome qswitch_regime() {
  Outcome o;
  const LaserRuns& runs = laser_runs();
  for (std::size_t i = 0; i < runs.edfa.size(); ++i) {
    const auto& [f, r] = runs.edfa[i];
    if (!r.stats) {
      o.require(false, fmt::format("{:.0f} kHz: no pulses", f / 1e3));
      continue;
    }
    const PulseStats& s = *r.stats;
    const double cycles = (s.window_end - s.window_start) * f;
    const bool one_per_cycle = std::abs(static_cast<double>(s.pulses.size()) - cycles) < 0.5;
    bool band = true;
    for (const auto& p : s.pulses) band = band && p.fwhm >= 0.3e-6 && p.fwhm <= 1.5e-6;
    o.require(one_per_cycle && band && runs.edfa_seconds[i] < 30.0,
              fmt::format("{:.0f} kHz: {} pulses / {:.0f} cycles, FWHM {:.0f} ns, {:.2f} s",
                          f / 1e3, s.pulses.size(), cycles, s.mean_fwhm() * 1e9,
                          runs.edfa_seconds[i]));
    if (f == 60e3)
      o.require(s.peak_to_cw_ratio >= 20.0, fmt::format("peak/CW {:.1f}", s.peak_to_cw_ratio));
  }
  return o;
}

Outcome dual_sync() {
  Outcome o;
  const LaserRuns& runs = laser_runs();
  const DualScenarioResult& d = runs.dual;
  if (!d.arm_a.stats || !d.arm_b.stats || !d.peak_offset) {
    o.require(false, "an arm did not pulse");
    return o;
  }
  const double frac = *d.peak_offset / d.period;
  o.require(frac < 0.01, fmt::format("offset {:.3f}% of period", 100 * frac));
  const double fa = d.arm_a.stats->mean_fwhm();
  const double fb = d.arm_b.stats->mean_fwhm();
  o.require(within(fa, 820e-9, 0.5), fmt::format("Er FWHM {:.0f} ns", fa * 1e9));
  o.require(within(fb, 820e-9, 0.5), fmt::format("Yb FWHM {:.0f} ns", fb * 1e9));
  return o;
}

Outcome imaging_ordering() {
  Outcome o;
  const LaserRuns& runs = laser_runs();
  if (!runs.imaged39.stats || !runs.bare39.stats) {
    o.require(false, "a run did not pulse");
    return o;
  }
  const PulseStats& a = *runs.imaged39.stats;
  const PulseStats& b = *runs.bare39.stats;
  o.require(b.mean_power < a.mean_power,
            fmt::format("mean {:.0f} -> {:.0f} mW", a.mean_power * 1e3, b.mean_power * 1e3));
  o.require(b.mean_peak() < a.mean_peak(),
            fmt::format("peak {:.2f} -> {:.2f} W", a.mean_peak(), b.mean_peak()));
  o.require(b.mean_fwhm() > a.mean_fwhm(),
            fmt::format("FWHM {:.0f} -> {:.0f} ns", a.mean_fwhm() * 1e9, b.mean_fwhm() * 1e9));
  return o;
}

bool trace_sane(const PowerTrace& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!(t.photon_number[i] >= 0.0 && t.inversion[i] >= 0.0 && t.inversion[i] <= 1.0))
      return false;
  return true;
}

bool energy_bounded(const QSwitchResult& r, const LaserParams& p) {
  if (!r.stats) return true;
  for (const auto& pulse : r.stats->pulses)
    if (pulse.energy > (pulse.inversion_before - pulse.inversion_after) * p.stored_energy_scale())
      return false;
  return true;
}

Outcome rate_equation_properties() {
  Outcome o;
  const LaserRuns& runs = laser_runs();
  std::vector<std::pair<const QSwitchResult*, LaserParams>> all;
  for (const auto& [f, r] : runs.edfa) all.emplace_back(&r, presets::erbium_laser());
  all.emplace_back(&runs.bare39, presets::erbium_laser());
  all.emplace_back(&runs.dual.arm_a, runs.dual_scenario.arm_a.laser);
  all.emplace_back(&runs.dual.arm_b, runs.dual_scenario.laser_b);
  bool sane = true, bounded = true;
  for (const auto& [r, p] : all) {
    sane = sane && trace_sane(r->trace);
    bounded = bounded && energy_bounded(*r, p);
  }
  o.require(sane, fmt::format("phi >= 0, 0 <= n <= 1 on {} traces", all.size()));
  o.require(bounded, "pulse energy <= inversion drop");

  const QSwitchResult again = run_qswitch(presets::edfa_scenario(60e3));
  const QSwitchResult& first = runs.edfa[2].second;
  const bool same = again.trace.output_power == first.trace.output_power &&
                    again.trace.inversion == first.trace.inversion &&
                    again.trajectory.displacement == first.trajectory.displacement;
  const DualScenarioResult dual1 = run_dual(runs.dual_scenario, 1);
  const bool same_dual = dual1.arm_a.trace.output_power == runs.dual.arm_a.trace.output_power &&
                         dual1.arm_b.trace.output_power == runs.dual.arm_b.trace.output_power;
  o.require(same && same_dual, "repeated runs bit-identical (dual with 1 and 2 threads)");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"bridge length anchors", fig3_anchors},
      {"cold bridge anchor", fig4_anchor},
      {"buckling onset", buckling},
      {"Ritz convergence and limits", ritz_properties},
      {"pull-in", pull_in},
      {"transient integrator", transient},
      {"cantilever curl", cantilever_curl},
      {"cantilever frequencies", cantilever_frequencies},
      {"Q-switch regime", qswitch_regime},
      {"dual-wavelength sync", dual_sync},
      {"no-imaging ordering", imaging_ordering},
      {"rate-equation properties", rate_equation_properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
