// Fits the erbium cavity constants and the bridge off-time to the measured
// pulse observables. The search is an adaptive (1+lambda) random walk in log
// parameter space; a fixed seed gives the same result for any --jobs.

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "moems/errors.hpp"
#include "moems/parallel.hpp"
#include "moems/pipeline.hpp"
#include "moems/presets.hpp"

using namespace moems;

namespace {

constexpr double kIons = 2.0e15;
// The accepted FWHM band is [0.3, 1.5] us; fits keep 10% clear of it.
constexpr double kFwhmLow = 0.33e-6;
constexpr double kFwhmHigh = 1.35e-6;

enum Param { off_time, pump_rate, gain, loss, eta0, round_trip, kParams };

using Point = std::array<double, kParams>;

constexpr std::array<const char*, kParams> kNames = {"off_time_s", "pump_rate_per_s",
                                                     "round_trip_gain_coeff", "intrinsic_loss",
                                                     "base_reflectivity", "round_trip_time_s"};
constexpr Point kLower = {3e-6, 1e4, 6.0, 0.3, 0.3, 80e-9};
constexpr Point kUpper = {9e-6, 8e4, 14.0, 2.0, 0.9, 300e-9};

Point shipped_point() {
  const QSwitchScenario s = presets::edfa_scenario(60e3);
  return {*s.drive.off_time,          s.laser.pump_rate, s.laser.round_trip_gain_coeff,
          s.laser.intrinsic_loss,     s.coupling.base_reflectivity, s.laser.round_trip_time};
}

QSwitchScenario apply(QSwitchScenario s, const Point& p, double dt) {
  s.drive.off_time = p[off_time];
  s.laser.pump_rate = p[pump_rate];
  s.laser.round_trip_gain_coeff = p[gain];
  s.laser.intrinsic_loss = p[loss];
  s.laser.round_trip_time = p[round_trip];
  s.laser.saturation_scale = saturation_scale_for_ions(p[gain], p[round_trip], kIons);
  s.coupling.base_reflectivity = p[eta0];
  s.laser_dt = dt;
  return s;
}

struct Evaluation {
  double score = std::numeric_limits<double>::infinity();
  int violations = 0;
  std::array<double, 4> edfa_fwhm{};
  double peak = 0.0, mean = 0.0, fwhm = 0.0, peak_to_cw = 0.0;
};

double sq_log(double value, double target) {
  const double r = std::log(value / target);
  return r * r;
}

// Hard limits: one pulse per cycle with FWHM inside the band on the
// 140 x 80 um device at 20-120 kHz, and at 60 kHz on the 220 x 160 um
// device peak/CW >= 20 with mean power under the 0.9 W damage level.
// Inside the limits the score pulls the 20 kHz FWHM to 326 ns and the
// 60 kHz run to 700 mW mean, 14 W peak and 860 ns.
Evaluation evaluate(const Point& p, double dt) {
  Evaluation e;
  const double freqs[] = {20e3, 39e3, 60e3, 120e3};
  for (int i = 0; i < 4; ++i) {
    const QSwitchResult r = run_qswitch(apply(presets::edfa_scenario(freqs[i]), p, dt));
    if (!r.stats) {
      e.violations += 2;
      continue;
    }
    const PulseStats& s = *r.stats;
    const double cycles = (s.window_end - s.window_start) * freqs[i];
    if (std::abs(static_cast<double>(s.pulses.size()) - cycles) > 0.5) ++e.violations;
    for (const auto& pulse : s.pulses)
      if (pulse.fwhm < kFwhmLow || pulse.fwhm > kFwhmHigh) {
        ++e.violations;
        break;
      }
    e.edfa_fwhm[i] = s.mean_fwhm();
  }
  const QSwitchResult r = run_qswitch(apply(presets::fig5_scenario(), p, dt));
  if (!r.stats) {
    e.violations += 2;
  } else {
    const PulseStats& s = *r.stats;
    e.peak = s.mean_peak();
    e.mean = s.mean_power;
    e.fwhm = s.mean_fwhm();
    e.peak_to_cw = s.peak_to_cw_ratio;
    if (e.peak_to_cw < 20.0) ++e.violations;
    if (e.mean > 0.9) ++e.violations;
  }
  if (e.violations > 0) {
    e.score = 1e3 * e.violations;
    return e;
  }
  e.score = sq_log(e.edfa_fwhm[0], 326e-9) + sq_log(e.mean, 0.7) + sq_log(e.peak, 14.0) +
            sq_log(e.fwhm, 860e-9);
  return e;
}

Evaluation safe_evaluate(const Point& p, double dt) {
  try {
    return evaluate(p, dt);
  } catch (const SimulationError&) {
    Evaluation e;
    e.violations = 99;
    e.score = 1e3 * e.violations;
    return e;
  }
}

void print_point(const char* tag, int generation, const Point& p, const Evaluation& e) {
  fmt::print("{} gen {:4d} score {:.5f}", tag, generation, e.score);
  if (e.violations == 0)
    fmt::print("  fwhm {:.0f}/{:.0f}/{:.0f}/{:.0f} ns  60k: {:.0f} mW {:.1f} W {:.0f} ns x{:.1f}",
               e.edfa_fwhm[0] * 1e9, e.edfa_fwhm[1] * 1e9, e.edfa_fwhm[2] * 1e9,
               e.edfa_fwhm[3] * 1e9, e.mean * 1e3, e.peak, e.fwhm * 1e9, e.peak_to_cw);
  else
    fmt::print("  ({} violations)", e.violations);
  fmt::print("\n");
  for (int i = 0; i < kParams; ++i) fmt::print("    {} = {:.6g}\n", kNames[i], p[i]);
}

Point clamp(Point p) {
  for (int i = 0; i < kParams; ++i) p[i] = std::min(kUpper[i], std::max(kLower[i], p[i]));
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fit the erbium cavity preset to the measured pulse observables", "moems-calibrate"};
  int generations = 40;
  int population = 8;
  int jobs = 1;
  unsigned long long seed = 20260415;
  double dt = 5e-9;
  double step = 0.05;
  bool random_start = false;
  app.add_option("--generations", generations, "Search generations")->check(CLI::Range(0, 100000))->capture_default_str();
  app.add_option("--population", population, "Candidates per generation")->check(CLI::Range(1, 1024))->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--dt", dt, "Laser time step, s")->capture_default_str();
  app.add_option("--step", step, "Initial log-space step")->capture_default_str();
  app.add_flag("--random-start", random_start, "Start from a random point instead of the shipped preset");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Point best = shipped_point();
  if (random_start)
    for (int i = 0; i < kParams; ++i)
      best[i] = kLower[i] * std::pow(kUpper[i] / kLower[i], unit(rng));
  Evaluation best_eval = safe_evaluate(best, dt);
  print_point("start", 0, best, best_eval);

  for (int g = 1; g <= generations; ++g) {
    std::vector<Point> candidates(static_cast<std::size_t>(population));
    for (auto& c : candidates) {
      for (int i = 0; i < kParams; ++i) c[i] = best[i] * std::exp(step * normal(rng));
      c = clamp(c);
    }
    std::vector<Evaluation> evals(candidates.size());
    parallel_for(candidates.size(), jobs, [&](std::size_t i) { evals[i] = safe_evaluate(candidates[i], dt); });

    std::size_t pick = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (evals[i].score < best_eval.score && (pick == candidates.size() || evals[i].score < evals[pick].score))
        pick = i;
    if (pick < candidates.size()) {
      best = candidates[pick];
      best_eval = evals[pick];
      step = std::min(0.5, step * 1.3);
      print_point("better", g, best, best_eval);
    } else {
      step = std::max(1e-3, step * 0.8);
    }
  }

  fmt::print("\n# laser and coupling block for the fitted preset\n");
  fmt::print("drive:\n  off_time: {:.6g} us\n", best[off_time] * 1e6);
  fmt::print("coupling:\n  base_reflectivity: {:.6g}\n", best[eta0]);
  fmt::print("laser:\n  upper_state_lifetime: 10 ms\n  round_trip_time: {:.6g} ns\n", best[round_trip] * 1e9);
  fmt::print("  round_trip_gain_coeff: {:.6g}\n  pump_rate: {:.6g} 1/s\n", best[gain], best[pump_rate]);
  fmt::print("  output_coupler_reflectivity: 0.04\n  intrinsic_loss: {:.6g}\n", best[loss]);
  fmt::print("  spontaneous_seed: 5e16 1/s\n  ions: 2e15\n");
  return best_eval.violations == 0 ? 0 : 1;
}
