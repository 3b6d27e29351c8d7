#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "laser_steady.hpp"
#include "moems/errors.hpp"
#include "moems/laser.hpp"
#include "moems/pipeline.hpp"
#include "moems/presets.hpp"

using namespace moems;

namespace {

LossSchedule constant_schedule(double rb, double duration, double dt = 1e-7) {
  LossSchedule s;
  s.dt = dt;
  s.back_reflectivity.assign(static_cast<std::size_t>(duration / dt) + 2, rb);
  return s;
}

bool is_no_pulses(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SimulationError& e) {
    return e.kind() == ErrorKind::no_pulses;
  }
  return false;
}

}  // namespace

TEST_SUITE("laser") {

TEST_CASE("decoupled mirror stays below threshold") {
  const LaserParams p = presets::erbium_laser();
  const PowerTrace t = simulate_qswitch(p, constant_schedule(0.0, 1e-3), 1e-3, 5e-9);
  CHECK(is_no_pulses([&] { extract_pulses(t, 0.0); }));
  CHECK(std::all_of(t.output_power.begin(), t.output_power.end(),
                    [&](double w) { return w < 1e-3; }));
  CHECK_FALSE(cw_steady_state(p, 0.0).lasing);
}

TEST_CASE("continuous lasing clamps the gain to the loss") {
  const LaserParams p = presets::erbium_laser();
  const double rb = presets::erbium_imaged_coupling().base_reflectivity;
  const double duration = 60e-3;
  const PowerTrace t = simulate_qswitch(p, constant_schedule(rb, duration, 1e-6), duration, 5e-9);
  const double n = t.inversion.back();
  CHECK(p.round_trip_gain_coeff * n == doctest::Approx(p.loss(rb)).epsilon(1e-3));

  const oracle::LaserFixedPoint fp = oracle::seeded_steady_state(p, rb);
  CHECK(n == doctest::Approx(fp.inversion).epsilon(1e-4));
  CHECK(t.photon_number.back() == doctest::Approx(fp.photon_number).epsilon(1e-3));

  const SteadyState cw = cw_steady_state(p, rb);
  REQUIRE(cw.lasing);
  CHECK(cw.inversion == doctest::Approx(p.loss(rb) / p.round_trip_gain_coeff));
  CHECK(t.output_power.back() == doctest::Approx(cw.output_power).epsilon(0.01));
}

TEST_CASE("output power definition") {
  const LaserParams p = presets::erbium_laser();
  const double h = 6.62607015e-34, c = 299792458.0;
  CHECK(p.power_per_photon() ==
        doctest::Approx(h * c / 1.55e-6 * (1.0 - 0.04) / p.round_trip_time));
  CHECK(p.loss(0.5) == doctest::Approx(p.intrinsic_loss - std::log(0.04 * 0.5)));
  CHECK(p.loss(0.0) == doctest::Approx(p.intrinsic_loss - std::log(0.04 * 1e-6)));
}

TEST_CASE("step guards") {
  const LaserParams p = presets::erbium_laser();
  const LossSchedule s = constant_schedule(0.5, 1e-4, 1e-8);
  for (double dt : {p.round_trip_time * 0.6, 2e-8}) {
    try {
      simulate_qswitch(p, s, 1e-4, dt);
      FAIL("expected step_size");
    } catch (const SimulationError& e) {
      CHECK(e.kind() == ErrorKind::step_size);
    }
  }
  CHECK(max_stable_step(p, s) > 5e-9);
}

TEST_CASE("Gaussian pulse width within one sample") {
  PowerTrace t;
  t.dt = 10e-9;
  const double sigma = 200e-9;
  for (int i = 0; i < 4000; ++i) {
    const double time = i * t.dt;
    double w = 1e-3;
    for (double c : {10e-6, 20e-6, 30e-6})
      w += 10.0 * std::exp(-0.5 * std::pow((time - c) / sigma, 2));
    t.output_power.push_back(w);
    t.photon_number.push_back(0.0);
    t.inversion.push_back(0.0);
  }
  const PulseStats s = extract_pulses(t, 0.1);
  REQUIRE(s.pulses.size() == 3);
  for (const auto& p : s.pulses) CHECK(std::abs(p.fwhm - 2.3548 * sigma) < t.dt);
  CHECK(s.repetition_rate == doctest::Approx(1e5).epsilon(1e-6));
  CHECK(s.peak_to_cw_ratio == doctest::Approx(s.max_peak() / 0.1));
  for (const auto& p : s.pulses) CHECK(p.energy <= p.peak_power * 5.0 * p.fwhm);
}

TEST_CASE("flat trace has no pulses") {
  PowerTrace t;
  t.dt = 1e-9;
  t.output_power.assign(1000, 2.0);
  t.photon_number.assign(1000, 0.0);
  t.inversion.assign(1000, 0.0);
  CHECK(is_no_pulses([&] { extract_pulses(t, 1.0); }));
}

TEST_CASE("pulses cut by the analysis window are dropped") {
  PowerTrace t;
  t.dt = 10e-9;
  for (int i = 0; i < 3000; ++i) {
    const double time = i * t.dt;
    double w = 1e-3;
    for (double c : {0.0, 15e-6, 30e-6}) w += 10.0 * std::exp(-0.5 * std::pow((time - c) / 2e-7, 2));
    t.output_power.push_back(w);
    t.photon_number.push_back(0.0);
    t.inversion.push_back(0.0);
  }
  const PulseStats s = extract_pulses(t, 0.1);
  CHECK(s.pulses.size() == 1);
}

TEST_CASE("calibrated Er preset across the drive band") {
  for (double f : {20e3, 39e3, 60e3, 120e3}) {
    CAPTURE(f);
    const QSwitchResult r = run_qswitch(presets::edfa_scenario(f));
    REQUIRE(r.stats);
    const PulseStats& s = *r.stats;
    const double cycles = (s.window_end - s.window_start) * f;
    CHECK(static_cast<double>(s.pulses.size()) == doctest::Approx(cycles).epsilon(1e-3));
    CHECK(s.repetition_rate == doctest::Approx(f).epsilon(1e-3));
    for (const auto& p : s.pulses) {
      CHECK(p.fwhm > 0.3e-6);
      CHECK(p.fwhm < 1.5e-6);
    }
  }
}

TEST_CASE("rate-equation invariants on a driven run") {
  const QSwitchScenario sc = presets::fig5_scenario();
  const QSwitchResult r = run_qswitch(sc);
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    CHECK(r.trace.photon_number[i] >= 0.0);
    CHECK(r.trace.inversion[i] >= 0.0);
    CHECK(r.trace.inversion[i] <= 1.0);
  }
  REQUIRE(r.stats);
  for (const auto& p : r.stats->pulses)
    CHECK(p.energy <= (p.inversion_before - p.inversion_after) * sc.laser.stored_energy_scale());
}

TEST_CASE("pulse statistics converge under dt halving") {
  QSwitchScenario a = presets::fig5_scenario();
  QSwitchScenario b = a;
  b.laser_dt = a.laser_dt / 2.0;
  const PulseStats sa = *run_qswitch(a).stats;
  const PulseStats sb = *run_qswitch(b).stats;
  CHECK(sa.pulses.size() == sb.pulses.size());
  CHECK(sa.mean_fwhm() == doctest::Approx(sb.mean_fwhm()).epsilon(0.01));
  CHECK(sa.mean_peak() == doctest::Approx(sb.mean_peak()).epsilon(0.01));
  CHECK(sa.mean_power == doctest::Approx(sb.mean_power).epsilon(0.01));
  CHECK(sa.repetition_rate == doctest::Approx(sb.repetition_rate).epsilon(0.01));
  CHECK(sa.peak_to_cw_ratio == doctest::Approx(sb.peak_to_cw_ratio).epsilon(0.01));
}

TEST_CASE("identical arms give identical traces") {
  DualScenario d = presets::dual_scenario();
  d.laser_b = d.arm_a.laser;
  d.coupling_b = d.arm_a.coupling;
  const DualScenarioResult r = run_dual(d, 2);
  CHECK(r.arm_a.trace.output_power == r.arm_b.trace.output_power);
  CHECK(r.arm_a.trace.inversion == r.arm_b.trace.inversion);
}

TEST_CASE("an arm below threshold does not disturb the other") {
  DualScenario d = presets::dual_scenario();
  const DualScenarioResult ref = run_dual(d, 1);
  d.laser_b.pump_rate = 10.0;
  const DualScenarioResult r = run_dual(d, 2);
  CHECK_FALSE(r.arm_b.stats);
  REQUIRE(r.arm_a.stats);
  CHECK(r.arm_a.trace.output_power == ref.arm_a.trace.output_power);
  CHECK_FALSE(r.peak_offset);
}

TEST_CASE("parameter validation") {
  LaserParams p = presets::erbium_laser();
  p.output_coupler_reflectivity = 1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = presets::erbium_laser();
  p.pump_rate = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK(saturation_scale_for_ions(9.0, 100e-9, 1e15) == doctest::Approx(9.0 / (100e-9 * 1e15)));
}

}
