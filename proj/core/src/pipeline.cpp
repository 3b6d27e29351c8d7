#include "moems/pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "moems/errors.hpp"

namespace moems {

DriveWaveform make_square_drive(const BridgeDrive& drive, double pull_in) {
  DriveWaveform w;
  w.kind = DriveWaveform::Kind::square;
  w.frequency = drive.frequency;
  w.v_on = drive.v_on_over_pull_in > 0.0 ? drive.v_on_over_pull_in * pull_in : drive.v_on;
  w.v_off = drive.v_off;
  w.rise_time = drive.rise_time;
  w.duty = drive.off_time ? 1.0 - *drive.off_time * drive.frequency : drive.duty;
  w.validate();
  return w;
}

PulseDetection analysis_window(double duration, double frequency, int periods) {
  if (!(frequency > 0.0) || periods < 1)
    throw std::invalid_argument("analysis window needs a drive frequency and >= 1 period");
  const double span = periods / frequency;
  if (span > duration)
    throw std::invalid_argument("run is shorter than the requested analysis periods");
  PulseDetection d;
  d.window_start = duration - span;
  d.window_end = duration;
  return d;
}

namespace {

struct Mechanics {
  LumpedModel lumped;
  PullIn pull_in;
  DriveWaveform drive;
  CouplingModel coupling;
  MembraneTrajectory trajectory;
};

Mechanics run_mechanics(const QSwitchScenario& s) {
  s.material.validate();
  s.substrate.validate();
  if (s.duration * s.drive.frequency < 3.0)
    throw std::invalid_argument("duration must cover at least three drive periods");
  Mechanics m;
  const double sigma = stress_at_temperature(s.material, s.substrate, s.temperature);
  m.lumped = effective_spring_and_mass(s.bridge, s.material, sigma, s.basis_size);
  m.pull_in = pull_in_voltage(s.bridge, m.lumped.stiffness);
  m.drive = make_square_drive(s.drive, m.pull_in.voltage);
  const double dt = s.mechanical_dt > 0.0 ? s.mechanical_dt : 1.0 / (200.0 * m.lumped.frequency);
  m.trajectory = integrate_transient(s.bridge, m.lumped, m.drive, s.q_factor, s.duration, dt);
  m.coupling = s.coupling;
  if (m.coupling.tilt_per_displacement == 0.0)
    m.coupling.tilt_per_displacement = default_tilt_per_displacement(s.bridge.gap);
  return m;
}

void run_laser(QSwitchResult& r, const LaserParams& laser, const QSwitchScenario& s) {
  r.schedule = loss_schedule(r.trajectory, r.coupling);
  r.trace = simulate_qswitch(laser, r.schedule, s.duration, s.laser_dt);
  r.cw = cw_steady_state(laser, r.coupling.base_reflectivity);
  r.detection = analysis_window(s.duration, s.drive.frequency, s.analysis_periods);
  try {
    r.stats = extract_pulses(r.trace, r.cw.output_power, r.detection);
  } catch (const SimulationError& e) {
    if (e.kind() != ErrorKind::no_pulses) throw;
  }
}

QSwitchResult from_mechanics(const Mechanics& m) {
  QSwitchResult r;
  r.lumped = m.lumped;
  r.pull_in = m.pull_in;
  r.drive = m.drive;
  r.coupling = m.coupling;
  r.trajectory = m.trajectory;
  return r;
}

}  // namespace

QSwitchResult run_qswitch(const QSwitchScenario& scenario) {
  const Mechanics m = run_mechanics(scenario);
  QSwitchResult r = from_mechanics(m);
  run_laser(r, scenario.laser, scenario);
  return r;
}

DualScenarioResult run_dual(const DualScenario& scenario, int jobs) {
  const Mechanics m = run_mechanics(scenario.arm_a);
  const QSwitchScenario& s = scenario.arm_a;
  CouplingModel coupling_b = scenario.coupling_b;
  if (coupling_b.tilt_per_displacement == 0.0)
    coupling_b.tilt_per_displacement = m.coupling.tilt_per_displacement;

  const PulseDetection window = analysis_window(s.duration, s.drive.frequency, s.analysis_periods);
  DualResult dual = simulate_dual(s.laser, scenario.laser_b, m.trajectory, m.coupling, coupling_b,
                                  s.duration, s.laser_dt, window, jobs);

  DualScenarioResult out;
  out.period = 1.0 / s.drive.frequency;
  out.arm_a = from_mechanics(m);
  out.arm_b = from_mechanics(m);
  out.arm_b.coupling = coupling_b;
  out.arm_a.schedule = std::move(dual.schedule_a);
  out.arm_b.schedule = std::move(dual.schedule_b);
  out.arm_a.trace = std::move(dual.trace_a);
  out.arm_b.trace = std::move(dual.trace_b);
  out.arm_a.stats = std::move(dual.stats_a);
  out.arm_b.stats = std::move(dual.stats_b);
  out.arm_a.cw = cw_steady_state(s.laser, m.coupling.base_reflectivity);
  out.arm_b.cw = cw_steady_state(scenario.laser_b, coupling_b.base_reflectivity);
  out.arm_a.detection = window;
  out.arm_b.detection = window;
  out.peak_offset = dual.peak_offset;
  return out;
}

}  // namespace moems
