#include "moems/actuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "moems/constants.hpp"
#include "moems/errors.hpp"

namespace moems {

double capacitance(const BridgeGeometry& geom, double x) {
  geom.validate();
  if (!(x >= 0.0 && x <= geom.gap))
    throw SimulationError(ErrorKind::domain, "capacitance: displacement outside [0, gap]");
  return kVacuumPermittivity * geom.area() / (geom.effective_gap() - x);
}

PullIn pull_in_voltage(const BridgeGeometry& geom, double stiffness) {
  geom.validate();
  if (!(stiffness > 0.0)) throw std::invalid_argument("stiffness must be positive");
  const double g = geom.effective_gap();
  return {std::sqrt(8.0 * stiffness * g * g * g / (27.0 * kVacuumPermittivity * geom.area())),
          g / 3.0};
}

double LumpedModel::omega() const { return 2.0 * kPi * frequency; }

LumpedModel effective_spring_and_mass(const BridgeGeometry& geom, const MaterialProps& props,
                                      double sigma, int basis_size) {
  const FundamentalMode mode =
      fundamental_mode(assemble_modal_system(geom, props, sigma, basis_size));
  // Coefficients are M-normalized, so the modal mass per unit midspan
  // deflection is 1 / w(1/2)^2.
  const double center = mode_shape(mode.coefficients, 0.5);
  LumpedModel out;
  out.frequency = mode.frequency;
  out.effective_mass = 1.0 / (center * center);
  out.stiffness = out.effective_mass * mode.eigenvalue;
  return out;
}

void DriveWaveform::validate() const {
  if (!(v_on >= v_off && v_off >= 0.0))
    throw std::invalid_argument("drive voltages must satisfy v_on >= v_off >= 0");
  switch (kind) {
    case Kind::square:
      if (!(frequency > 0.0) || !std::isfinite(frequency))
        throw std::invalid_argument("square drive frequency must be positive");
      if (!(duty > 0.0 && duty < 1.0)) throw std::invalid_argument("duty must be in (0, 1)");
      if (!(rise_time >= 0.0)) throw std::invalid_argument("rise time must be non-negative");
      if (rise_time > std::min(duty, 1.0 - duty) / frequency)
        throw std::invalid_argument("rise time longer than the on or off phase");
      break;
    case Kind::constant:
      break;
    case Kind::sampled:
      if (samples.empty()) throw std::invalid_argument("sampled drive needs samples");
      for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].first > samples[i - 1].first))
          throw std::invalid_argument("sampled drive times must be strictly increasing");
      for (const auto& s : samples)
        if (!(s.second >= 0.0)) throw std::invalid_argument("sampled voltages must be >= 0");
      break;
  }
}

double DriveWaveform::voltage(double t) const {
  switch (kind) {
    case Kind::constant:
      return v_on;
    case Kind::sampled: {
      if (t <= samples.front().first) return samples.front().second;
      if (t >= samples.back().first) return samples.back().second;
      const auto it = std::upper_bound(samples.begin(), samples.end(), t,
                                       [](double v, const auto& s) { return v < s.first; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double f = (t - lo.first) / (hi.first - lo.first);
      return lo.second + f * (hi.second - lo.second);
    }
    case Kind::square: {
      const double period = 1.0 / frequency;
      const double tp = t - std::floor(t * frequency) * period;
      const double t_on = duty * period;
      const double swing = v_on - v_off;
      if (tp < t_on)
        return rise_time > 0.0 ? v_off + swing * std::min(1.0, tp / rise_time) : v_on;
      return rise_time > 0.0 ? v_off + swing * std::max(0.0, 1.0 - (tp - t_on) / rise_time)
                             : v_off;
    }
  }
  return 0.0;
}

MembraneTrajectory integrate_transient(const BridgeGeometry& geom, const LumpedModel& lumped,
                                       const DriveWaveform& drive, double q_factor,
                                       double duration, double dt, InitialState initial) {
  geom.validate();
  drive.validate();
  if (!(q_factor > 0.0)) throw std::invalid_argument("Q factor must be positive");
  if (!(duration > 0.0)) throw std::invalid_argument("duration must be positive");
  if (!(lumped.stiffness > 0.0 && lumped.effective_mass > 0.0))
    throw std::invalid_argument("lumped model must have positive stiffness and mass");
  if (!(dt > 0.0) || dt > 1.0 / (50.0 * lumped.frequency))
    throw SimulationError(ErrorKind::step_size,
                          "time step " + std::to_string(dt) + " s exceeds 1/(50 f1) = " +
                              std::to_string(1.0 / (50.0 * lumped.frequency)) + " s");
  if (!(initial.displacement <= geom.gap))
    throw std::invalid_argument("initial displacement beyond the gap");

  const double m = lumped.effective_mass;
  const double k = lumped.stiffness;
  const double c = std::isinf(q_factor) ? 0.0 : m * lumped.omega() / q_factor;
  const double gap = geom.gap;
  const double g_eff = geom.effective_gap();
  const double half_e_a = 0.5 * kVacuumPermittivity * geom.area();

  auto electrostatic = [&](double t, double x) {
    const double v = drive.voltage(t);
    const double d = g_eff - std::min(x, gap);
    return half_e_a * v * v / (d * d);
  };
  auto accel = [&](double t, double x, double v) {
    return (electrostatic(t, x) - k * x - c * v) / m;
  };

  const std::size_t n = static_cast<std::size_t>(std::floor(duration / dt + 1e-9)) + 1;
  MembraneTrajectory tr;
  tr.dt = dt;
  tr.gap = gap;
  tr.displacement.resize(n);
  tr.velocity.resize(n);
  tr.contact.resize(n);
  tr.voltage.resize(n);

  double x = initial.displacement;
  double v = initial.velocity;
  bool in_contact = x >= gap;
  if (in_contact) x = gap, v = 0.0;
  tr.displacement[0] = x;
  tr.velocity[0] = v;
  tr.contact[0] = in_contact;
  tr.voltage[0] = drive.voltage(0.0);

  for (std::size_t i = 1; i < n; ++i) {
    const double t = static_cast<double>(i - 1) * dt;
    const double t_next = static_cast<double>(i) * dt;
    if (in_contact && electrostatic(t_next, gap) - k * gap >= 0.0) {
      tr.displacement[i] = gap;
      tr.velocity[i] = 0.0;
      tr.contact[i] = true;
      tr.voltage[i] = drive.voltage(t_next);
      continue;
    }
    in_contact = false;

    const double k1x = v;
    const double k1v = accel(t, x, v);
    const double k2x = v + 0.5 * dt * k1v;
    const double k2v = accel(t + 0.5 * dt, x + 0.5 * dt * k1x, v + 0.5 * dt * k1v);
    const double k3x = v + 0.5 * dt * k2v;
    const double k3v = accel(t + 0.5 * dt, x + 0.5 * dt * k2x, v + 0.5 * dt * k2v);
    const double k4x = v + dt * k3v;
    const double k4v = accel(t + dt, x + dt * k3x, v + dt * k3v);
    x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);

    if (!std::isfinite(x) || !std::isfinite(v))
      throw SimulationError(ErrorKind::non_finite,
                            "membrane state became non-finite at t = " + std::to_string(t_next) +
                                " s");
    if (x >= gap) {
      x = gap;
      v = 0.0;
      in_contact = true;
    }
    tr.displacement[i] = x;
    tr.velocity[i] = v;
    tr.contact[i] = in_contact;
    tr.voltage[i] = drive.voltage(t_next);
  }
  return tr;
}

MembraneTrajectory simulate_transient(const BridgeGeometry& geom, const MaterialProps& props,
                                      double sigma, const DriveWaveform& drive, double q_factor,
                                      double duration, double dt, int basis_size) {
  const LumpedModel lumped = effective_spring_and_mass(geom, props, sigma, basis_size);
  if (dt <= 0.0) dt = 1.0 / (200.0 * lumped.frequency);
  return integrate_transient(geom, lumped, drive, q_factor, duration, dt);
}

TrajectoryMetrics trajectory_metrics(const MembraneTrajectory& traj) {
  const std::size_t n = traj.size();
  if (n < 2) throw std::invalid_argument("trajectory needs at least two samples");
  const double lo = 0.1 * traj.gap;
  const double hi = 0.9 * traj.gap;
  const auto& x = traj.displacement;

  auto crossing = [&](std::size_t i, double level) {
    // Linear interpolation between samples i-1 and i.
    const double a = x[i - 1];
    const double b = x[i];
    return traj.time(i - 1) + traj.dt * (level - a) / (b - a);
  };

  bool actuated = false;
  double down_sum = 0.0, up_sum = 0.0;
  int downs = 0, ups = 0;
  // NaN marks no pending transit.
  const double none = std::numeric_limits<double>::quiet_NaN();
  double t_low_up = none, t_high_down = none;
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] > lo) actuated = true;
    if (x[i - 1] < lo && x[i] >= lo) t_low_up = crossing(i, lo);
    if (x[i - 1] < hi && x[i] >= hi && !std::isnan(t_low_up)) {
      down_sum += crossing(i, hi) - t_low_up;
      ++downs;
      t_low_up = none;
    }
    if (x[i - 1] > hi && x[i] <= hi) t_high_down = crossing(i, hi);
    if (x[i - 1] > lo && x[i] <= lo && !std::isnan(t_high_down)) {
      up_sum += crossing(i, lo) - t_high_down;
      ++ups;
      t_high_down = none;
    }
    // A turnaround between the thresholds voids the pending transit.
    if (x[i] < lo) t_high_down = none;
    if (x[i] > hi) t_low_up = none;
  }
  if (!actuated)
    throw SimulationError(ErrorKind::no_actuation_event,
                          "trajectory never exceeds 10% of the gap");

  TrajectoryMetrics m;
  if (downs > 0) m.switch_down_time = down_sum / downs;
  if (ups > 0) m.release_time = up_sum / ups;
  m.down_events = downs;
  m.release_events = ups;
  m.contact_duty = static_cast<double>(std::count(traj.contact.begin(), traj.contact.end(), true)) /
                   static_cast<double>(n);
  return m;
}

}  // namespace moems
