#include "moems/laser.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "moems/constants.hpp"
#include "moems/errors.hpp"
#include "moems/parallel.hpp"

namespace moems {

namespace {

constexpr double kReflectivityFloor = 1e-6;
constexpr double kPhotonOverflow = 1e30;
// RK4 is stable on the negative real axis up to |z| ~ 2.785.
constexpr double kStableProduct = 2.5;

}  // namespace

void LaserParams::validate() const {
  if (!(upper_state_lifetime > 0.0)) throw std::invalid_argument("lifetime must be positive");
  if (!(round_trip_time > 0.0)) throw std::invalid_argument("round-trip time must be positive");
  if (!(output_coupler_reflectivity > 0.0 && output_coupler_reflectivity < 1.0))
    throw std::invalid_argument("output coupler reflectivity must be in (0, 1)");
  if (!(round_trip_gain_coeff > 0.0)) throw std::invalid_argument("gain must be positive");
  if (!(pump_rate >= 0.0) || !(intrinsic_loss >= 0.0) || !(spontaneous_seed >= 0.0) ||
      !(saturation_scale >= 0.0))
    throw std::invalid_argument("rates and losses must be non-negative");
  if (!(label_wavelength > 0.0)) throw std::invalid_argument("wavelength must be positive");
}

double LaserParams::photon_energy() const { return kPlanck * kSpeedOfLight / label_wavelength; }

double LaserParams::loss(double back_reflectivity) const {
  return intrinsic_loss -
         std::log(output_coupler_reflectivity * std::max(back_reflectivity, kReflectivityFloor));
}

double LaserParams::stored_energy_scale() const {
  return round_trip_gain_coeff * photon_energy() / (round_trip_time * saturation_scale);
}

double LaserParams::power_per_photon() const {
  return photon_energy() * (1.0 - output_coupler_reflectivity) / round_trip_time;
}

double saturation_scale_for_ions(double gain_coeff, double round_trip_time, double ions) {
  if (!(ions > 0.0)) throw std::invalid_argument("ion count must be positive");
  return gain_coeff / (round_trip_time * ions);
}

double max_stable_step(const LaserParams& params, const LossSchedule& schedule) {
  const double r_min =
      *std::min_element(schedule.back_reflectivity.begin(), schedule.back_reflectivity.end());
  const double rate = std::max(params.loss(r_min), params.round_trip_gain_coeff);
  return kStableProduct * params.round_trip_time / rate;
}

PowerTrace simulate_qswitch(const LaserParams& params, const LossSchedule& schedule,
                            double duration, double dt) {
  params.validate();
  if (schedule.back_reflectivity.size() < 2 || !(schedule.dt > 0.0))
    throw std::invalid_argument("loss schedule needs at least two samples");
  for (double r : schedule.back_reflectivity)
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("back reflectivity outside [0, 1]");
  if (!(duration > 0.0)) throw std::invalid_argument("duration must be positive");
  if (!(dt > 0.0) || dt > params.round_trip_time / 2.0 || dt > schedule.dt)
    throw SimulationError(ErrorKind::step_size,
                          "laser step must satisfy 0 < dt <= t_r/2 and dt <= schedule dt");
  const double stable = max_stable_step(params, schedule);
  if (dt > stable)
    throw SimulationError(ErrorKind::step_size, "laser step " + std::to_string(dt) +
                                                    " s exceeds the stable limit " +
                                                    std::to_string(stable) + " s");

  const double g = params.round_trip_gain_coeff;
  const double inv_tr = 1.0 / params.round_trip_time;
  const double rp = params.pump_rate;
  const double inv_tau = 1.0 / params.upper_state_lifetime;
  const double b = params.saturation_scale;
  const double s = params.spontaneous_seed;

  auto rhs = [&](double t, double phi, double n, double& dphi, double& dn) {
    const double lam = params.loss(schedule.at(t));
    dphi = phi * (g * n - lam) * inv_tr + s * n;
    dn = rp * (1.0 - n) - n * inv_tau - b * n * phi;
  };

  const std::size_t steps = static_cast<std::size_t>(std::floor(duration / dt + 1e-9)) + 1;
  PowerTrace tr;
  tr.dt = dt;
  tr.photon_number.resize(steps);
  tr.inversion.resize(steps);
  tr.output_power.resize(steps);
  const double per_photon = params.power_per_photon();

  double phi = 0.0, n = 0.0;
  for (std::size_t i = 1; i < steps; ++i) {
    const double t = static_cast<double>(i - 1) * dt;
    double a1, b1, a2, b2, a3, b3, a4, b4;
    rhs(t, phi, n, a1, b1);
    rhs(t + 0.5 * dt, phi + 0.5 * dt * a1, n + 0.5 * dt * b1, a2, b2);
    rhs(t + 0.5 * dt, phi + 0.5 * dt * a2, n + 0.5 * dt * b2, a3, b3);
    rhs(t + dt, phi + dt * a3, n + dt * b3, a4, b4);
    phi += dt / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
    n += dt / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
    if (!std::isfinite(phi) || !std::isfinite(n) || phi > kPhotonOverflow)
      throw SimulationError(ErrorKind::non_finite,
                            "rate equations diverged at t = " + std::to_string(t + dt) + " s");
    tr.photon_number[i] = phi;
    tr.inversion[i] = n;
    tr.output_power[i] = phi * per_photon;
  }
  return tr;
}

SteadyState cw_steady_state(const LaserParams& params, double back_reflectivity) {
  params.validate();
  SteadyState ss;
  const double tau = params.upper_state_lifetime;
  const double n_pumped = params.pump_rate * tau / (1.0 + params.pump_rate * tau);
  const double n_threshold = params.loss(back_reflectivity) / params.round_trip_gain_coeff;
  if (n_threshold >= n_pumped || !(params.saturation_scale > 0.0)) {
    ss.inversion = n_pumped;
    return ss;
  }
  ss.lasing = true;
  ss.inversion = n_threshold;
  ss.photon_number =
      (params.pump_rate * (1.0 - n_threshold) - n_threshold / tau) /
      (params.saturation_scale * n_threshold);
  ss.output_power = ss.photon_number * params.power_per_photon();
  return ss;
}

double PulseStats::max_peak() const {
  double m = 0.0;
  for (const auto& p : pulses) m = std::max(m, p.peak_power);
  return m;
}

double PulseStats::mean_fwhm() const {
  double s = 0.0;
  for (const auto& p : pulses) s += p.fwhm;
  return pulses.empty() ? 0.0 : s / static_cast<double>(pulses.size());
}

double PulseStats::mean_peak() const {
  double s = 0.0;
  for (const auto& p : pulses) s += p.peak_power;
  return pulses.empty() ? 0.0 : s / static_cast<double>(pulses.size());
}

PulseStats extract_pulses(const PowerTrace& trace, double cw_reference,
                          const PulseDetection& detection) {
  if (trace.size() == 0) throw std::invalid_argument("empty power trace");
  const auto& p = trace.output_power;
  const std::size_t first = static_cast<std::size_t>(
      std::ceil(std::max(0.0, detection.window_start) / trace.dt - 1e-9));
  const std::size_t last = std::min<double>(
      trace.size() - 1, std::floor(detection.window_end / trace.dt + 1e-9));
  if (first >= last) throw std::invalid_argument("pulse analysis window is empty");

  PulseStats st;
  st.window_start = trace.time(first);
  st.window_end = trace.time(last);
  std::vector<double> sorted(p.begin() + first, p.begin() + last + 1);
  const std::size_t mid = sorted.size() / 2;
  std::nth_element(sorted.begin(), sorted.begin() + mid, sorted.end());
  st.baseline = sorted[mid];
  double sum = 0.0;
  for (std::size_t i = first; i <= last; ++i) sum += p[i];
  st.mean_power = sum / static_cast<double>(last - first + 1);

  const double threshold = detection.threshold_factor * st.baseline;
  std::vector<Pulse> found;
  std::size_t i = first;
  while (i <= last) {
    if (!(p[i] > threshold)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j <= last && p[j] > threshold) ++j;
    const bool cut = i == first || j > last;
    if (!cut) {
      std::size_t k = i;
      for (std::size_t q = i; q < j; ++q)
        if (p[q] > p[k]) k = q;
      const double peak = p[k];
      const double half = 0.5 * peak;
      std::size_t l = k;
      while (l > 0 && p[l] > half) --l;
      std::size_t r = k;
      while (r + 1 < trace.size() && p[r] > half) ++r;
      const double tl = trace.time(l) + trace.dt * (half - p[l]) / (p[l + 1] - p[l]);
      const double tr = trace.time(r - 1) + trace.dt * (half - p[r - 1]) / (p[r] - p[r - 1]);
      Pulse pulse;
      pulse.peak_power = peak;
      pulse.fwhm = tr - tl;
      pulse.peak_time = trace.time(k);
      double e = 0.0;
      for (std::size_t q = i; q < j; ++q) e += p[q];
      pulse.energy = e * trace.dt;
      pulse.inversion_before = trace.inversion[i - 1];
      pulse.inversion_after = trace.inversion[j];
      found.push_back(pulse);
    }
    i = j;
  }

  double top = 0.0;
  for (const auto& pulse : found) top = std::max(top, pulse.peak_power);
  for (const auto& pulse : found)
    if (pulse.peak_power >= detection.relative_floor * top) st.pulses.push_back(pulse);
  if (st.pulses.empty())
    throw SimulationError(ErrorKind::no_pulses, "no pulses detected above " +
                                                    std::to_string(detection.threshold_factor) +
                                                    "x the median power");

  if (st.pulses.size() >= 2) {
    const double span = st.pulses.back().peak_time - st.pulses.front().peak_time;
    st.repetition_rate = static_cast<double>(st.pulses.size() - 1) / span;
  }
  st.peak_to_mean_ratio = st.mean_power > 0.0 ? st.max_peak() / st.mean_power : 0.0;
  if (cw_reference > 0.0) st.peak_to_cw_ratio = st.max_peak() / cw_reference;
  return st;
}

DualResult simulate_dual(const LaserParams& params_a, const LaserParams& params_b,
                         const MembraneTrajectory& shared_trajectory,
                         const CouplingModel& model_a, const CouplingModel& model_b,
                         double duration, double dt, const PulseDetection& detection, int jobs) {
  DualResult out;
  out.schedule_a = loss_schedule(shared_trajectory, model_a);
  out.schedule_b = loss_schedule(shared_trajectory, model_b);
  parallel_for(2, jobs, [&](std::size_t arm) {
    const LaserParams& params = arm == 0 ? params_a : params_b;
    const LossSchedule& schedule = arm == 0 ? out.schedule_a : out.schedule_b;
    const CouplingModel& model = arm == 0 ? model_a : model_b;
    PowerTrace trace = simulate_qswitch(params, schedule, duration, dt);
    std::optional<PulseStats> stats;
    try {
      stats = extract_pulses(
          trace, cw_steady_state(params, model.base_reflectivity).output_power, detection);
    } catch (const SimulationError& e) {
      if (e.kind() != ErrorKind::no_pulses) throw;
    }
    (arm == 0 ? out.trace_a : out.trace_b) = std::move(trace);
    (arm == 0 ? out.stats_a : out.stats_b) = std::move(stats);
  });

  if (out.stats_a && out.stats_b) {
    double sum = 0.0;
    for (const auto& pa : out.stats_a->pulses) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& pb : out.stats_b->pulses)
        best = std::min(best, std::abs(pa.peak_time - pb.peak_time));
      sum += best;
    }
    out.peak_offset = sum / static_cast<double>(out.stats_a->pulses.size());
  }
  return out;
}

}  // namespace moems
