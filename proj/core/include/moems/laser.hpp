#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "moems/actuation.hpp"
#include "moems/optics.hpp"

namespace moems {

// Normalized two-level point model of a fiber laser cavity. phi is the
// intracavity photon number, n the inversion fraction.
struct LaserParams {
  double upper_state_lifetime = 10e-3;     // s
  double round_trip_time = 100e-9;         // s
  double round_trip_gain_coeff = 0.0;      // G, log gain at n = 1
  double pump_rate = 0.0;                  // 1/s
  double output_coupler_reflectivity = 0.04;
  double intrinsic_loss = 0.0;             // delta, log loss per round trip
  double spontaneous_seed = 0.0;           // 1/s
  double saturation_scale = 0.0;           // B, 1/s per photon
  double label_wavelength = 1.55e-6;       // m, photon energy only

  void validate() const;
  double photon_energy() const;
  // Round-trip log loss for a back-coupling R_b (floored at 1e-6).
  double loss(double back_reflectivity) const;
  // Inversion-to-energy factor G h nu / (t_r B), i.e. the ion count times
  // photon energy.
  double stored_energy_scale() const;
  // Output power per intracavity photon.
  double power_per_photon() const;
};

// B for an active ion count N: B = G / (t_r N).
double saturation_scale_for_ions(double gain_coeff, double round_trip_time, double ions);

struct PowerTrace {
  double dt = 0.0;
  std::vector<double> photon_number;
  std::vector<double> inversion;
  std::vector<double> output_power;  // W

  std::size_t size() const noexcept { return photon_number.size(); }
  double time(std::size_t i) const noexcept { return static_cast<double>(i) * dt; }
};

// Largest step that keeps RK4 inside its real-axis stability interval for
// the fastest photon decay rate the schedule can produce.
double max_stable_step(const LaserParams& params, const LossSchedule& schedule);

// Fixed-step RK4 from phi = n = 0:
//   dphi/dt = phi (G n - Lambda(t)) / t_r + S n,  Lambda = delta - ln(R_oc R_b)
//   dn/dt   = R_p (1 - n) - n / tau - B n phi
// Throws SimulationError(step_size) when dt > t_r / 2, dt > schedule.dt or dt
// exceeds max_stable_step, and SimulationError(non_finite) on blow-up.
PowerTrace simulate_qswitch(const LaserParams& params, const LossSchedule& schedule,
                            double duration, double dt);

struct SteadyState {
  bool lasing = false;
  double inversion = 0.0;
  double photon_number = 0.0;
  double output_power = 0.0;  // W
};

// Seed-free continuous-wave solution for a constant back-coupling.
SteadyState cw_steady_state(const LaserParams& params, double back_reflectivity);

struct Pulse {
  double peak_power = 0.0;  // W
  double fwhm = 0.0;        // s
  double energy = 0.0;      // J, integrated over the above-threshold excursion
  double peak_time = 0.0;   // s
  double inversion_before = 0.0;
  double inversion_after = 0.0;
};

struct PulseStats {
  std::vector<Pulse> pulses;
  double repetition_rate = 0.0;  // Hz, 0 with fewer than two pulses
  double mean_power = 0.0;       // W over the analysis window
  double peak_to_mean_ratio = 0.0;
  double peak_to_cw_ratio = std::numeric_limits<double>::infinity();
  double baseline = 0.0;         // W, median power
  double window_start = 0.0;     // s
  double window_end = 0.0;       // s

  double max_peak() const;
  double mean_fwhm() const;
  double mean_peak() const;
};

struct PulseDetection {
  double window_start = 0.0;
  double window_end = std::numeric_limits<double>::infinity();
  double threshold_factor = 10.0;  // x median
  // Excursions peaking below this fraction of the largest one are ringing on
  // the tail of a pulse, not pulses.
  double relative_floor = 0.05;
};

// Excursions that touch either window edge are cut and are dropped.
// Throws SimulationError(no_pulses) when nothing qualifies.
PulseStats extract_pulses(const PowerTrace& trace, double cw_reference,
                          const PulseDetection& detection = {});

struct DualResult {
  PowerTrace trace_a;
  PowerTrace trace_b;
  LossSchedule schedule_a;
  LossSchedule schedule_b;
  std::optional<PulseStats> stats_a;
  std::optional<PulseStats> stats_b;
  // Mean |t_a - t_b| over peaks paired to their nearest partner.
  std::optional<double> peak_offset;
};

// Two uncoupled cavities closed by the same mirror. Each arm's schedule is
// derived from the shared trajectory with its own coupling model.
DualResult simulate_dual(const LaserParams& params_a, const LaserParams& params_b,
                         const MembraneTrajectory& shared_trajectory,
                         const CouplingModel& model_a, const CouplingModel& model_b,
                         double duration, double dt, const PulseDetection& detection = {},
                         int jobs = 2);

}  // namespace moems
