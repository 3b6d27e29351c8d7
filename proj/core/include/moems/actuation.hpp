#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "moems/geometry.hpp"
#include "moems/materials.hpp"
#include "moems/modal.hpp"

namespace moems {

// Parallel-plate capacitance with the dielectric in series:
//   C = eps0 A / (gap - x + t_d / eps_r),  0 <= x <= gap
double capacitance(const BridgeGeometry& geom, double x);

struct PullIn {
  double voltage = 0.0;       // V
  double displacement = 0.0;  // m, g_eff / 3
};

PullIn pull_in_voltage(const BridgeGeometry& geom, double stiffness);

// Single-degree-of-freedom reduction of the fundamental Ritz mode, normalized
// to unit deflection at midspan.
struct LumpedModel {
  double stiffness = 0.0;       // N/m
  double effective_mass = 0.0;  // kg
  double frequency = 0.0;       // Hz

  double omega() const;
};

LumpedModel effective_spring_and_mass(const BridgeGeometry& geom, const MaterialProps& props,
                                      double sigma, int basis_size = kDefaultBasisSize);

struct DriveWaveform {
  enum class Kind { square, constant, sampled };

  Kind kind = Kind::square;
  double frequency = 0.0;  // Hz
  double duty = 0.5;       // on fraction of each period
  double v_on = 0.0;       // V
  double v_off = 0.0;      // V
  double rise_time = 0.0;  // s, linear ramp at each edge
  std::vector<std::pair<double, double>> samples;  // (t, V), sampled only

  void validate() const;
  double voltage(double t) const;
  double period() const { return 1.0 / frequency; }
};

struct MembraneTrajectory {
  double dt = 0.0;
  double gap = 0.0;
  std::vector<double> displacement;  // m, toward the substrate
  std::vector<double> velocity;      // m/s
  std::vector<bool> contact;
  std::vector<double> voltage;       // V

  std::size_t size() const noexcept { return displacement.size(); }
  double time(std::size_t i) const noexcept { return static_cast<double>(i) * dt; }
};

struct InitialState {
  double displacement = 0.0;
  double velocity = 0.0;
};

// Fixed-step RK4 on m x'' + (m w / Q) x' + k x = eps0 A V^2 / (2 (g_eff - x)^2).
// The plate stops inelastically at x = gap and lifts off once the spring
// force exceeds the electrostatic pull. Q may be +inf for an undamped run.
MembraneTrajectory integrate_transient(const BridgeGeometry& geom, const LumpedModel& lumped,
                                       const DriveWaveform& drive, double q_factor,
                                       double duration, double dt,
                                       InitialState initial = {});

// dt <= 0 selects 1 / (200 f1).
MembraneTrajectory simulate_transient(const BridgeGeometry& geom, const MaterialProps& props,
                                      double sigma, const DriveWaveform& drive, double q_factor,
                                      double duration, double dt = 0.0,
                                      int basis_size = kDefaultBasisSize);

struct TrajectoryMetrics {
  // Means over all complete 10% -> 90% (down) and 90% -> 10% (up) transits.
  std::optional<double> switch_down_time;
  std::optional<double> release_time;
  double contact_duty = 0.0;
  int down_events = 0;
  int release_events = 0;
};

TrajectoryMetrics trajectory_metrics(const MembraneTrajectory& traj);

}  // namespace moems
