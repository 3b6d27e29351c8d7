#pragma once

#include <vector>

#include "moems/actuation.hpp"

namespace moems {

// Gaussian far-field overlap between the reflected beam and the fiber mode.
struct CouplingModel {
  double wavelength = 1.55e-6;           // m
  double mode_field_radius = 5.2e-6;     // m, w0 at the coupling plane
  double magnification = 1.0;            // relay imaging magnification
  double base_reflectivity = 1.0;        // eta0, aligned round-trip coupling
  double tilt_per_displacement = 0.0;    // rad/m of midspan deflection
  double lateral_loss_scale = 0.0;       // m, d_c; 0 disables lateral loss
  // false: rest state couples best and travel detunes. true: the bridge is
  // aligned when pulled in, and the tilt follows (gap - x).
  bool inverted = false;

  void validate() const;
  double critical_angle() const;  // lambda / (pi w0 M)
};

// 9 degrees of effective tilt at full gap travel.
double default_tilt_per_displacement(double gap);

double injection_efficiency(const CouplingModel& model, double tilt, double lateral_offset = 0.0);

struct LossSchedule {
  double dt = 0.0;
  std::vector<double> back_reflectivity;

  // Linear interpolation, held at the last sample beyond the end.
  double at(double t) const;
  double duration() const { return dt * static_cast<double>(back_reflectivity.size() - 1); }
};

LossSchedule loss_schedule(const MembraneTrajectory& traj, const CouplingModel& model);

}  // namespace moems
