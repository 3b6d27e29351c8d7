#include "moems/optics.hpp"

#include <cmath>
#include <stdexcept>

#include "moems/constants.hpp"

namespace moems {

void CouplingModel::validate() const {
  if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be positive");
  if (!(mode_field_radius > 0.0)) throw std::invalid_argument("mode field radius must be positive");
  if (!(magnification > 0.0)) throw std::invalid_argument("magnification must be positive");
  if (!(base_reflectivity > 0.0 && base_reflectivity <= 1.0))
    throw std::invalid_argument("base reflectivity must be in (0, 1]");
  if (!std::isfinite(tilt_per_displacement))
    throw std::invalid_argument("tilt per displacement must be finite");
  if (!(lateral_loss_scale >= 0.0))
    throw std::invalid_argument("lateral loss scale must be non-negative");
}

double CouplingModel::critical_angle() const {
  return wavelength / (kPi * mode_field_radius * magnification);
}

double default_tilt_per_displacement(double gap) {
  if (!(gap > 0.0)) throw std::invalid_argument("gap must be positive");
  return 9.0 * kPi / 180.0 / gap;
}

double injection_efficiency(const CouplingModel& model, double tilt, double lateral_offset) {
  model.validate();
  if (!std::isfinite(tilt) || !std::isfinite(lateral_offset))
    throw std::invalid_argument("tilt and offset must be finite");
  const double a = tilt / model.critical_angle();
  double eta = model.base_reflectivity * std::exp(-a * a);
  if (model.lateral_loss_scale > 0.0) {
    const double d = lateral_offset / model.lateral_loss_scale;
    eta *= std::exp(-d * d);
  }
  return eta;
}

double LossSchedule::at(double t) const {
  const std::size_t n = back_reflectivity.size();
  if (t <= 0.0) return back_reflectivity.front();
  const double j = t / dt;
  const std::size_t i = static_cast<std::size_t>(j);
  if (i + 1 >= n) return back_reflectivity.back();
  const double f = j - static_cast<double>(i);
  return back_reflectivity[i] * (1.0 - f) + back_reflectivity[i + 1] * f;
}

LossSchedule loss_schedule(const MembraneTrajectory& traj, const CouplingModel& model) {
  model.validate();
  if (traj.size() < 2) throw std::invalid_argument("trajectory needs at least two samples");
  LossSchedule out;
  out.dt = traj.dt;
  out.back_reflectivity.resize(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double x = traj.displacement[i];
    const double travel = model.inverted ? traj.gap - x : x;
    out.back_reflectivity[i] = injection_efficiency(model, model.tilt_per_displacement * travel);
  }
  return out;
}

}  // namespace moems
