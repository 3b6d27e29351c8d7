#pragma once

#include <cmath>

#include "moems/laser.hpp"

namespace oracle {

struct LaserFixedPoint {
  double inversion = 0.0;
  double photon_number = 0.0;
};

// Stationary point of the seeded rate equations. From dphi/dt = 0,
// phi = S n t_r / (Lambda - G n); substituting into dn/dt = 0 leaves one
// monotone equation in n on (0, Lambda / G), solved by bisection.
inline LaserFixedPoint seeded_steady_state(const moems::LaserParams& p, double rb) {
  const double lambda = p.loss(rb);
  const double n_top = std::min(1.0, lambda / p.round_trip_gain_coeff);
  auto phi_of = [&](double n) {
    return p.spontaneous_seed * n * p.round_trip_time / (lambda - p.round_trip_gain_coeff * n);
  };
  auto residual = [&](double n) {
    return p.pump_rate * (1.0 - n) - n / p.upper_state_lifetime -
           p.saturation_scale * n * phi_of(n);
  };
  double lo = 0.0;
  double hi = n_top * (1.0 - 1e-15);
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) > 0.0 ? lo : hi) = mid;
  }
  const double n = 0.5 * (lo + hi);
  return {n, phi_of(n)};
}

}  // namespace oracle
