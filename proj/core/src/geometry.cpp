#include "moems/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace moems {

void BridgeGeometry::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(length)) throw std::invalid_argument("bridge length must be positive");
  if (!positive(width)) throw std::invalid_argument("bridge width must be positive");
  if (!positive(thickness)) throw std::invalid_argument("bridge thickness must be positive");
  if (!positive(gap)) throw std::invalid_argument("bridge gap must be positive");
  if (!std::isfinite(dielectric_thickness) || dielectric_thickness < 0.0)
    throw std::invalid_argument("dielectric thickness must be non-negative");
  if (!positive(dielectric_rel_permittivity))
    throw std::invalid_argument("dielectric permittivity must be positive");
}

}  // namespace moems
