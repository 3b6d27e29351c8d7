#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "moems/geometry.hpp"

namespace moems {

struct MaterialProps {
  std::string name;
  double youngs_modulus = 0.0;    // Pa
  double cte = 0.0;               // 1/K
  double poisson = 0.0;           // dimensionless
  double density = 0.0;           // kg/m^3
  double builtin_stress = 0.0;    // Pa, tensile positive, at ref_temperature
  double ref_temperature = 293.0; // K

  void validate() const;

  // Biaxial modulus E / (1 - nu).
  double biaxial_modulus() const noexcept { return youngs_modulus / (1.0 - poisson); }
};

struct SubstrateProps {
  std::string name;
  double cte = 0.0;  // 1/K

  void validate() const;
};

// Electroplated gold film, 30 MPa residual tension at 293 K.
MaterialProps gold();
// Aluminum film with the same residual tension as gold.
MaterialProps aluminum();
// Silicon substrate, alpha = 2.6e-6 / K.
SubstrateProps silicon();

std::optional<MaterialProps> material_preset(std::string_view name);
std::optional<SubstrateProps> substrate_preset(std::string_view name);

// Uniaxial film stress at temperature T (tensile positive):
//   sigma(T) = sigma0 - E (alpha_film - alpha_substrate) (T - T_ref)
double stress_at_temperature(const MaterialProps& props, const SubstrateProps& substrate,
                             double temperature);

struct BucklingOnset {
  double critical_stress = 0.0;  // Pa, negative (compressive)
  // Temperature where the film stress reaches critical_stress. +inf when the
  // stress never becomes compressive on heating.
  double onset_temperature = std::numeric_limits<double>::infinity();
  bool has_onset = false;
};

// Euler limit for a clamped-clamped bar: sigma_cr = -4 pi^2 E t^2 / (12 L^2).
double euler_critical_stress(const BridgeGeometry& geom, const MaterialProps& props);

BucklingOnset buckling_onset(const MaterialProps& props, const SubstrateProps& substrate,
                             const BridgeGeometry& geom);

}  // namespace moems
