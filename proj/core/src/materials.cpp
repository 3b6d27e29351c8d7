#include "moems/materials.hpp"

#include <cmath>
#include <stdexcept>

#include "moems/constants.hpp"

namespace moems {

void MaterialProps::validate() const {
  if (!(youngs_modulus > 0.0)) throw std::invalid_argument("Young's modulus must be positive");
  if (!(density > 0.0)) throw std::invalid_argument("density must be positive");
  if (!(poisson > 0.0 && poisson < 0.5))
    throw std::invalid_argument("Poisson ratio must be in (0, 0.5)");
  if (!std::isfinite(cte)) throw std::invalid_argument("thermal expansion must be finite");
  if (!std::isfinite(builtin_stress)) throw std::invalid_argument("built-in stress must be finite");
  if (!(ref_temperature > 0.0)) throw std::invalid_argument("reference temperature must be positive");
}

void SubstrateProps::validate() const {
  if (!std::isfinite(cte)) throw std::invalid_argument("substrate thermal expansion must be finite");
}

MaterialProps gold() {
  return {"gold", 78e9, 14.2e-6, 0.42, 19300.0, 30e6, 293.0};
}

MaterialProps aluminum() {
  return {"aluminum", 70e9, 23.5e-6, 0.345, 2700.0, 30e6, 293.0};
}

SubstrateProps silicon() { return {"silicon", 2.6e-6}; }

std::optional<MaterialProps> material_preset(std::string_view name) {
  if (name == "gold" || name == "Au") return gold();
  if (name == "aluminum" || name == "Al") return aluminum();
  return std::nullopt;
}

std::optional<SubstrateProps> substrate_preset(std::string_view name) {
  if (name == "silicon" || name == "Si") return silicon();
  return std::nullopt;
}

double stress_at_temperature(const MaterialProps& props, const SubstrateProps& substrate,
                             double temperature) {
  if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be positive");
  const double mismatch = props.cte - substrate.cte;
  return props.builtin_stress -
         props.youngs_modulus * mismatch * (temperature - props.ref_temperature);
}

double euler_critical_stress(const BridgeGeometry& geom, const MaterialProps& props) {
  const double t = geom.thickness;
  const double l = geom.length;
  return -4.0 * kPi * kPi * props.youngs_modulus * t * t / (12.0 * l * l);
}

BucklingOnset buckling_onset(const MaterialProps& props, const SubstrateProps& substrate,
                             const BridgeGeometry& geom) {
  geom.validate();
  BucklingOnset out;
  out.critical_stress = euler_critical_stress(geom, props);
  const double slope = -props.youngs_modulus * (props.cte - substrate.cte);  // dsigma/dT
  if (slope >= 0.0) return out;  // heating never compresses the film
  out.onset_temperature =
      props.ref_temperature + (out.critical_stress - props.builtin_stress) / slope;
  out.has_onset = true;
  return out;
}

}  // namespace moems
