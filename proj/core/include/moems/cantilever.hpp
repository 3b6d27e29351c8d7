#pragma once

#include <utility>
#include <vector>

#include "moems/materials.hpp"

namespace moems {

// Stress-curled cantilever mirror. A stressed thin film (t_f) on top of the
// structural layer (t_s) bends the released beam away from the substrate.
struct CantileverGeometry {
  double length = 0.0;                       // m
  double root_width = 0.0;                   // m
  double tip_width = 0.0;                    // m, == root_width for rectangular
  double structural_thickness = 0.0;         // m
  double stress_layer_thickness = 0.0;       // m
  double stress_layer_stress = 0.0;          // Pa, tensile positive
  double air_gap = 0.0;                      // m, at the root
  double dielectric_thickness = 0.0;         // m
  double dielectric_rel_permittivity = 1.0;
  double stiffening_factor = 1.0;            // corrugation correction, >= 1

  void validate() const;
  bool thin_film_valid() const noexcept {
    return stress_layer_thickness <= structural_thickness / 10.0;
  }
  bool rectangular() const noexcept { return tip_width == root_width; }
  double width_at(double s) const noexcept {
    return root_width - (root_width - tip_width) * s / length;
  }
};

// kappa = 6 sigma_f t_f / (E' t_s^2), E' = E / (1 - nu).
double curvature_from_stress(const CantileverGeometry& cant, const MaterialProps& props);
double stress_for_radius(const CantileverGeometry& cant, const MaterialProps& props,
                         double radius);

struct CantileverProfile {
  std::vector<double> x;  // m, along the substrate
  std::vector<double> z;  // m, height above the rest plane
  double tip_deflection = 0.0;  // m
  double tip_slope = 0.0;       // rad, kappa L
  double reflected_deviation = 0.0;  // rad, 2 kappa L
};

// Circular arc z = (1 - cos(kappa x)) / kappa sampled at `points` evenly
// spaced arc-length stations. Throws SimulationError(over_curled) when
// kappa L >= pi / 2.
CantileverProfile profile_and_tip(const CantileverGeometry& cant, double kappa,
                                  int points = 101);

// Lowest eigenvalue of the two-term (xi^2, xi^3) Ritz model of a linearly
// tapered cantilever, in units of E t^2 / (12 rho L^4). Width cancels, so
// only the tip/root ratio matters. The exact uniform value is 1.8751^4.
double taper_eigenvalue(double tip_to_root);

// Rectangular: closed form with 1.8751^2. Tapered: two-term Ritz. Both are
// multiplied by stiffening_factor.
double cantilever_frequency(const CantileverGeometry& cant, const MaterialProps& props);

// Single scalar s minimizing sum (log(s f_i) - log(target_i))^2 over the
// given devices evaluated at stiffening_factor = 1.
double fit_stiffening_factor(const std::vector<std::pair<CantileverGeometry, double>>& targets,
                             const MaterialProps& props);

// Rotational stiffness of a root hinge that reproduces the beam's tip-load
// compliance: k = L^2 / integral (L - s)^2 / (E' I(s)) ds. Uniform: 3 E' I / L.
double hinge_stiffness(const CantileverGeometry& cant, const MaterialProps& props);

// Capacitance and d/dpsi of the curled beam rotated rigidly by psi toward
// the substrate about its root.
std::pair<double, double> hinged_capacitance(const CantileverGeometry& cant, double kappa,
                                             double psi);

struct Pulldown {
  double voltage = 0.0;     // V
  double rotation = 0.0;    // rad, hinge rotation at the instability
  bool touchdown = false;   // the tip reached the dielectric before the fold
};

// Quasi-static continuation in the hinge rotation psi: equilibrium needs
// V^2 = 2 k psi / C'(psi), and the pulldown voltage is the fold (maximum of
// V along the path), or the touchdown voltage if V still rises at contact.
Pulldown pulldown_voltage(const CantileverGeometry& cant, const MaterialProps& props,
                          double kappa, int steps = 200);

}  // namespace moems
