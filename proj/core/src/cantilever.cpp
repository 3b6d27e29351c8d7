#include "moems/cantilever.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "moems/constants.hpp"
#include "moems/errors.hpp"
#include "moems/quadrature.hpp"

namespace moems {

namespace {

constexpr double kUniformRoot = 1.8751040687119611;

void check_curl(const CantileverGeometry& cant, double kappa) {
  if (!std::isfinite(kappa)) throw std::invalid_argument("curvature must be finite");
  if (std::abs(kappa) * cant.length >= kPi / 2.0)
    throw SimulationError(ErrorKind::over_curled,
                          "kappa L = " + std::to_string(kappa * cant.length) +
                              " rad is not below pi/2");
}

const QuadratureRule& arc_rule() {
  static const QuadratureRule rule = gauss_legendre(96, 0.0, 1.0);
  return rule;
}

}  // namespace

void CantileverGeometry::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(length)) throw std::invalid_argument("cantilever length must be positive");
  if (!positive(root_width)) throw std::invalid_argument("root width must be positive");
  if (!positive(tip_width)) throw std::invalid_argument("tip width must be positive");
  if (tip_width > root_width) throw std::invalid_argument("tip width exceeds root width");
  if (!positive(structural_thickness))
    throw std::invalid_argument("structural thickness must be positive");
  if (!positive(stress_layer_thickness))
    throw std::invalid_argument("stress layer thickness must be positive");
  if (!std::isfinite(stress_layer_stress))
    throw std::invalid_argument("stress layer stress must be finite");
  if (!positive(air_gap)) throw std::invalid_argument("air gap must be positive");
  if (!std::isfinite(dielectric_thickness) || dielectric_thickness < 0.0)
    throw std::invalid_argument("dielectric thickness must be non-negative");
  if (!positive(dielectric_rel_permittivity))
    throw std::invalid_argument("dielectric permittivity must be positive");
  if (!(stiffening_factor >= 1.0)) throw std::invalid_argument("stiffening factor must be >= 1");
}

double curvature_from_stress(const CantileverGeometry& cant, const MaterialProps& props) {
  const double ts = cant.structural_thickness;
  return 6.0 * cant.stress_layer_stress * cant.stress_layer_thickness /
         (props.biaxial_modulus() * ts * ts);
}

double stress_for_radius(const CantileverGeometry& cant, const MaterialProps& props,
                         double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  const double ts = cant.structural_thickness;
  return props.biaxial_modulus() * ts * ts / (6.0 * cant.stress_layer_thickness * radius);
}

CantileverProfile profile_and_tip(const CantileverGeometry& cant, double kappa, int points) {
  if (!(cant.length > 0.0)) throw std::invalid_argument("cantilever length must be positive");
  if (points < 2) throw std::invalid_argument("profile needs at least two points");
  check_curl(cant, kappa);
  CantileverProfile p;
  p.x.resize(points);
  p.z.resize(points);
  for (int i = 0; i < points; ++i) {
    const double s = cant.length * i / (points - 1);
    if (kappa == 0.0) {
      p.x[i] = s;
      p.z[i] = 0.0;
    } else {
      p.x[i] = std::sin(kappa * s) / kappa;
      // 2 sin^2(a/2) keeps precision for small kappa s.
      const double h = std::sin(0.5 * kappa * s);
      p.z[i] = 2.0 * h * h / kappa;
    }
  }
  p.tip_deflection = p.z.back();
  p.tip_slope = kappa * cant.length;
  p.reflected_deviation = 2.0 * p.tip_slope;
  return p;
}

double taper_eigenvalue(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("tip/root ratio must be in (0, 1]");
  // w(xi) = 1 - c xi; moments m(n) = integral w xi^n.
  const double c = 1.0 - r;
  auto mom = [c](int n) { return 1.0 / (n + 1) - c / (n + 2); };
  // phi = xi^2, xi^3: phi'' = 2, 6 xi.
  const double k11 = 4.0 * mom(0), k12 = 12.0 * mom(1), k22 = 36.0 * mom(2);
  const double m11 = mom(4), m12 = mom(5), m22 = mom(6);
  // det(K - lambda M) = 0
  const double a = m11 * m22 - m12 * m12;
  const double b = -(k11 * m22 + k22 * m11 - 2.0 * k12 * m12);
  const double cc = k11 * k22 - k12 * k12;
  return (-b - std::sqrt(b * b - 4.0 * a * cc)) / (2.0 * a);
}

double cantilever_frequency(const CantileverGeometry& cant, const MaterialProps& props) {
  cant.validate();
  props.validate();
  const double lam = cant.rectangular()
                         ? std::pow(kUniformRoot, 4)
                         : taper_eigenvalue(cant.tip_width / cant.root_width);
  const double l = cant.length;
  return cant.stiffening_factor * std::sqrt(lam) / (2.0 * kPi) * (cant.structural_thickness / (l * l)) *
         std::sqrt(props.youngs_modulus / (12.0 * props.density));
}

double fit_stiffening_factor(const std::vector<std::pair<CantileverGeometry, double>>& targets,
                             const MaterialProps& props) {
  if (targets.empty()) throw std::invalid_argument("no calibration targets");
  double sum = 0.0;
  for (const auto& [geom, target] : targets) {
    if (!(target > 0.0)) throw std::invalid_argument("target frequency must be positive");
    CantileverGeometry g = geom;
    g.stiffening_factor = 1.0;
    sum += std::log(target / cantilever_frequency(g, props));
  }
  return std::exp(sum / static_cast<double>(targets.size()));
}

double hinge_stiffness(const CantileverGeometry& cant, const MaterialProps& props) {
  const double l = cant.length;
  const double t = cant.structural_thickness;
  const double ep = props.biaxial_modulus();
  double compliance = 0.0;
  const auto& rule = arc_rule();
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double s = rule.nodes[q] * l;
    const double inertia = cant.width_at(s) * t * t * t / 12.0;
    compliance += rule.weights[q] * l * (l - s) * (l - s) / (ep * inertia);
  }
  return l * l / compliance;
}

std::pair<double, double> hinged_capacitance(const CantileverGeometry& cant, double kappa,
                                             double psi) {
  const double l = cant.length;
  const double series = cant.dielectric_thickness / cant.dielectric_rel_permittivity;
  const double sp = std::sin(psi), cp = std::cos(psi);
  double c = 0.0, dc = 0.0;
  const auto& rule = arc_rule();
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double s = rule.nodes[q] * l;
    double x = s, z = 0.0;
    if (kappa != 0.0) {
      x = std::sin(kappa * s) / kappa;
      const double h = std::sin(0.5 * kappa * s);
      z = 2.0 * h * h / kappa;
    }
    const double height = cant.air_gap - x * sp + z * cp;
    const double d = height + series;
    const double d_height = -x * cp - z * sp;
    const double proj = std::cos(kappa * s - psi);
    const double d_proj = std::sin(kappa * s - psi);
    const double w = rule.weights[q] * l * kVacuumPermittivity * cant.width_at(s);
    c += w * proj / d;
    dc += w * (d_proj / d - proj * d_height / (d * d));
  }
  return {c, dc};
}

Pulldown pulldown_voltage(const CantileverGeometry& cant, const MaterialProps& props,
                          double kappa, int steps) {
  cant.validate();
  props.validate();
  check_curl(cant, kappa);
  if (steps < 10) throw std::invalid_argument("continuation needs at least 10 steps");

  const double k = hinge_stiffness(cant, props);
  const double l = cant.length;
  auto min_height = [&](double psi) {
    // Height is concave in s along the arc's rotated chord, so sampling the
    // ends and the quadrature stations is enough.
    double m = cant.air_gap;
    const double sp = std::sin(psi), cp = std::cos(psi);
    const auto& rule = arc_rule();
    for (std::size_t q = 0; q <= rule.nodes.size(); ++q) {
      const double s = q == rule.nodes.size() ? l : rule.nodes[q] * l;
      double x = s, z = 0.0;
      if (kappa != 0.0) {
        x = std::sin(kappa * s) / kappa;
        const double h = std::sin(0.5 * kappa * s);
        z = 2.0 * h * h / kappa;
      }
      m = std::min(m, cant.air_gap - x * sp + z * cp);
    }
    return m;
  };
  auto volts = [&](double psi) {
    const double dc = hinged_capacitance(cant, kappa, psi).second;
    return dc > 0.0 ? std::sqrt(2.0 * k * psi / dc) : std::numeric_limits<double>::infinity();
  };

  // Rotation at which the beam first touches the dielectric.
  double psi_end = kPi / 2.0;
  bool touches = min_height(psi_end) <= 0.0;
  if (touches) {
    double lo = 0.0, hi = psi_end;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (min_height(mid) > 0.0 ? lo : hi) = mid;
    }
    psi_end = lo;
  }

  const double h = psi_end / steps;
  double best = 0.0;
  int best_i = 0;
  for (int i = 1; i <= steps; ++i) {
    const double v = volts(i * h);
    if (!std::isfinite(v)) continue;
    if (v > best) best = v, best_i = i;
  }
  if (best_i == 0)
    throw SimulationError(ErrorKind::no_snap_down,
                          "no snap-down: electrostatic torque never pulls the beam down");
  if (best_i == steps) {
    if (!touches)
      throw SimulationError(ErrorKind::no_snap_down,
                            "no snap-down below V_max = " + std::to_string(best) + " V");
    return {best, psi_end, true};
  }

  // Golden-section refinement of the fold between the neighbouring stations.
  double a = (best_i - 1) * h, b = (best_i + 1) * h;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = volts(c), fd = volts(d);
  for (int it = 0; it < 80; ++it) {
    if (fc > fd) {
      b = d, d = c, fd = fc;
      c = b - g * (b - a), fc = volts(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + g * (b - a), fd = volts(d);
    }
  }
  const double psi = 0.5 * (a + b);
  return {volts(psi), psi, false};
}

}  // namespace moems
