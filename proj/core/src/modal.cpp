#include "moems/modal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "moems/constants.hpp"
#include "moems/errors.hpp"
#include "moems/parallel.hpp"
#include "moems/quadrature.hpp"

namespace moems {

namespace {

constexpr double kLambda = 4.5;
// Strength of the end-clustering map xi = s - a sin(2 pi s) / (2 pi). Tension
// confines curvature to thin layers at the clamps; clustering there lets a
// low-order basis resolve them.
constexpr double kClustering = 0.4;
// One rule for every N keeps the N-term matrices leading blocks of the
// larger ones.
constexpr int kQuadraturePoints = 160;

struct MapPoint {
  double xi, g1, g2;  // xi(s), dxi/ds, d2xi/ds2
};

MapPoint map_from_s(double s) {
  const double c = std::cos(2.0 * kPi * s);
  const double sn = std::sin(2.0 * kPi * s);
  return {s - kClustering * sn / (2.0 * kPi), 1.0 - kClustering * c,
          2.0 * kPi * kClustering * sn};
}

double s_from_xi(double xi) {
  double s = xi;
  for (int it = 0; it < 50; ++it) {
    const MapPoint m = map_from_s(s);
    const double step = (m.xi - xi) / m.g1;
    s -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return s;
}

const QuadratureRule& unit_rule() {
  static const QuadratureRule rule = gauss_legendre(kQuadraturePoints, 0.0, 1.0);
  return rule;
}

// Unnormalized basis and its s-derivatives from the Gegenbauer recurrence.
void raw_basis(int n, double s, double* v, double* d1, double* d2) {
  const double t = 2.0 * s - 1.0;
  double c0 = 1.0, c0p = 0.0, c0pp = 0.0;
  double c1 = 2.0 * kLambda * t, c1p = 2.0 * kLambda, c1pp = 0.0;

  const double b = s * s * (1.0 - s) * (1.0 - s);
  const double bp = 2.0 * s * (1.0 - s) * (1.0 - 2.0 * s);
  const double bpp = 2.0 - 12.0 * s + 12.0 * s * s;

  for (int k = 0; k < n; ++k) {
    double c, cp, cpp;
    if (k == 0) {
      c = c0, cp = c0p, cpp = c0pp;
    } else if (k == 1) {
      c = c1, cp = c1p, cpp = c1pp;
    } else {
      const double m = k - 1;
      const double a = 2.0 * (m + kLambda);
      const double g = m + 2.0 * kLambda - 1.0;
      c = (a * t * c1 - g * c0) / (m + 1.0);
      cp = (a * (c1 + t * c1p) - g * c0p) / (m + 1.0);
      cpp = (a * (2.0 * c1p + t * c1pp) - g * c0pp) / (m + 1.0);
      c0 = c1, c0p = c1p, c0pp = c1pp;
      c1 = c, c1p = cp, c1pp = cpp;
    }
    // dt/ds = 2
    v[k] = b * c;
    d1[k] = bp * c + 2.0 * b * cp;
    d2[k] = bpp * c + 4.0 * bp * cp + 4.0 * b * cpp;
  }
}

const std::vector<double>& basis_scales() {
  static const std::vector<double> scales = [] {
    std::vector<double> s(kMaxBasisSize, 0.0);
    std::vector<double> v(kMaxBasisSize), d1(kMaxBasisSize), d2(kMaxBasisSize);
    const auto& rule = unit_rule();
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      raw_basis(kMaxBasisSize, rule.nodes[q], v.data(), d1.data(), d2.data());
      const double w = rule.weights[q] * map_from_s(rule.nodes[q]).g1;
      for (int k = 0; k < kMaxBasisSize; ++k) s[k] += w * v[k] * v[k];
    }
    for (double& x : s) x = 1.0 / std::sqrt(x);
    return s;
  }();
  return scales;
}

void check_basis_size(int n) {
  if (n < 1) throw std::invalid_argument("basis size must be >= 1");
  if (n > kMaxBasisSize)
    throw std::invalid_argument("basis size must be <= " + std::to_string(kMaxBasisSize));
}

// Basis and xi-derivatives at the mapped coordinate s.
BasisValues basis_at_s(int basis_size, double s) {
  BasisValues out;
  out.value.resize(basis_size);
  out.d1.resize(basis_size);
  out.d2.resize(basis_size);
  raw_basis(basis_size, s, out.value.data(), out.d1.data(), out.d2.data());
  const MapPoint m = map_from_s(s);
  const auto& scale = basis_scales();
  for (int k = 0; k < basis_size; ++k) {
    const double ds = out.d1[k];
    const double dss = out.d2[k];
    out.value[k] *= scale[k];
    out.d1[k] = scale[k] * ds / m.g1;
    out.d2[k] = scale[k] * (dss / (m.g1 * m.g1) - ds * m.g2 / (m.g1 * m.g1 * m.g1));
  }
  return out;
}

}  // namespace

BasisValues evaluate_basis(int basis_size, double xi) {
  check_basis_size(basis_size);
  if (!(xi >= 0.0 && xi <= 1.0)) throw std::invalid_argument("xi must lie in [0, 1]");
  return basis_at_s(basis_size, s_from_xi(xi));
}

ModalSystem assemble_modal_system(const BridgeGeometry& geom, const MaterialProps& props,
                                  double sigma, int basis_size) {
  check_basis_size(basis_size);
  geom.validate();
  props.validate();
  if (!std::isfinite(sigma)) throw std::invalid_argument("stress must be finite");

  const std::size_t n = static_cast<std::size_t>(basis_size);
  Matrix i0(n, n), i1(n, n), i2(n, n);
  const auto& rule = unit_rule();
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const BasisValues b = basis_at_s(basis_size, rule.nodes[q]);
    const double w = rule.weights[q] * map_from_s(rule.nodes[q]).g1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        i0(i, j) += w * b.value[i] * b.value[j];
        i1(i, j) += w * b.d1[i] * b.d1[j];
        i2(i, j) += w * b.d2[i] * b.d2[j];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      i0(j, i) = i0(i, j);
      i1(j, i) = i1(i, j);
      i2(j, i) = i2(i, j);
    }

  const double l = geom.length;
  const double section = geom.width * geom.thickness;
  ModalSystem sys;
  sys.basis_size = basis_size;
  sys.mass = i0 * (props.density * section * l);
  sys.bending_stiffness = i2 * (props.youngs_modulus * geom.second_moment() / (l * l * l));
  sys.geometric_stiffness = i1 * (sigma * section / l);
  return sys;
}

FundamentalMode fundamental_mode(const ModalSystem& system) {
  const SymmetricEigen eig = generalized_eigen(system.stiffness(), system.mass);
  FundamentalMode mode;
  mode.eigenvalue = eig.values.front();
  if (!(mode.eigenvalue > 0.0))
    throw SimulationError(ErrorKind::buckled,
                          "bridge is buckled: lowest stiffness eigenvalue is not positive");
  mode.frequency = std::sqrt(mode.eigenvalue) / (2.0 * kPi);
  mode.coefficients.resize(eig.values.size());
  for (std::size_t i = 0; i < eig.values.size(); ++i) mode.coefficients[i] = eig.vectors(i, 0);
  return mode;
}

double mode_shape(const std::vector<double>& coefficients, double xi) {
  const BasisValues b = evaluate_basis(static_cast<int>(coefficients.size()), xi);
  double w = 0.0;
  for (std::size_t k = 0; k < coefficients.size(); ++k) w += coefficients[k] * b.value[k];
  return w;
}

double frequency_at_stress(const BridgeGeometry& geom, const MaterialProps& props, double sigma,
                           int basis_size) {
  return fundamental_mode(assemble_modal_system(geom, props, sigma, basis_size)).frequency;
}

double fundamental_frequency(const BridgeGeometry& geom, const MaterialProps& props,
                             const SubstrateProps& substrate, double temperature,
                             int basis_size) {
  const double sigma = stress_at_temperature(props, substrate, temperature);
  return frequency_at_stress(geom, props, sigma, basis_size);
}

std::vector<SweepRow> frequency_sweep(const FrequencySweepRequest& request, int jobs) {
  if (request.steps < 1) throw std::invalid_argument("sweep needs at least one step");
  if (!std::isfinite(request.lo) || !std::isfinite(request.hi))
    throw std::invalid_argument("sweep range must be finite");
  const std::size_t n = static_cast<std::size_t>(request.steps);
  std::vector<SweepRow> rows(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    const double v = n == 1 ? request.lo
                            : request.lo + (request.hi - request.lo) * static_cast<double>(i) /
                                               static_cast<double>(n - 1);
    BridgeGeometry geom = request.geometry;
    double temperature = request.temperature;
    if (request.axis == SweepAxis::length)
      geom.length = v;
    else
      temperature = v;
    rows[i].value = v;
    try {
      rows[i].frequency =
          fundamental_frequency(geom, request.material, request.substrate, temperature,
                                request.basis_size);
    } catch (const SimulationError& e) {
      if (e.kind() != ErrorKind::buckled) throw;
    }
  });
  return rows;
}

}  // namespace moems
