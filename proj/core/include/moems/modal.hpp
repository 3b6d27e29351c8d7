#pragma once

#include <optional>
#include <vector>

#include "moems/geometry.hpp"
#include "moems/linalg.hpp"
#include "moems/materials.hpp"

namespace moems {

inline constexpr int kDefaultBasisSize = 8;
inline constexpr int kMaxBasisSize = 64;

// Admissible clamped-clamped shape functions on xi in [0, 1], written in a
// coordinate s that clusters toward both clamps:
//   xi = s - a sin(2 pi s) / (2 pi),  phi_k = s^2 (1 - s)^2 C_k^(9/2)(2 s - 1)
// The set is hierarchical, so the N-term system is the leading block of the
// N+1 one. Derivatives are with respect to xi.
struct BasisValues {
  std::vector<double> value;
  std::vector<double> d1;  // d/dxi
  std::vector<double> d2;  // d2/dxi2
};
BasisValues evaluate_basis(int basis_size, double xi);

struct ModalSystem {
  int basis_size = 0;
  Matrix mass;
  Matrix bending_stiffness;
  Matrix geometric_stiffness;  // proportional to sigma

  Matrix stiffness() const { return bending_stiffness + geometric_stiffness; }
};

ModalSystem assemble_modal_system(const BridgeGeometry& geom, const MaterialProps& props,
                                  double sigma, int basis_size = kDefaultBasisSize);

struct FundamentalMode {
  double eigenvalue = 0.0;  // (rad/s)^2
  double frequency = 0.0;   // Hz
  std::vector<double> coefficients;  // M-normalized Ritz vector
};

// Lowest mode of K q = lambda M q. Throws SimulationError(buckled) when the
// lowest eigenvalue is not positive.
FundamentalMode fundamental_mode(const ModalSystem& system);

// Deflection of a Ritz vector at xi in [0, 1].
double mode_shape(const std::vector<double>& coefficients, double xi);

double frequency_at_stress(const BridgeGeometry& geom, const MaterialProps& props, double sigma,
                           int basis_size = kDefaultBasisSize);

double fundamental_frequency(const BridgeGeometry& geom, const MaterialProps& props,
                             const SubstrateProps& substrate, double temperature,
                             int basis_size = kDefaultBasisSize);

enum class SweepAxis { length, temperature };

struct SweepRow {
  double value = 0.0;                    // SI axis value
  std::optional<double> frequency;       // Hz, empty when buckled
};

struct FrequencySweepRequest {
  SweepAxis axis = SweepAxis::length;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;
  BridgeGeometry geometry;
  MaterialProps material;
  SubstrateProps substrate;
  double temperature = 293.0;
  int basis_size = kDefaultBasisSize;
};

// Evenly spaced sweep. steps == 1 evaluates lo only. Buckled points come
// back with an empty frequency instead of throwing. jobs > 1 evaluates
// points on worker threads; row order always follows the axis.
std::vector<SweepRow> frequency_sweep(const FrequencySweepRequest& request, int jobs = 1);

}  // namespace moems
