#include "moems/presets.hpp"

namespace moems::presets {

namespace {

constexpr double kOffTime = 5.276e-6;
constexpr double kIons = 2.0e15;

}  // namespace

BridgeGeometry bridge(double length, double width) {
  return {length, width, 0.5e-6, 2.2e-6, 200e-9, 9.0};
}

BridgeGeometry fig5_bridge() { return bridge(220e-6, 160e-6); }
BridgeGeometry edfa_bridge() { return bridge(140e-6, 80e-6); }

LaserParams erbium_laser() {
  LaserParams p;
  p.upper_state_lifetime = 10e-3;
  p.round_trip_time = 139.4e-9;
  p.round_trip_gain_coeff = 9.096;
  p.pump_rate = 35040.0;
  p.output_coupler_reflectivity = 0.04;
  p.intrinsic_loss = 1.3125;
  p.spontaneous_seed = 5e16;
  p.saturation_scale = saturation_scale_for_ions(p.round_trip_gain_coeff, p.round_trip_time, kIons);
  p.label_wavelength = 1.55e-6;
  return p;
}

CouplingModel erbium_imaged_coupling() {
  CouplingModel c;
  c.wavelength = 1.55e-6;
  c.mode_field_radius = 5.2e-6;
  c.magnification = 1.0;
  c.base_reflectivity = 0.5753;
  return c;
}

CouplingModel erbium_no_imaging_coupling() {
  CouplingModel c = erbium_imaged_coupling();
  c.base_reflectivity = 0.028;
  return c;
}

LaserParams ytterbium_laser() {
  LaserParams p = erbium_laser();
  p.upper_state_lifetime = 0.8e-3;
  p.round_trip_time = 168.9e-9;
  p.round_trip_gain_coeff = 9.538;
  p.pump_rate = 15160.0;
  p.intrinsic_loss = 1.103;
  p.saturation_scale = saturation_scale_for_ions(p.round_trip_gain_coeff, p.round_trip_time, kIons);
  p.label_wavelength = 1.06e-6;
  return p;
}

CouplingModel ytterbium_coupling() {
  CouplingModel c = erbium_imaged_coupling();
  c.wavelength = 1.06e-6;
  c.mode_field_radius = 3.1e-6;
  return c;
}

LaserParams erbium_dual_laser() {
  LaserParams p = erbium_laser();
  p.pump_rate = 17520.0;
  return p;
}

QSwitchScenario edfa_scenario(double frequency) {
  QSwitchScenario s;
  s.bridge = edfa_bridge();
  s.material = gold();
  s.substrate = silicon();
  s.drive.frequency = frequency;
  s.drive.v_on_over_pull_in = 1.5;
  s.drive.off_time = kOffTime;
  s.q_factor = 1.0;
  s.coupling = erbium_imaged_coupling();
  s.laser = erbium_laser();
  s.duration = 2.5e-3;
  s.laser_dt = 5e-9;
  return s;
}

QSwitchScenario fig5_scenario() {
  QSwitchScenario s = edfa_scenario(60e3);
  s.bridge = fig5_bridge();
  return s;
}

QSwitchScenario no_imaging_scenario(double frequency) {
  QSwitchScenario s = edfa_scenario(frequency);
  s.coupling = erbium_no_imaging_coupling();
  return s;
}

DualScenario dual_scenario(double frequency) {
  DualScenario d;
  d.arm_a = edfa_scenario(frequency);
  d.arm_a.bridge = fig5_bridge();
  d.arm_a.laser = erbium_dual_laser();
  d.coupling_b = ytterbium_coupling();
  d.laser_b = ytterbium_laser();
  return d;
}

CantileverGeometry cantilever(double length, double root_width, double tip_width) {
  CantileverGeometry c;
  c.length = length;
  c.root_width = root_width;
  c.tip_width = tip_width;
  c.structural_thickness = 1.5e-6;
  c.stress_layer_thickness = 10e-9;
  c.stress_layer_stress = 0.0;
  c.air_gap = 0.6e-6;
  c.dielectric_thickness = 1e-6;
  c.dielectric_rel_permittivity = 3.9;
  c.stiffening_factor = 1.0;
  return c;
}

CantileverGeometry fig13_cantilever() {
  CantileverGeometry c = cantilever(250e-6, 100e-6, 100e-6);
  c.stress_layer_stress = stress_for_radius(c, gold(), 1000e-6);
  return c;
}

CantileverGeometry triangular_cantilever() { return cantilever(250e-6, 200e-6, 10e-6); }

}  // namespace moems::presets
