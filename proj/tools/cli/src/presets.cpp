#include "moems/cli/presets.hpp"

#include <array>
#include <string>

#include "moems/cli/report.hpp"

namespace moems::cli {

namespace {

constexpr std::string_view kFig3Gold = R"(# Fundamental frequency of a gold bridge against its length.
schema: 1
kind: sweep
axis: device.length
range: {from: 100 um, to: 300 um, steps: 11}
outputs: [frequency_hz]
base:
  kind: modal
  name: fig3_gold
  material: gold
  substrate: silicon
  device:
    type: bridge
    length: 120 um
    width: 80 um
    thickness: 0.5 um
    gap: 2.2 um
    dielectric_thickness: 200 nm
    dielectric_rel_permittivity: 9
  run:
    temperature: 293 K
    basis_size: 8
)";

constexpr std::string_view kFig3Aluminum = R"(# Same sweep for an aluminum bridge with the gold film's residual stress.
schema: 1
kind: sweep
axis: device.length
range: {from: 100 um, to: 300 um, steps: 11}
outputs: [frequency_hz]
base:
  kind: modal
  name: fig3_aluminum
  material: aluminum
  substrate: silicon
  device:
    type: bridge
    length: 120 um
    width: 80 um
    thickness: 0.5 um
    gap: 2.2 um
  run:
    temperature: 293 K
)";

constexpr std::string_view kFig4 = R"(# 220 um gold bridge cooled from room temperature to 77 K.
schema: 1
kind: sweep
axis: run.temperature
range: {from: 77 K, to: 320 K, steps: 28}
outputs: [frequency_hz, stress_pa]
base:
  kind: modal
  name: fig4_temperature
  material: gold
  substrate: silicon
  device:
    type: bridge
    length: 220 um
    width: 160 um
    thickness: 0.5 um
    gap: 2.2 um
  run:
    temperature: 293 K
)";

constexpr std::string_view kFig5 = R"(# Er fiber laser Q-switched by a 220 x 160 um bridge at 60 kHz.
schema: 1
kind: qswitch
name: fig5_bridge_60khz
material: gold
substrate: silicon
device:
  type: bridge
  length: 220 um
  width: 160 um
  thickness: 0.5 um
  gap: 2.2 um
  dielectric_thickness: 200 nm
  dielectric_rel_permittivity: 9
drive:
  kind: square
  frequency: 60 kHz
  v_on: 1.5 Vpi
  off_time: 5.276 us
coupling:
  wavelength: 1.55 um
  mode_field_radius: 5.2 um
  magnification: 1
  base_reflectivity: 0.5753
  tilt_at_full_gap: 9 deg
laser:
  upper_state_lifetime: 10 ms
  round_trip_time: 139.4 ns
  round_trip_gain_coeff: 9.096
  pump_rate: 35040 1/s
  output_coupler_reflectivity: 0.04
  intrinsic_loss: 1.3125
  spontaneous_seed: 5e16 1/s
  ions: 2e15
  wavelength: 1.55 um
run:
  temperature: 293 K
  duration: 2.5 ms
  dt: 5 ns
  mechanical_dt: auto
  q_factor: 1
  analysis_periods: 10
  trace_stride: 10
  mean_power_limit: 0.9 W
)";

constexpr std::string_view kEdfaSweep = R"(# 140 x 80 um bridge in the EDFA cavity across the drive band.
schema: 1
kind: sweep
axis: drive.frequency
values: [20 kHz, 39 kHz, 60 kHz, 120 kHz]
outputs: [repetition_rate_hz, pulses_per_cycle, fwhm_s, peak_power_w, mean_power_w, peak_to_cw]
base:
  kind: qswitch
  name: edfa
  material: gold
  substrate: silicon
  device:
    type: bridge
    length: 140 um
    width: 80 um
    thickness: 0.5 um
    gap: 2.2 um
  drive:
    kind: square
    frequency: 60 kHz
    v_on: 1.5 Vpi
    off_time: 5.276 us
  coupling:
    preset: erbium_imaged
    tilt_at_full_gap: 9 deg
  laser:
    preset: erbium
  run:
    duration: 2.5 ms
    dt: 5 ns
    q_factor: 1
    trace_stride: 10
)";

constexpr std::string_view kFig7 = R"(# Er and Yb cavities closed by the same 220 x 160 um bridge at 30 kHz.
schema: 1
kind: dual
name: fig7_dual_30khz
material: gold
substrate: silicon
device:
  type: bridge
  length: 220 um
  width: 160 um
  thickness: 0.5 um
  gap: 2.2 um
drive:
  kind: square
  frequency: 30 kHz
  v_on: 1.5 Vpi
  off_time: 5.276 us
arms:
  - label: er
    coupling:
      wavelength: 1.55 um
      mode_field_radius: 5.2 um
      base_reflectivity: 0.5753
      tilt_at_full_gap: 9 deg
    laser:
      upper_state_lifetime: 10 ms
      round_trip_time: 139.4 ns
      round_trip_gain_coeff: 9.096
      pump_rate: 17520 1/s
      intrinsic_loss: 1.3125
      spontaneous_seed: 5e16 1/s
      ions: 2e15
      wavelength: 1.55 um
  - label: yb
    coupling:
      wavelength: 1.06 um
      mode_field_radius: 3.1 um
      base_reflectivity: 0.5753
      tilt_at_full_gap: 9 deg
    laser:
      upper_state_lifetime: 0.8 ms
      round_trip_time: 168.9 ns
      round_trip_gain_coeff: 9.538
      pump_rate: 15160 1/s
      intrinsic_loss: 1.103
      spontaneous_seed: 5e16 1/s
      ions: 2e15
      wavelength: 1.06 um
run:
  duration: 2.5 ms
  dt: 5 ns
  q_factor: 1
  trace_stride: 10
)";

constexpr std::string_view kFig9 = R"(# EDFA cavity at 39 kHz with the imaging relay removed.
schema: 1
kind: qswitch
name: fig9_no_imaging_39khz
material: gold
substrate: silicon
device:
  type: bridge
  length: 140 um
  width: 80 um
  thickness: 0.5 um
  gap: 2.2 um
drive:
  kind: square
  frequency: 39 kHz
  v_on: 1.5 Vpi
  off_time: 5.276 us
coupling:
  wavelength: 1.55 um
  mode_field_radius: 5.2 um
  magnification: 1
  base_reflectivity: 0.028
  tilt_at_full_gap: 9 deg
laser:
  preset: erbium
run:
  duration: 2.5 ms
  dt: 5 ns
  q_factor: 1
  trace_stride: 10
)";

constexpr std::string_view kCantilever = R"(# Stress-curled gold cantilever, 250 x 100 um, 1000 um radius of curvature.
schema: 1
kind: cantilever
name: cantilever_fig13
material: gold
device:
  type: cantilever
  length: 250 um
  root_width: 100 um
  structural_thickness: 1.5 um
  stress_layer_thickness: 10 nm
  radius: 1000 um
  air_gap: 0.6 um
  dielectric_thickness: 1 um
  dielectric_rel_permittivity: 3.9
run:
  profile_points: 101
  pulldown: true
)";

constexpr std::array kPresets = {
    ShippedPreset{"fig3_gold_length_sweep", kFig3Gold},
    ShippedPreset{"fig3_aluminum_length_sweep", kFig3Aluminum},
    ShippedPreset{"fig4_temperature_sweep", kFig4},
    ShippedPreset{"fig5_bridge_60khz", kFig5},
    ShippedPreset{"edfa_frequency_sweep", kEdfaSweep},
    ShippedPreset{"fig7_dual_30khz", kFig7},
    ShippedPreset{"fig9_no_imaging_39khz", kFig9},
    ShippedPreset{"cantilever_fig13", kCantilever},
};

}  // namespace

std::span<const ShippedPreset> shipped_presets() { return kPresets; }

const ShippedPreset* find_preset(std::string_view name) {
  for (const auto& p : kPresets)
    if (p.name == name) return &p;
  return nullptr;
}

std::vector<std::filesystem::path> seed_presets(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create preset directory " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& p : kPresets) {
    const auto path = dir / (std::string(p.name) + ".yaml");
    write_text(path, p.yaml);
    written.push_back(path);
  }
  return written;
}

}  // namespace moems::cli
