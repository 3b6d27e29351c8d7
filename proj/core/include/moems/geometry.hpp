#pragma once

namespace moems {

// Clamped-clamped bridge membrane suspended over a dielectric-coated electrode.
struct BridgeGeometry {
  double length = 0.0;                       // m, clamp to clamp
  double width = 0.0;                        // m
  double thickness = 0.0;                    // m
  double gap = 0.0;                          // m, air gap to dielectric top
  double dielectric_thickness = 0.0;         // m
  double dielectric_rel_permittivity = 1.0;  // dimensionless

  void validate() const;

  // Euler-Bernoulli beam model is only trusted for thickness < length / 20.
  bool beam_model_valid() const noexcept { return thickness < length / 20.0; }

  double area() const noexcept { return length * width; }

  // Air gap plus the electrically equivalent air thickness of the dielectric.
  double effective_gap() const noexcept {
    return gap + dielectric_thickness / dielectric_rel_permittivity;
  }

  double second_moment() const noexcept {
    return width * thickness * thickness * thickness / 12.0;
  }
};

}  // namespace moems
