#include <doctest.h>

#include <stdexcept>

#include "moems/materials.hpp"
#include "moems/presets.hpp"

using namespace moems;

TEST_SUITE("materials") {

TEST_CASE("stress equals the built-in value at the reference temperature") {
  CHECK(stress_at_temperature(gold(), silicon(), 293.0) == doctest::Approx(30e6));
}

TEST_CASE("cooling a gold film on silicon raises its tension linearly") {
  const MaterialProps au = gold();
  const double slope = -au.youngs_modulus * (au.cte - silicon().cte);
  CHECK(stress_at_temperature(au, silicon(), 77.0) ==
        doctest::Approx(30e6 + slope * (77.0 - 293.0)));
  CHECK(stress_at_temperature(au, silicon(), 77.0) == doctest::Approx(225.4368e6).epsilon(1e-6));
  const double a = stress_at_temperature(au, silicon(), 100.0);
  const double b = stress_at_temperature(au, silicon(), 200.0);
  const double c = stress_at_temperature(au, silicon(), 300.0);
  CHECK(b - a == doctest::Approx(c - b));
  CHECK(a > b);
}

TEST_CASE("Euler critical stress of a clamped bar") {
  const BridgeGeometry g = presets::bridge(220e-6, 160e-6);
  const double expected = -4.0 * 3.141592653589793 * 3.141592653589793 * 78e9 * 0.25e-12 /
                          (12.0 * 220e-6 * 220e-6);
  CHECK(euler_critical_stress(g, gold()) == doctest::Approx(expected));
}

TEST_CASE("buckling onset of the 220 um gold bridge") {
  const BucklingOnset b = buckling_onset(gold(), silicon(), presets::bridge(220e-6, 160e-6));
  REQUIRE(b.has_onset);
  CHECK(b.onset_temperature == doctest::Approx(327.62).epsilon(1e-4));
  CHECK(stress_at_temperature(gold(), silicon(), b.onset_temperature) ==
        doctest::Approx(b.critical_stress));
}

TEST_CASE("no onset when the film expands less than the substrate") {
  SubstrateProps hot{"hot", 30e-6};
  const BucklingOnset b = buckling_onset(gold(), hot, presets::bridge(220e-6, 160e-6));
  CHECK_FALSE(b.has_onset);
}

TEST_CASE("presets by name") {
  REQUIRE(material_preset("gold"));
  CHECK(material_preset("gold")->density == 19300.0);
  CHECK(material_preset("aluminum")->youngs_modulus == 70e9);
  CHECK_FALSE(material_preset("unobtainium"));
  CHECK(substrate_preset("silicon")->cte == 2.6e-6);
}

TEST_CASE("validation rejects non-physical properties") {
  MaterialProps m = gold();
  m.youngs_modulus = -1.0;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m = gold();
  m.poisson = 0.5;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  BridgeGeometry g = presets::bridge(220e-6, 160e-6);
  g.gap = 0.0;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("beam model validity flag") {
  CHECK(presets::bridge(220e-6, 160e-6).beam_model_valid());
  CHECK_FALSE(presets::bridge(8e-6, 8e-6).beam_model_valid());
}

}
