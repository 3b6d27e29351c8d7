#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "moems/constants.hpp"
#include "moems/optics.hpp"
#include "moems/presets.hpp"

using namespace moems;

namespace {

MembraneTrajectory flat_trajectory(double x, double gap, std::size_t n = 5) {
  MembraneTrajectory t;
  t.dt = 1e-8;
  t.gap = gap;
  t.displacement.assign(n, x);
  t.velocity.assign(n, 0.0);
  t.contact.assign(n, x == gap);
  t.voltage.assign(n, 0.0);
  return t;
}

}  // namespace

TEST_SUITE("optics") {

TEST_CASE("aligned coupling equals the base reflectivity") {
  CouplingModel m = presets::erbium_imaged_coupling();
  CHECK(injection_efficiency(m, 0.0, 0.0) == m.base_reflectivity);
}

TEST_CASE("tilt at the critical angle costs exactly 1/e") {
  const CouplingModel m = presets::erbium_imaged_coupling();
  CHECK(m.critical_angle() == doctest::Approx(1.55e-6 / (kPi * 5.2e-6)));
  CHECK(injection_efficiency(m, m.critical_angle()) ==
        doctest::Approx(m.base_reflectivity / std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("nine degrees of tilt leaves about 6.5%") {
  CouplingModel m = presets::erbium_imaged_coupling();
  m.base_reflectivity = 1.0;
  CHECK(injection_efficiency(m, 9.0 * kPi / 180.0) == doctest::Approx(0.065).epsilon(0.03));
}

TEST_CASE("coupling falls monotonically with tilt and offset") {
  CouplingModel m = presets::erbium_imaged_coupling();
  m.lateral_loss_scale = 2e-6;
  double prev = 1.0;
  for (int i = 0; i <= 20; ++i) {
    const double eta = injection_efficiency(m, 0.01 * i, 0.0);
    CHECK(eta <= prev);
    CHECK(eta > 0.0);
    prev = eta;
  }
  CHECK(injection_efficiency(m, 0.0, 2e-6) ==
        doctest::Approx(m.base_reflectivity / std::exp(1.0)));
  CHECK(injection_efficiency(m, -0.05) == injection_efficiency(m, 0.05));
}

TEST_CASE("default tilt is nine degrees at full travel") {
  CHECK(default_tilt_per_displacement(2.2e-6) * 2.2e-6 == doctest::Approx(9.0 * kPi / 180.0));
}

TEST_CASE("schedule of a resting mirror is constant") {
  CouplingModel m = presets::erbium_imaged_coupling();
  m.tilt_per_displacement = default_tilt_per_displacement(2.2e-6);
  const LossSchedule s = loss_schedule(flat_trajectory(0.0, 2.2e-6), m);
  CHECK(s.dt == 1e-8);
  for (double r : s.back_reflectivity) CHECK(r == m.base_reflectivity);
}

TEST_CASE("full travel gives roughly 15:1 contrast") {
  CouplingModel m = presets::erbium_imaged_coupling();
  m.tilt_per_displacement = default_tilt_per_displacement(2.2e-6);
  const double on = loss_schedule(flat_trajectory(0.0, 2.2e-6), m).back_reflectivity[0];
  const double off = loss_schedule(flat_trajectory(2.2e-6, 2.2e-6), m).back_reflectivity[0];
  CHECK(on / off == doctest::Approx(15.4).epsilon(0.03));
}

TEST_CASE("inverted coupling is best in contact") {
  CouplingModel m = presets::erbium_imaged_coupling();
  m.tilt_per_displacement = default_tilt_per_displacement(2.2e-6);
  m.inverted = true;
  CHECK(loss_schedule(flat_trajectory(2.2e-6, 2.2e-6), m).back_reflectivity[0] ==
        m.base_reflectivity);
  CHECK(loss_schedule(flat_trajectory(0.0, 2.2e-6), m).back_reflectivity[0] <
        0.1 * m.base_reflectivity);
}

TEST_CASE("reduced base reflectivity keeps the normalized contrast") {
  CouplingModel imaged = presets::erbium_imaged_coupling();
  CouplingModel bare = presets::erbium_no_imaging_coupling();
  const double tilt = 0.05;
  CHECK(injection_efficiency(imaged, tilt) / imaged.base_reflectivity ==
        doctest::Approx(injection_efficiency(bare, tilt) / bare.base_reflectivity));
  CHECK(bare.base_reflectivity < imaged.base_reflectivity);
}

TEST_CASE("schedule interpolation") {
  LossSchedule s{1e-6, {0.0, 1.0, 0.5}};
  CHECK(s.at(0.5e-6) == doctest::Approx(0.5));
  CHECK(s.at(1.5e-6) == doctest::Approx(0.75));
  CHECK(s.at(10e-6) == 0.5);
  CHECK(s.duration() == doctest::Approx(2e-6));
}

TEST_CASE("coupling validation") {
  CouplingModel m = presets::erbium_imaged_coupling();
  m.base_reflectivity = 1.5;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m = presets::erbium_imaged_coupling();
  m.magnification = 0.0;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}

}
