#include "moems/cli/units.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace moems::cli {

namespace {

struct Unit {
  std::string_view symbol;
  double scale;
  Dimension dimension;
};

constexpr double kDegree = 3.14159265358979323846 / 180.0;

constexpr std::array kUnits = {
    Unit{"m", 1.0, Dimension::length},
    Unit{"mm", 1e-3, Dimension::length},
    Unit{"um", 1e-6, Dimension::length},
    Unit{"\xC2\xB5m", 1e-6, Dimension::length},  // micro sign
    Unit{"\xCE\xBCm", 1e-6, Dimension::length},  // greek mu
    Unit{"nm", 1e-9, Dimension::length},
    Unit{"A", 1e-10, Dimension::length},
    Unit{"Pa", 1.0, Dimension::pressure},
    Unit{"kPa", 1e3, Dimension::pressure},
    Unit{"MPa", 1e6, Dimension::pressure},
    Unit{"GPa", 1e9, Dimension::pressure},
    Unit{"s", 1.0, Dimension::time},
    Unit{"ms", 1e-3, Dimension::time},
    Unit{"us", 1e-6, Dimension::time},
    Unit{"\xC2\xB5s", 1e-6, Dimension::time},
    Unit{"\xCE\xBCs", 1e-6, Dimension::time},
    Unit{"ns", 1e-9, Dimension::time},
    Unit{"ps", 1e-12, Dimension::time},
    Unit{"Hz", 1.0, Dimension::frequency},
    Unit{"kHz", 1e3, Dimension::frequency},
    Unit{"MHz", 1e6, Dimension::frequency},
    Unit{"1/s", 1.0, Dimension::rate},
    Unit{"/s", 1.0, Dimension::rate},
    Unit{"V", 1.0, Dimension::voltage},
    Unit{"mV", 1e-3, Dimension::voltage},
    Unit{"kV", 1e3, Dimension::voltage},
    Unit{"K", 1.0, Dimension::temperature},
    Unit{"rad", 1.0, Dimension::angle},
    Unit{"mrad", 1e-3, Dimension::angle},
    Unit{"deg", kDegree, Dimension::angle},
    Unit{"kg/m3", 1.0, Dimension::density},
    Unit{"kg/m^3", 1.0, Dimension::density},
    Unit{"g/cm3", 1e3, Dimension::density},
    Unit{"1/K", 1.0, Dimension::per_kelvin},
    Unit{"/K", 1.0, Dimension::per_kelvin},
    Unit{"ppm/K", 1e-6, Dimension::per_kelvin},
    Unit{"W", 1.0, Dimension::power},
    Unit{"mW", 1e-3, Dimension::power},
    Unit{"kW", 1e3, Dimension::power},
    Unit{"rad/m", 1.0, Dimension::angle_per_length},
    Unit{"deg/um", kDegree * 1e6, Dimension::angle_per_length},
    Unit{"N/m", 1.0, Dimension::stiffness},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::dimensionless: return "dimensionless";
    case Dimension::length: return "length";
    case Dimension::pressure: return "pressure";
    case Dimension::time: return "time";
    case Dimension::frequency: return "frequency";
    case Dimension::rate: return "rate";
    case Dimension::voltage: return "voltage";
    case Dimension::temperature: return "temperature";
    case Dimension::angle: return "angle";
    case Dimension::density: return "density";
    case Dimension::per_kelvin: return "1/temperature";
    case Dimension::power: return "power";
    case Dimension::angle_per_length: return "angle/length";
    case Dimension::stiffness: return "stiffness";
  }
  return "unknown";
}

Quantity parse_quantity(std::string_view text) {
  const std::string_view s = trim(text);
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr == s.data())
    throw UnitError("expected a number with optional unit, got '" + std::string(text) + "'");
  if (!std::isfinite(value)) throw UnitError("value must be finite: '" + std::string(text) + "'");
  const std::string_view unit = trim(s.substr(static_cast<std::size_t>(res.ptr - s.data())));
  if (unit.empty()) return {value, Dimension::dimensionless};
  for (const auto& u : kUnits)
    if (u.symbol == unit) return {value * u.scale, u.dimension};
  throw UnitError("unknown unit '" + std::string(unit) + "'");
}

double parse_as(std::string_view text, Dimension expected) {
  const Quantity q = parse_quantity(text);
  if (q.dimension != expected) {
    if (q.dimension == Dimension::dimensionless)
      throw UnitError("missing unit: expected a " + std::string(to_string(expected)) +
                      ", got '" + std::string(trim(text)) + "'");
    throw UnitError("expected a " + std::string(to_string(expected)) + ", got '" +
                    std::string(trim(text)) + "'");
  }
  return q.value;
}

}  // namespace moems::cli
