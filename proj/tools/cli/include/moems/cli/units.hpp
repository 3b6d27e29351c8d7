#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moems::cli {

enum class Dimension {
  dimensionless,
  length,
  pressure,
  time,
  frequency,
  rate,         // 1/s
  voltage,
  temperature,
  angle,
  density,
  per_kelvin,
  power,
  angle_per_length,
  stiffness,
};

std::string_view to_string(Dimension d);

class UnitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Quantity {
  double value = 0.0;  // SI
  Dimension dimension = Dimension::dimensionless;
};

// "220 um", "30 MPa", "5e16 1/s", "9 deg". A bare number is dimensionless.
Quantity parse_quantity(std::string_view text);

// Parses and checks the dimension. Dimensional quantities must carry a unit.
double parse_as(std::string_view text, Dimension expected);

}  // namespace moems::cli
