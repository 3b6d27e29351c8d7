#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moems {

// Physics-level failures. Bad input values are reported with
// std::invalid_argument instead.
enum class ErrorKind {
  domain,
  buckled,
  step_size,
  non_finite,
  no_actuation_event,
  over_curled,
  no_snap_down,
  no_pulses,
};

std::string_view to_string(ErrorKind kind);

class SimulationError : public std::runtime_error {
 public:
  SimulationError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace moems
