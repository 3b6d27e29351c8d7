#include "moems/errors.hpp"

namespace moems {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::buckled: return "buckled";
    case ErrorKind::step_size: return "step_size";
    case ErrorKind::non_finite: return "non_finite";
    case ErrorKind::no_actuation_event: return "no_actuation_event";
    case ErrorKind::over_curled: return "over_curled";
    case ErrorKind::no_snap_down: return "no_snap_down";
    case ErrorKind::no_pulses: return "no_pulses";
  }
  return "unknown";
}

}  // namespace moems
