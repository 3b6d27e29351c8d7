#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "moems/cli/scenario.hpp"

namespace moems::cli {

// In-memory result of one scenario: the summary plus CSV traces keyed by
// file name. Nothing touches the disk until it is written out.
struct Report {
  nlohmann::ordered_json summary;
  std::vector<std::pair<std::string, std::string>> files;
};

QSwitchScenario to_qswitch(const Scenario& scenario, const LaserArm& arm);
DualScenario to_dual(const Scenario& scenario);

// Physics failures propagate as SimulationError, bad values as
// std::invalid_argument.
Report run_scenario(const Scenario& scenario, int jobs = 1);

}  // namespace moems::cli
