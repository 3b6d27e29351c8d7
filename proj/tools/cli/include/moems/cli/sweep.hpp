#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "moems/cli/scenario.hpp"

namespace moems::cli {

struct SweepPoint {
  std::string value;                          // as written in the sweep file
  double value_si = 0.0;
  std::vector<std::optional<double>> metrics; // one per output
  std::string flag;                           // physics error or report flags
};

struct SweepResult {
  std::string axis;
  Kind kind = Kind::modal;
  std::vector<std::string> outputs;
  std::vector<SweepPoint> points;  // axis order
};

std::vector<std::string> default_outputs(Kind kind);

// Looks up an output in a run summary. Plain names are searched in
// results, results.laser and results.metrics; dotted names are paths from
// results (array entries by index).
std::optional<double> lookup_output(const nlohmann::ordered_json& summary,
                                    const std::string& name);

// Every point is parsed before any runs, so schema errors surface
// deterministically. Physics failures become per-row flags.
SweepResult run_sweep(const SweepSpec& spec, int jobs = 1);

std::string sweep_table_csv(const SweepResult& result);
nlohmann::ordered_json sweep_json(const SweepResult& result);

}  // namespace moems::cli
