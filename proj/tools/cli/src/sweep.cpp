#include "moems/cli/sweep.hpp"

#include <sstream>

#include "moems/cli/runner.hpp"
#include "moems/cli/units.hpp"
#include "moems/csv.hpp"
#include "moems/errors.hpp"
#include "moems/parallel.hpp"

namespace moems::cli {

using nlohmann::ordered_json;

std::vector<std::string> default_outputs(Kind kind) {
  switch (kind) {
    case Kind::modal: return {"frequency_hz"};
    case Kind::pullin: return {"pull_in_voltage_v", "stiffness_n_m"};
    case Kind::transient: return {"switch_down_time_s", "release_time_s", "contact_duty"};
    case Kind::cantilever: return {"tip_deflection_m", "tip_slope_rad", "frequency_hz"};
    case Kind::qswitch:
      return {"repetition_rate_hz", "fwhm_s", "peak_power_w", "mean_power_w"};
    case Kind::dual:
      return {"arms.0.fwhm_s", "arms.1.fwhm_s", "sync_offset_fraction"};
  }
  return {};
}

std::optional<double> lookup_output(const ordered_json& summary, const std::string& name) {
  if (!summary.contains("results")) return std::nullopt;
  const ordered_json& results = summary["results"];
  const ordered_json* node = nullptr;
  if (name.find('.') == std::string::npos) {
    for (const char* section : {"", "laser", "metrics"}) {
      const ordered_json* scope = &results;
      if (*section) {
        if (!results.contains(section)) continue;
        scope = &results[section];
      }
      if (scope->is_object() && scope->contains(name)) {
        node = &(*scope)[name];
        break;
      }
    }
  } else {
    node = &results;
    std::istringstream in(name);
    std::string part;
    while (node && std::getline(in, part, '.')) {
      if (node->is_object() && node->contains(part)) {
        node = &(*node)[part];
      } else if (node->is_array() && !part.empty() &&
                 part.find_first_not_of("0123456789") == std::string::npos &&
                 std::stoul(part) < node->size()) {
        node = &(*node)[std::stoul(part)];
      } else {
        node = nullptr;
      }
    }
  }
  if (!node || !node->is_number()) return std::nullopt;
  return node->get<double>();
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
  std::vector<Scenario> scenarios;
  scenarios.reserve(spec.values.size());
  SweepResult result;
  result.axis = spec.axis;
  for (const auto& value : spec.values) {
    Scenario sc;
    try {
      sc = parse_scenario(with_override(spec.base, spec.axis, value));
    } catch (const SchemaError& e) {
      throw SchemaError("base." + e.path(), e.line(),
                        std::string(e.what()) + " (sweep value '" + value + "')");
    }
    SweepPoint p;
    p.value = value;
    try {
      p.value_si = parse_quantity(value).value;
    } catch (const UnitError& e) {
      throw SchemaError("values", 0, e.what());
    }
    result.points.push_back(std::move(p));
    scenarios.push_back(std::move(sc));
  }
  if (!scenarios.empty()) result.kind = scenarios.front().kind;
  result.outputs = spec.outputs.empty() ? default_outputs(result.kind) : spec.outputs;

  // Nested parallelism stays off: each point runs single-threaded.
  parallel_for(scenarios.size(), jobs, [&](std::size_t i) {
    SweepPoint& p = result.points[i];
    try {
      const Report report = run_scenario(scenarios[i], 1);
      for (const auto& name : result.outputs) p.metrics.push_back(lookup_output(report.summary, name));
      std::string flags;
      for (const auto& f : report.summary["flags"]) flags += (flags.empty() ? "" : ";") + f.get<std::string>();
      p.flag = flags;
    } catch (const SimulationError& e) {
      p.metrics.assign(result.outputs.size(), std::nullopt);
      p.flag = std::string(to_string(e.kind()));
    } catch (const std::invalid_argument& e) {
      p.metrics.assign(result.outputs.size(), std::nullopt);
      p.flag = "invalid";
    }
  });
  return result;
}

std::string sweep_table_csv(const SweepResult& result) {
  std::string out = "axis,value,value_si";
  for (const auto& name : result.outputs) out += ',' + name;
  out += ",flag\n";
  for (const auto& p : result.points) {
    out += result.axis + ',' + p.value + ',' + format_number(p.value_si);
    for (const auto& m : p.metrics) out += ',' + (m ? format_number(*m) : std::string());
    out += ',' + p.flag + '\n';
  }
  return out;
}

ordered_json sweep_json(const SweepResult& result) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "sweep";
  j["scenario_kind"] = std::string(to_string(result.kind));
  j["axis"] = result.axis;
  j["outputs"] = result.outputs;
  ordered_json rows = ordered_json::array();
  for (const auto& p : result.points) {
    ordered_json row;
    row["value"] = p.value;
    row["value_si"] = p.value_si;
    for (std::size_t k = 0; k < result.outputs.size(); ++k)
      row[result.outputs[k]] = p.metrics[k] ? ordered_json(*p.metrics[k]) : nullptr;
    row["flag"] = p.flag;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace moems::cli
