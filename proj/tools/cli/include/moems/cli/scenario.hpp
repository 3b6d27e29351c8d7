#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "moems/actuation.hpp"
#include "moems/cantilever.hpp"
#include "moems/laser.hpp"
#include "moems/materials.hpp"
#include "moems/optics.hpp"
#include "moems/pipeline.hpp"

namespace moems::cli {

inline constexpr int kSchemaVersion = 1;

// Config problem tied to a dotted field path and a 1-based source line
// (0 when unknown).
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, int line, const std::string& message);
  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }

 private:
  std::string path_;
  int line_;
};

// Unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind { modal, pullin, transient, cantilever, qswitch, dual };

std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);

struct LaserArm {
  std::string label;
  CouplingModel coupling;
  LaserParams laser;
};

struct RunSettings {
  double temperature = 293.0;    // K
  double duration = 0.0;         // s
  double dt = 5e-9;              // s, laser step
  double mechanical_dt = 0.0;    // s, 0 = 1 / (200 f1)
  int basis_size = kDefaultBasisSize;
  int analysis_periods = 10;
  int trace_stride = 1;
  std::optional<double> mean_power_limit;  // W
  double q_factor = 2.0;
  std::optional<double> stiffness;         // N/m, pullin override
};

struct CantileverSettings {
  CantileverGeometry geometry;
  std::optional<double> radius;  // m, sets stress_layer_stress
  int profile_points = 101;
  bool pulldown = true;
};

// Drive as written in the config. The on-voltage may be given relative to
// the device's pull-in voltage and the duty as a fixed off-time.
struct DriveSpec {
  DriveWaveform waveform;
  std::optional<double> v_on_over_pull_in;
  std::optional<double> off_time;  // s

  DriveWaveform resolve(double pull_in) const;
  BridgeDrive bridge_drive() const;  // square drives only
};

struct Scenario {
  Kind kind = Kind::modal;
  std::string name;
  MaterialProps material;
  SubstrateProps substrate;
  std::optional<BridgeGeometry> bridge;
  std::optional<CantileverSettings> cantilever;
  std::optional<DriveSpec> drive;
  std::vector<LaserArm> arms;                    // 1 for qswitch, 2 for dual
  RunSettings run;
};

Scenario parse_scenario(const YAML::Node& root, std::optional<Kind> forced = std::nullopt);
YAML::Node load_yaml(const std::filesystem::path& path);

struct SweepSpec {
  YAML::Node base;                  // scenario mapping
  std::string axis;                 // dotted path inside base
  std::vector<std::string> values;  // substituted verbatim
  std::vector<std::string> outputs;
};

SweepSpec parse_sweep(const YAML::Node& root);

// Deep copy of `base` with the scalar at `dotted_path` replaced.
YAML::Node with_override(const YAML::Node& base, const std::string& dotted_path,
                         const std::string& value);

}  // namespace moems::cli
