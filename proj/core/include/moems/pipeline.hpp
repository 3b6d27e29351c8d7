#pragma once

#include <optional>

#include "moems/actuation.hpp"
#include "moems/laser.hpp"
#include "moems/optics.hpp"

namespace moems {

// Bridge drive settings in the form the presets use: the on-voltage relative
// to pull-in and a fixed off-time per period.
struct BridgeDrive {
  double frequency = 60e3;          // Hz
  double v_on = 0.0;                // V; used when v_on_over_pull_in <= 0
  double v_on_over_pull_in = 1.5;
  double v_off = 0.0;               // V
  std::optional<double> off_time;   // s; overrides duty
  double duty = 0.5;
  double rise_time = 0.0;           // s
};

DriveWaveform make_square_drive(const BridgeDrive& drive, double pull_in);

struct QSwitchScenario {
  BridgeGeometry bridge;
  MaterialProps material;
  SubstrateProps substrate;
  double temperature = 293.0;     // K
  int basis_size = kDefaultBasisSize;
  BridgeDrive drive;
  double q_factor = 2.0;
  double mechanical_dt = 0.0;     // s, 0 = 1 / (200 f1)
  CouplingModel coupling;         // tilt_per_displacement 0 = 9 deg at full gap
  LaserParams laser;
  double duration = 2.5e-3;       // s
  double laser_dt = 5e-9;         // s
  int analysis_periods = 10;      // trailing drive periods used for statistics
};

struct QSwitchResult {
  LumpedModel lumped;
  PullIn pull_in;
  DriveWaveform drive;
  CouplingModel coupling;         // with defaults resolved
  MembraneTrajectory trajectory;
  LossSchedule schedule;
  PowerTrace trace;
  SteadyState cw;
  PulseDetection detection;
  std::optional<PulseStats> stats;  // empty when nothing pulses
};

// Trailing window of whole drive periods, ending at the last sample.
PulseDetection analysis_window(double duration, double frequency, int periods);

QSwitchResult run_qswitch(const QSwitchScenario& scenario);

struct DualScenario {
  QSwitchScenario arm_a;  // mechanics, drive and run settings come from arm_a
  CouplingModel coupling_b;
  LaserParams laser_b;
};

struct DualScenarioResult {
  QSwitchResult arm_a;  // trace/schedule/stats filled per arm
  QSwitchResult arm_b;
  std::optional<double> peak_offset;  // s
  double period = 0.0;                // s
};

DualScenarioResult run_dual(const DualScenario& scenario, int jobs = 2);

}  // namespace moems
