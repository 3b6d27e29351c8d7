#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "moems/actuation.hpp"
#include "moems/cantilever.hpp"
#include "moems/laser.hpp"
#include "moems/modal.hpp"
#include "moems/optics.hpp"

namespace moems {

// Shortest round-trip decimal form; identical bytes on every run.
std::string format_number(double v);

// Writes to a sibling temporary file and renames it over `path`. Throws
// std::runtime_error naming the path on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// Every `stride`-th sample is emitted; stride 1 writes all of them.
std::string trajectory_csv(const MembraneTrajectory& traj, std::size_t stride = 1);
std::string schedule_csv(const LossSchedule& schedule, std::size_t stride = 1);
std::string power_trace_csv(const PowerTrace& trace, std::size_t stride = 1);
std::string profile_csv(const CantileverProfile& profile);

struct SweepCsvRow {
  double value = 0.0;
  double frequency = 0.0;
  std::string flag;  // empty, "buckled", ...
};
std::string sweep_csv(std::string_view axis, const std::vector<SweepCsvRow>& rows);
std::vector<SweepCsvRow> to_csv_rows(const std::vector<SweepRow>& rows);

}  // namespace moems
