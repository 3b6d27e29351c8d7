#include "moems/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace moems {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (res.ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), res.ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec)
      throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " +
                               ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at " + path.string());
  }
}

namespace {

std::size_t checked_stride(std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("stride must be >= 1");
  return stride;
}

}  // namespace

std::string trajectory_csv(const MembraneTrajectory& traj, std::size_t stride) {
  stride = checked_stride(stride);
  std::string out = "t_s,x_m,v_ms,contact,volts\n";
  for (std::size_t i = 0; i < traj.size(); i += stride) {
    out += format_number(traj.time(i));
    out += ',';
    out += format_number(traj.displacement[i]);
    out += ',';
    out += format_number(traj.velocity[i]);
    out += traj.contact[i] ? ",1," : ",0,";
    out += format_number(traj.voltage[i]);
    out += '\n';
  }
  return out;
}

std::string schedule_csv(const LossSchedule& schedule, std::size_t stride) {
  stride = checked_stride(stride);
  std::string out = "t_s,r_back\n";
  for (std::size_t i = 0; i < schedule.back_reflectivity.size(); i += stride) {
    out += format_number(schedule.dt * static_cast<double>(i));
    out += ',';
    out += format_number(schedule.back_reflectivity[i]);
    out += '\n';
  }
  return out;
}

std::string power_trace_csv(const PowerTrace& trace, std::size_t stride) {
  stride = checked_stride(stride);
  std::string out = "t_s,photons,inversion,power_w\n";
  for (std::size_t i = 0; i < trace.size(); i += stride) {
    out += format_number(trace.time(i));
    out += ',';
    out += format_number(trace.photon_number[i]);
    out += ',';
    out += format_number(trace.inversion[i]);
    out += ',';
    out += format_number(trace.output_power[i]);
    out += '\n';
  }
  return out;
}

std::string profile_csv(const CantileverProfile& profile) {
  std::string out = "x_m,z_m\n";
  for (std::size_t i = 0; i < profile.x.size(); ++i) {
    out += format_number(profile.x[i]);
    out += ',';
    out += format_number(profile.z[i]);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(std::string_view axis, const std::vector<SweepCsvRow>& rows) {
  std::string out = "axis,value_si,frequency_hz,flag\n";
  for (const auto& r : rows) {
    out += axis;
    out += ',';
    out += format_number(r.value);
    out += ',';
    out += r.flag.empty() ? format_number(r.frequency) : std::string();
    out += ',';
    out += r.flag;
    out += '\n';
  }
  return out;
}

std::vector<SweepCsvRow> to_csv_rows(const std::vector<SweepRow>& rows) {
  std::vector<SweepCsvRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.frequency)
      out.push_back({r.value, *r.frequency, {}});
    else
      out.push_back({r.value, 0.0, "buckled"});
  }
  return out;
}

}  // namespace moems
