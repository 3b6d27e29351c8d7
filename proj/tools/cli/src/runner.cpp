#include "moems/cli/runner.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "moems/constants.hpp"
#include "moems/csv.hpp"
#include "moems/errors.hpp"

namespace moems::cli {

using nlohmann::ordered_json;

namespace {

constexpr double kDefaultMeanPowerLimit = 0.9;  // W, fiber connector rating

ordered_json material_json(const MaterialProps& m) {
  return {{"name", m.name},
          {"youngs_modulus_pa", m.youngs_modulus},
          {"cte_per_k", m.cte},
          {"poisson", m.poisson},
          {"density_kg_m3", m.density},
          {"builtin_stress_pa", m.builtin_stress},
          {"ref_temperature_k", m.ref_temperature}};
}

ordered_json bridge_json(const BridgeGeometry& g) {
  return {{"type", "bridge"},
          {"length_m", g.length},
          {"width_m", g.width},
          {"thickness_m", g.thickness},
          {"gap_m", g.gap},
          {"dielectric_thickness_m", g.dielectric_thickness},
          {"dielectric_rel_permittivity", g.dielectric_rel_permittivity}};
}

ordered_json cantilever_json(const CantileverGeometry& g) {
  return {{"type", "cantilever"},
          {"length_m", g.length},
          {"root_width_m", g.root_width},
          {"tip_width_m", g.tip_width},
          {"structural_thickness_m", g.structural_thickness},
          {"stress_layer_thickness_m", g.stress_layer_thickness},
          {"stress_layer_stress_pa", g.stress_layer_stress},
          {"air_gap_m", g.air_gap},
          {"dielectric_thickness_m", g.dielectric_thickness},
          {"dielectric_rel_permittivity", g.dielectric_rel_permittivity},
          {"stiffening_factor", g.stiffening_factor}};
}

ordered_json drive_json(const DriveWaveform& w) {
  const char* kind = w.kind == DriveWaveform::Kind::square     ? "square"
                     : w.kind == DriveWaveform::Kind::constant ? "constant"
                                                               : "sampled";
  ordered_json j = {{"kind", kind}, {"v_on_v", w.v_on}};
  if (w.kind == DriveWaveform::Kind::square) {
    j["frequency_hz"] = w.frequency;
    j["duty"] = w.duty;
    j["v_off_v"] = w.v_off;
    j["rise_time_s"] = w.rise_time;
  }
  if (w.kind == DriveWaveform::Kind::sampled) j["samples"] = w.samples.size();
  return j;
}

ordered_json coupling_json(const CouplingModel& c) {
  return {{"wavelength_m", c.wavelength},
          {"mode_field_radius_m", c.mode_field_radius},
          {"magnification", c.magnification},
          {"base_reflectivity", c.base_reflectivity},
          {"tilt_per_displacement_rad_m", c.tilt_per_displacement},
          {"lateral_loss_scale_m", c.lateral_loss_scale},
          {"inverted", c.inverted},
          {"critical_angle_rad", c.critical_angle()}};
}

ordered_json laser_json(const LaserParams& p) {
  return {{"upper_state_lifetime_s", p.upper_state_lifetime},
          {"round_trip_time_s", p.round_trip_time},
          {"round_trip_gain_coeff", p.round_trip_gain_coeff},
          {"pump_rate_per_s", p.pump_rate},
          {"output_coupler_reflectivity", p.output_coupler_reflectivity},
          {"intrinsic_loss", p.intrinsic_loss},
          {"spontaneous_seed_per_s", p.spontaneous_seed},
          {"saturation_scale_per_s", p.saturation_scale},
          {"wavelength_m", p.label_wavelength}};
}

ordered_json lumped_json(const LumpedModel& l, const PullIn& p, const BridgeGeometry& g) {
  return {{"stiffness_n_m", l.stiffness},
          {"effective_mass_kg", l.effective_mass},
          {"lumped_frequency_hz", l.frequency},
          {"effective_gap_m", g.effective_gap()},
          {"pull_in_voltage_v", p.voltage},
          {"pull_in_displacement_m", p.displacement}};
}

ordered_json metrics_json(const TrajectoryMetrics& m) {
  ordered_json j;
  j["switch_down_time_s"] = m.switch_down_time ? ordered_json(*m.switch_down_time) : nullptr;
  j["release_time_s"] = m.release_time ? ordered_json(*m.release_time) : nullptr;
  j["contact_duty"] = m.contact_duty;
  j["down_events"] = m.down_events;
  j["release_events"] = m.release_events;
  return j;
}

ordered_json stats_json(const PulseStats& s, const SteadyState& cw, double frequency) {
  ordered_json j;
  const double span = s.window_end - s.window_start;
  j["pulse_count"] = s.pulses.size();
  j["pulses_per_cycle"] = static_cast<double>(s.pulses.size()) / (span * frequency);
  j["repetition_rate_hz"] = s.repetition_rate;
  j["fwhm_s"] = s.mean_fwhm();
  j["peak_power_w"] = s.mean_peak();
  j["max_peak_power_w"] = s.max_peak();
  j["mean_power_w"] = s.mean_power;
  j["peak_to_mean"] = s.peak_to_mean_ratio;
  j["cw_power_w"] = cw.output_power;
  j["peak_to_cw"] = std::isfinite(s.peak_to_cw_ratio) ? ordered_json(s.peak_to_cw_ratio) : nullptr;
  j["baseline_w"] = s.baseline;
  j["window_start_s"] = s.window_start;
  j["window_end_s"] = s.window_end;
  ordered_json pulses = ordered_json::array();
  for (const auto& p : s.pulses)
    pulses.push_back({{"peak_time_s", p.peak_time},
                      {"peak_power_w", p.peak_power},
                      {"fwhm_s", p.fwhm},
                      {"energy_j", p.energy},
                      {"inversion_before", p.inversion_before},
                      {"inversion_after", p.inversion_after}});
  j["pulses"] = std::move(pulses);
  return j;
}

std::string pulses_csv(const PulseStats& s) {
  std::string out = "peak_time_s,peak_power_w,fwhm_s,energy_j,inversion_before,inversion_after\n";
  for (const auto& p : s.pulses) {
    out += format_number(p.peak_time) + ',' + format_number(p.peak_power) + ',' +
           format_number(p.fwhm) + ',' + format_number(p.energy) + ',' +
           format_number(p.inversion_before) + ',' + format_number(p.inversion_after) + '\n';
  }
  return out;
}

struct Mechanics {
  double sigma = 0.0;
  LumpedModel lumped;
  PullIn pull_in;
};

Mechanics bridge_mechanics(const Scenario& sc) {
  Mechanics m;
  m.sigma = stress_at_temperature(sc.material, sc.substrate, sc.run.temperature);
  m.lumped = effective_spring_and_mass(*sc.bridge, sc.material, m.sigma, sc.run.basis_size);
  const double k = sc.run.stiffness.value_or(m.lumped.stiffness);
  m.pull_in = pull_in_voltage(*sc.bridge, k);
  return m;
}

ordered_json base_summary(const Scenario& sc) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = std::string(to_string(sc.kind));
  j["name"] = sc.name;
  ordered_json inputs;
  inputs["material"] = material_json(sc.material);
  inputs["substrate"] = {{"name", sc.substrate.name}, {"cte_per_k", sc.substrate.cte}};
  inputs["device"] = sc.bridge ? bridge_json(*sc.bridge) : cantilever_json(sc.cantilever->geometry);
  inputs["run"] = {{"temperature_k", sc.run.temperature}, {"basis_size", sc.run.basis_size}};
  j["inputs"] = std::move(inputs);
  return j;
}

void add_bridge_flags(ordered_json& flags, const BridgeGeometry& g) {
  if (!g.beam_model_valid()) flags.push_back("beam_model_invalid");
}

Report run_modal(const Scenario& sc) {
  Report r;
  r.summary = base_summary(sc);
  ordered_json flags = ordered_json::array();
  add_bridge_flags(flags, *sc.bridge);
  const double sigma = stress_at_temperature(sc.material, sc.substrate, sc.run.temperature);
  const BucklingOnset onset = buckling_onset(sc.material, sc.substrate, *sc.bridge);
  ordered_json res;
  res["stress_pa"] = sigma;
  res["critical_stress_pa"] = onset.critical_stress;
  res["buckling_onset_k"] = onset.has_onset ? ordered_json(onset.onset_temperature) : nullptr;
  res["frequency_hz"] = frequency_at_stress(*sc.bridge, sc.material, sigma, sc.run.basis_size);
  r.summary["results"] = std::move(res);
  r.summary["flags"] = std::move(flags);
  return r;
}

Report run_pullin(const Scenario& sc) {
  Report r;
  r.summary = base_summary(sc);
  ordered_json flags = ordered_json::array();
  add_bridge_flags(flags, *sc.bridge);
  const Mechanics m = bridge_mechanics(sc);
  ordered_json res = lumped_json(m.lumped, m.pull_in, *sc.bridge);
  res["stress_pa"] = m.sigma;
  if (sc.run.stiffness) res["stiffness_n_m"] = *sc.run.stiffness;
  res["rest_capacitance_f"] = capacitance(*sc.bridge, 0.0);
  r.summary["results"] = std::move(res);
  r.summary["flags"] = std::move(flags);
  return r;
}

Report run_transient(const Scenario& sc) {
  Report r;
  r.summary = base_summary(sc);
  ordered_json flags = ordered_json::array();
  add_bridge_flags(flags, *sc.bridge);
  const Mechanics m = bridge_mechanics(sc);
  const DriveWaveform drive = sc.drive->resolve(m.pull_in.voltage);
  LumpedModel lumped = m.lumped;
  if (sc.run.stiffness) {
    lumped.stiffness = *sc.run.stiffness;
    lumped.frequency = std::sqrt(lumped.stiffness / lumped.effective_mass) / (2.0 * kPi);
  }
  const double dt =
      sc.run.mechanical_dt > 0.0 ? sc.run.mechanical_dt : 1.0 / (200.0 * lumped.frequency);
  const MembraneTrajectory traj =
      integrate_transient(*sc.bridge, lumped, drive, sc.run.q_factor, sc.run.duration, dt);
  std::optional<TrajectoryMetrics> metrics;
  try {
    metrics = trajectory_metrics(traj);
  } catch (const SimulationError& e) {
    if (e.kind() != ErrorKind::no_actuation_event) throw;
    flags.push_back("no_actuation_event");
  }

  r.summary["inputs"]["drive"] = drive_json(drive);
  r.summary["inputs"]["run"]["duration_s"] = sc.run.duration;
  r.summary["inputs"]["run"]["mechanical_dt_s"] = dt;
  r.summary["inputs"]["run"]["q_factor"] =
      std::isfinite(sc.run.q_factor) ? ordered_json(sc.run.q_factor) : ordered_json("inf");
  ordered_json res = lumped_json(lumped, m.pull_in, *sc.bridge);
  res["stress_pa"] = m.sigma;
  res["metrics"] = metrics ? metrics_json(*metrics) : ordered_json(nullptr);
  r.summary["results"] = std::move(res);
  r.summary["flags"] = std::move(flags);
  r.files.emplace_back("trajectory.csv",
                       trajectory_csv(traj, static_cast<std::size_t>(sc.run.trace_stride)));
  return r;
}

Report run_cantilever(const Scenario& sc) {
  Report r;
  r.summary = base_summary(sc);
  const CantileverSettings& cs = *sc.cantilever;
  const CantileverGeometry& g = cs.geometry;
  ordered_json flags = ordered_json::array();
  if (!g.thin_film_valid()) flags.push_back("thin_film_invalid");

  const double kappa = curvature_from_stress(g, sc.material);
  const CantileverProfile profile = profile_and_tip(g, kappa, cs.profile_points);
  ordered_json res;
  res["curvature_per_m"] = kappa;
  res["radius_m"] = kappa != 0.0 ? ordered_json(1.0 / kappa) : nullptr;
  res["stress_layer_stress_pa"] = g.stress_layer_stress;
  res["tip_deflection_m"] = profile.tip_deflection;
  res["tip_slope_rad"] = profile.tip_slope;
  res["tip_slope_deg"] = profile.tip_slope * 180.0 / kPi;
  res["reflected_deviation_rad"] = profile.reflected_deviation;
  res["frequency_hz"] = cantilever_frequency(g, sc.material);
  res["hinge_stiffness_nm_per_rad"] = hinge_stiffness(g, sc.material);
  if (cs.pulldown) {
    const Pulldown p = pulldown_voltage(g, sc.material, kappa);
    res["pulldown_voltage_v"] = p.voltage;
    res["pulldown_rotation_rad"] = p.rotation;
    res["pulldown_touchdown"] = p.touchdown;
  }
  r.summary["results"] = std::move(res);
  r.summary["flags"] = std::move(flags);
  r.files.emplace_back("profile.csv", profile_csv(profile));
  return r;
}

void check_power(ordered_json& flags, const PulseStats& s, const RunSettings& run,
                 const std::string& label) {
  const double limit = run.mean_power_limit.value_or(kDefaultMeanPowerLimit);
  if (s.mean_power > limit) flags.push_back(label + "mean_power_over_limit");
}

[[noreturn]] void no_pulses(const std::string& label) {
  throw SimulationError(ErrorKind::no_pulses,
                        "no pulses detected" + (label.empty() ? "" : " on arm " + label));
}

void add_run_inputs(ordered_json& summary, const Scenario& sc, const QSwitchResult& res) {
  summary["inputs"]["drive"] = drive_json(res.drive);
  auto& run = summary["inputs"]["run"];
  run["duration_s"] = sc.run.duration;
  run["dt_s"] = sc.run.dt;
  run["mechanical_dt_s"] = res.trajectory.dt;
  run["q_factor"] =
      std::isfinite(sc.run.q_factor) ? ordered_json(sc.run.q_factor) : ordered_json("inf");
  run["analysis_periods"] = sc.run.analysis_periods;
}

Report run_qswitch_kind(const Scenario& sc) {
  Report r;
  r.summary = base_summary(sc);
  ordered_json flags = ordered_json::array();
  add_bridge_flags(flags, *sc.bridge);
  const LaserArm& arm = sc.arms.front();
  const QSwitchResult res = run_qswitch(to_qswitch(sc, arm));
  if (!res.stats) no_pulses("");

  add_run_inputs(r.summary, sc, res);
  r.summary["inputs"]["coupling"] = coupling_json(res.coupling);
  r.summary["inputs"]["laser"] = laser_json(arm.laser);
  ordered_json out = lumped_json(res.lumped, res.pull_in, *sc.bridge);
  out["metrics"] = metrics_json(trajectory_metrics(res.trajectory));
  out["laser"] = stats_json(*res.stats, res.cw, res.drive.frequency);
  check_power(flags, *res.stats, sc.run, "");
  r.summary["results"] = std::move(out);
  r.summary["flags"] = std::move(flags);

  const auto stride = static_cast<std::size_t>(sc.run.trace_stride);
  r.files.emplace_back("trajectory.csv", trajectory_csv(res.trajectory, stride));
  r.files.emplace_back("schedule.csv", schedule_csv(res.schedule, stride));
  r.files.emplace_back("power.csv", power_trace_csv(res.trace, stride));
  r.files.emplace_back("pulses.csv", pulses_csv(*res.stats));
  return r;
}

Report run_dual_kind(const Scenario& sc, int jobs) {
  Report r;
  r.summary = base_summary(sc);
  ordered_json flags = ordered_json::array();
  add_bridge_flags(flags, *sc.bridge);
  const DualScenarioResult res = run_dual(to_dual(sc), std::max(1, std::min(jobs, 2)));
  const QSwitchResult* arms[2] = {&res.arm_a, &res.arm_b};
  for (int i = 0; i < 2; ++i)
    if (!arms[i]->stats) no_pulses(sc.arms[static_cast<std::size_t>(i)].label);

  add_run_inputs(r.summary, sc, res.arm_a);
  ordered_json in_arms = ordered_json::array();
  ordered_json out_arms = ordered_json::array();
  const auto stride = static_cast<std::size_t>(sc.run.trace_stride);
  for (std::size_t i = 0; i < 2; ++i) {
    const LaserArm& arm = sc.arms[i];
    const QSwitchResult& a = *arms[i];
    in_arms.push_back({{"label", arm.label},
                       {"coupling", coupling_json(a.coupling)},
                       {"laser", laser_json(arm.laser)}});
    ordered_json stats = stats_json(*a.stats, a.cw, a.drive.frequency);
    ordered_json entry = {{"label", arm.label}};
    for (auto& [k, v] : stats.items()) entry[k] = v;
    out_arms.push_back(std::move(entry));
    check_power(flags, *a.stats, sc.run, arm.label + ".");
    r.files.emplace_back("schedule_" + arm.label + ".csv", schedule_csv(a.schedule, stride));
    r.files.emplace_back("power_" + arm.label + ".csv", power_trace_csv(a.trace, stride));
    r.files.emplace_back("pulses_" + arm.label + ".csv", pulses_csv(*a.stats));
  }
  r.files.insert(r.files.begin(), {"trajectory.csv", trajectory_csv(res.arm_a.trajectory, stride)});
  r.summary["inputs"]["arms"] = std::move(in_arms);

  ordered_json out = lumped_json(res.arm_a.lumped, res.arm_a.pull_in, *sc.bridge);
  out["metrics"] = metrics_json(trajectory_metrics(res.arm_a.trajectory));
  out["arms"] = std::move(out_arms);
  out["period_s"] = res.period;
  if (res.peak_offset) {
    out["sync_offset_s"] = *res.peak_offset;
    out["sync_offset_fraction"] = *res.peak_offset / res.period;
  } else {
    out["sync_offset_s"] = nullptr;
    out["sync_offset_fraction"] = nullptr;
  }
  r.summary["results"] = std::move(out);
  r.summary["flags"] = std::move(flags);
  return r;
}

}  // namespace

QSwitchScenario to_qswitch(const Scenario& sc, const LaserArm& arm) {
  if (!sc.bridge || !sc.drive) throw std::invalid_argument("laser scenarios need a bridge and drive");
  QSwitchScenario q;
  q.bridge = *sc.bridge;
  q.material = sc.material;
  q.substrate = sc.substrate;
  q.temperature = sc.run.temperature;
  q.basis_size = sc.run.basis_size;
  q.drive = sc.drive->bridge_drive();
  q.q_factor = sc.run.q_factor;
  q.mechanical_dt = sc.run.mechanical_dt;
  q.coupling = arm.coupling;
  q.laser = arm.laser;
  q.duration = sc.run.duration;
  q.laser_dt = sc.run.dt;
  q.analysis_periods = sc.run.analysis_periods;
  return q;
}

DualScenario to_dual(const Scenario& sc) {
  if (sc.arms.size() != 2) throw std::invalid_argument("dual scenarios need two arms");
  DualScenario d;
  d.arm_a = to_qswitch(sc, sc.arms[0]);
  d.coupling_b = sc.arms[1].coupling;
  d.laser_b = sc.arms[1].laser;
  return d;
}

Report run_scenario(const Scenario& scenario, int jobs) {
  switch (scenario.kind) {
    case Kind::modal: return run_modal(scenario);
    case Kind::pullin: return run_pullin(scenario);
    case Kind::transient: return run_transient(scenario);
    case Kind::cantilever: return run_cantilever(scenario);
    case Kind::qswitch: return run_qswitch_kind(scenario);
    case Kind::dual: return run_dual_kind(scenario, jobs);
  }
  throw std::invalid_argument("unknown scenario kind");
}

}  // namespace moems::cli
