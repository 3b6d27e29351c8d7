#include "moems/cli/scenario.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "moems/cli/units.hpp"
#include "moems/optics.hpp"
#include "moems/presets.hpp"

namespace moems::cli {

SchemaError::SchemaError(std::string path, int line, const std::string& message)
    : std::runtime_error(path + (line > 0 ? " (line " + std::to_string(line) + ")" : "") + ": " +
                         message),
      path_(std::move(path)),
      line_(line) {}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::modal: return "modal";
    case Kind::pullin: return "pullin";
    case Kind::transient: return "transient";
    case Kind::cantilever: return "cantilever";
    case Kind::qswitch: return "qswitch";
    case Kind::dual: return "dual";
  }
  return "unknown";
}

std::optional<Kind> parse_kind(std::string_view name) {
  for (Kind k : {Kind::modal, Kind::pullin, Kind::transient, Kind::cantilever, Kind::qswitch,
                 Kind::dual})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

DriveWaveform DriveSpec::resolve(double pull_in) const {
  DriveWaveform w = waveform;
  if (v_on_over_pull_in) w.v_on = *v_on_over_pull_in * pull_in;
  if (off_time) w.duty = 1.0 - *off_time * w.frequency;
  w.validate();
  return w;
}

BridgeDrive DriveSpec::bridge_drive() const {
  BridgeDrive d;
  d.frequency = waveform.frequency;
  d.v_on = waveform.v_on;
  d.v_on_over_pull_in = v_on_over_pull_in.value_or(0.0);
  d.v_off = waveform.v_off;
  d.off_time = off_time;
  d.duty = waveform.duty;
  d.rise_time = waveform.rise_time;
  return d;
}

namespace {

int line_of(const YAML::Node& n) {
  const YAML::Mark m = n.Mark();
  return m.is_null() ? 0 : m.line + 1;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

// Mapping reader that remembers which keys were used so leftovers can be
// reported as unknown fields.
class Section {
 public:
  Section(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {
    if (!node_.IsMap()) fail_here("expected a mapping");
  }

  const std::string& path() const { return path_; }
  int line() const { return line_of(node_); }

  bool has(const std::string& key) const { return static_cast<bool>(node_[key]); }

  YAML::Node raw(const std::string& key) {
    used_.insert(key);
    return node_[key];
  }

  [[noreturn]] void fail(const std::string& key, const std::string& message) const {
    const YAML::Node n = node_[key];
    throw SchemaError(join(path_, key), n ? line_of(n) : line(), message);
  }
  [[noreturn]] void fail_here(const std::string& message) const {
    throw SchemaError(path_.empty() ? "<root>" : path_, line_of(node_), message);
  }

  std::string text(const std::string& key) {
    const YAML::Node n = require(key);
    if (!n.IsScalar()) fail(key, "expected a scalar");
    return n.Scalar();
  }
  std::optional<std::string> optional_text(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return text(key);
  }

  double quantity(const std::string& key, Dimension dim) {
    const std::string s = text(key);
    try {
      return parse_as(s, dim);
    } catch (const UnitError& e) {
      fail(key, e.what());
    }
  }
  double quantity_or(const std::string& key, Dimension dim, double fallback) {
    return has(key) ? quantity(key, dim) : fallback;
  }
  std::optional<double> optional_quantity(const std::string& key, Dimension dim) {
    if (!has(key)) return std::nullopt;
    return quantity(key, dim);
  }

  double number(const std::string& key) { return quantity(key, Dimension::dimensionless); }
  double number_or(const std::string& key, double fallback) {
    return has(key) ? number(key) : fallback;
  }

  int integer_or(const std::string& key, int fallback) {
    if (!has(key)) return fallback;
    const double v = number(key);
    if (v != std::floor(v) || std::abs(v) > 1e9) fail(key, "expected an integer");
    return static_cast<int>(v);
  }

  bool flag_or(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const YAML::Node n = raw(key);
    try {
      return n.as<bool>();
    } catch (const YAML::Exception&) {
      fail(key, "expected true or false");
    }
  }

  Section child(const std::string& key) {
    const YAML::Node n = require(key);
    return Section(n, join(path_, key));
  }

  void finish() const {
    for (const auto& kv : node_) {
      const std::string key = kv.first.Scalar();
      if (!used_.count(key)) throw SchemaError(join(path_, key), line_of(kv.first), "unknown field");
    }
  }

 private:
  YAML::Node require(const std::string& key) {
    used_.insert(key);
    const YAML::Node n = node_[key];
    if (!n || n.IsNull()) throw SchemaError(join(path_, key), line(), "missing required field");
    return n;
  }

  YAML::Node node_;
  std::string path_;
  std::set<std::string> used_;
};

MaterialProps parse_material(const YAML::Node& node, const std::string& path) {
  if (node.IsScalar()) {
    if (auto m = material_preset(node.Scalar())) return *m;
    throw SchemaError(path, line_of(node), "unknown material preset '" + node.Scalar() + "'");
  }
  Section s(node, path);
  MaterialProps m;
  bool from_preset = false;
  if (auto name = s.optional_text("preset")) {
    auto p = material_preset(*name);
    if (!p) s.fail("preset", "unknown material preset '" + *name + "'");
    m = *p;
    from_preset = true;
  }
  auto field = [&](const std::string& key, Dimension dim, double& target) {
    if (from_preset && !s.has(key)) return;
    target = s.quantity(key, dim);
  };
  if (auto name = s.optional_text("name")) m.name = *name;
  field("youngs_modulus", Dimension::pressure, m.youngs_modulus);
  field("cte", Dimension::per_kelvin, m.cte);
  field("poisson", Dimension::dimensionless, m.poisson);
  field("density", Dimension::density, m.density);
  field("builtin_stress", Dimension::pressure, m.builtin_stress);
  m.ref_temperature = s.quantity_or("ref_temperature", Dimension::temperature, m.ref_temperature);
  s.finish();
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    s.fail_here(e.what());
  }
  return m;
}

SubstrateProps parse_substrate(const YAML::Node& node, const std::string& path) {
  if (!node) return silicon();
  if (node.IsScalar()) {
    if (auto m = substrate_preset(node.Scalar())) return *m;
    throw SchemaError(path, line_of(node), "unknown substrate preset '" + node.Scalar() + "'");
  }
  Section s(node, path);
  SubstrateProps sub;
  sub.name = s.optional_text("name").value_or("custom");
  sub.cte = s.quantity("cte", Dimension::per_kelvin);
  s.finish();
  return sub;
}

BridgeGeometry parse_bridge(Section& s) {
  BridgeGeometry g;
  g.length = s.quantity("length", Dimension::length);
  g.width = s.quantity("width", Dimension::length);
  g.thickness = s.quantity("thickness", Dimension::length);
  g.gap = s.quantity("gap", Dimension::length);
  g.dielectric_thickness = s.quantity_or("dielectric_thickness", Dimension::length, 200e-9);
  g.dielectric_rel_permittivity = s.number_or("dielectric_rel_permittivity", 9.0);
  s.finish();
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    s.fail_here(e.what());
  }
  return g;
}

CantileverSettings parse_cantilever(Section& s, const MaterialProps& material) {
  CantileverSettings c;
  auto& g = c.geometry;
  g.length = s.quantity("length", Dimension::length);
  g.root_width = s.quantity("root_width", Dimension::length);
  g.tip_width = s.quantity_or("tip_width", Dimension::length, g.root_width);
  g.structural_thickness = s.quantity("structural_thickness", Dimension::length);
  g.stress_layer_thickness = s.quantity("stress_layer_thickness", Dimension::length);
  g.air_gap = s.quantity("air_gap", Dimension::length);
  g.dielectric_thickness = s.quantity_or("dielectric_thickness", Dimension::length, 1e-6);
  g.dielectric_rel_permittivity = s.number_or("dielectric_rel_permittivity", 3.9);
  g.stiffening_factor = s.number_or("stiffening_factor", 1.0);
  const bool has_stress = s.has("stress_layer_stress");
  const bool has_radius = s.has("radius");
  if (has_stress == has_radius)
    s.fail_here("give exactly one of stress_layer_stress or radius");
  if (has_stress) {
    g.stress_layer_stress = s.quantity("stress_layer_stress", Dimension::pressure);
  } else {
    c.radius = s.quantity("radius", Dimension::length);
    if (!(*c.radius > 0.0)) s.fail("radius", "radius must be positive");
    g.stress_layer_stress = stress_for_radius(g, material, *c.radius);
  }
  s.finish();
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    s.fail_here(e.what());
  }
  return c;
}

DriveSpec parse_drive(Section& s) {
  DriveSpec d;
  auto& w = d.waveform;
  const std::string kind = s.text("kind");
  if (kind == "square")
    w.kind = DriveWaveform::Kind::square;
  else if (kind == "constant")
    w.kind = DriveWaveform::Kind::constant;
  else if (kind == "sampled")
    w.kind = DriveWaveform::Kind::sampled;
  else
    s.fail("kind", "expected square, constant or sampled");

  if (w.kind != DriveWaveform::Kind::sampled) {
    const std::string von = s.text("v_on");
    const auto pos = von.find("Vpi");
    if (pos != std::string::npos && pos + 3 == von.size()) {
      try {
        d.v_on_over_pull_in = parse_as(von.substr(0, pos), Dimension::dimensionless);
      } catch (const UnitError& e) {
        s.fail("v_on", e.what());
      }
      if (!(*d.v_on_over_pull_in >= 0.0)) s.fail("v_on", "relative drive must be >= 0");
    } else {
      w.v_on = s.quantity("v_on", Dimension::voltage);
    }
  }
  if (w.kind == DriveWaveform::Kind::square) {
    w.frequency = s.quantity("frequency", Dimension::frequency);
    w.v_off = s.quantity_or("v_off", Dimension::voltage, 0.0);
    w.rise_time = s.quantity_or("rise_time", Dimension::time, 0.0);
    if (s.has("duty") && s.has("off_time")) s.fail_here("give duty or off_time, not both");
    if (s.has("off_time")) {
      d.off_time = s.quantity("off_time", Dimension::time);
      w.duty = 1.0 - *d.off_time * w.frequency;
    } else {
      w.duty = s.number_or("duty", 0.5);
    }
  }
  if (w.kind == DriveWaveform::Kind::sampled) {
    const YAML::Node list = s.raw("samples");
    const std::string path = join(s.path(), "samples");
    if (!list || !list.IsSequence() || list.size() == 0)
      throw SchemaError(path, s.line(), "expected a non-empty list of [time, voltage] pairs");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const YAML::Node pair = list[i];
      const std::string ipath = path + "[" + std::to_string(i) + "]";
      if (!pair.IsSequence() || pair.size() != 2)
        throw SchemaError(ipath, line_of(pair), "expected [time, voltage]");
      try {
        w.samples.emplace_back(parse_as(pair[0].Scalar(), Dimension::time),
                               parse_as(pair[1].Scalar(), Dimension::voltage));
      } catch (const UnitError& e) {
        throw SchemaError(ipath, line_of(pair), e.what());
      }
    }
    w.v_on = 0.0;
    for (const auto& p : w.samples) w.v_on = std::max(w.v_on, p.second);
  }
  s.finish();
  if (!d.v_on_over_pull_in) {
    try {
      w.validate();
    } catch (const std::invalid_argument& e) {
      s.fail_here(e.what());
    }
  }
  return d;
}

CouplingModel parse_coupling(const YAML::Node& node, const std::string& path, double gap) {
  Section s(node, path);
  CouplingModel c;
  if (auto name = s.optional_text("preset")) {
    if (*name == "erbium_imaged")
      c = presets::erbium_imaged_coupling();
    else if (*name == "erbium_no_imaging")
      c = presets::erbium_no_imaging_coupling();
    else if (*name == "ytterbium")
      c = presets::ytterbium_coupling();
    else
      s.fail("preset", "unknown coupling preset '" + *name + "'");
  }
  c.wavelength = s.quantity_or("wavelength", Dimension::length, c.wavelength);
  c.mode_field_radius = s.quantity_or("mode_field_radius", Dimension::length, c.mode_field_radius);
  c.magnification = s.number_or("magnification", c.magnification);
  c.base_reflectivity = s.number_or("base_reflectivity", c.base_reflectivity);
  if (s.has("tilt_at_full_gap") && s.has("tilt_per_displacement"))
    s.fail_here("give tilt_at_full_gap or tilt_per_displacement, not both");
  if (s.has("tilt_at_full_gap")) {
    const double tilt = s.quantity("tilt_at_full_gap", Dimension::angle);
    if (!(gap > 0.0)) s.fail("tilt_at_full_gap", "needs a bridge device");
    c.tilt_per_displacement = tilt / gap;
  } else {
    c.tilt_per_displacement =
        s.quantity_or("tilt_per_displacement", Dimension::angle_per_length, 0.0);
  }
  c.lateral_loss_scale = s.quantity_or("lateral_loss_scale", Dimension::length, 0.0);
  c.inverted = s.flag_or("inverted", false);
  s.finish();
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    s.fail_here(e.what());
  }
  return c;
}

LaserParams parse_laser(const YAML::Node& node, const std::string& path) {
  Section s(node, path);
  LaserParams p;
  bool from_preset = false;
  if (auto name = s.optional_text("preset")) {
    if (*name == "erbium")
      p = presets::erbium_laser();
    else if (*name == "erbium_dual")
      p = presets::erbium_dual_laser();
    else if (*name == "ytterbium")
      p = presets::ytterbium_laser();
    else
      s.fail("preset", "unknown laser preset '" + *name + "'");
    from_preset = true;
  }
  auto field = [&](const std::string& key, Dimension dim, double& target) {
    if (from_preset && !s.has(key)) return;
    target = s.quantity(key, dim);
  };
  field("upper_state_lifetime", Dimension::time, p.upper_state_lifetime);
  field("round_trip_time", Dimension::time, p.round_trip_time);
  field("round_trip_gain_coeff", Dimension::dimensionless, p.round_trip_gain_coeff);
  field("pump_rate", Dimension::rate, p.pump_rate);
  p.output_coupler_reflectivity =
      s.number_or("output_coupler_reflectivity", p.output_coupler_reflectivity);
  field("intrinsic_loss", Dimension::dimensionless, p.intrinsic_loss);
  field("spontaneous_seed", Dimension::rate, p.spontaneous_seed);
  p.label_wavelength = s.quantity_or("wavelength", Dimension::length, p.label_wavelength);
  if (s.has("ions") && s.has("saturation_scale"))
    s.fail_here("give ions or saturation_scale, not both");
  if (s.has("ions")) {
    const double ions = s.number("ions");
    if (!(ions > 0.0)) s.fail("ions", "ion count must be positive");
    p.saturation_scale = saturation_scale_for_ions(p.round_trip_gain_coeff, p.round_trip_time, ions);
  } else if (s.has("saturation_scale")) {
    p.saturation_scale = s.quantity("saturation_scale", Dimension::rate);
  } else if (!from_preset) {
    s.fail_here("missing required field: ions or saturation_scale");
  } else if (s.has("round_trip_gain_coeff") || s.has("round_trip_time")) {
    s.fail_here("overriding gain or round-trip time needs ions or saturation_scale");
  }
  s.finish();
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    s.fail_here(e.what());
  }
  return p;
}

RunSettings parse_run(const YAML::Node& node, Kind kind, CantileverSettings* cant) {
  RunSettings r;
  if (!node) {
    if (kind == Kind::transient || kind == Kind::qswitch || kind == Kind::dual)
      throw SchemaError("run", 0, "missing required section");
    return r;
  }
  Section s(node, "run");
  r.temperature = s.quantity_or("temperature", Dimension::temperature, r.temperature);
  if (!(r.temperature > 0.0)) s.fail("temperature", "temperature must be positive");
  const bool timed = kind == Kind::transient || kind == Kind::qswitch || kind == Kind::dual;
  if (timed) {
    r.duration = s.quantity("duration", Dimension::time);
    if (!(r.duration > 0.0)) s.fail("duration", "duration must be positive");
  }
  r.dt = s.quantity_or("dt", Dimension::time, r.dt);
  if (s.has("mechanical_dt")) {
    const std::string v = s.text("mechanical_dt");
    if (v != "auto") r.mechanical_dt = s.quantity("mechanical_dt", Dimension::time);
  }
  r.basis_size = s.integer_or("basis_size", r.basis_size);
  if (r.basis_size < 1 || r.basis_size > kMaxBasisSize)
    s.fail("basis_size", "basis size must be in [1, " + std::to_string(kMaxBasisSize) + "]");
  r.analysis_periods = s.integer_or("analysis_periods", r.analysis_periods);
  if (r.analysis_periods < 1) s.fail("analysis_periods", "must be >= 1");
  r.trace_stride = s.integer_or("trace_stride", r.trace_stride);
  if (r.trace_stride < 1) s.fail("trace_stride", "must be >= 1");
  r.mean_power_limit = s.optional_quantity("mean_power_limit", Dimension::power);
  if (s.has("q_factor")) {
    const std::string q = s.text("q_factor");
    r.q_factor = q == "inf" ? std::numeric_limits<double>::infinity() : s.number("q_factor");
    if (!(r.q_factor > 0.0)) s.fail("q_factor", "Q must be positive");
  }
  r.stiffness = s.optional_quantity("stiffness", Dimension::stiffness);
  if (r.stiffness && !(*r.stiffness > 0.0)) s.fail("stiffness", "stiffness must be positive");
  if (cant) {
    cant->profile_points = s.integer_or("profile_points", cant->profile_points);
    if (cant->profile_points < 2) s.fail("profile_points", "must be >= 2");
    cant->pulldown = s.flag_or("pulldown", cant->pulldown);
  }
  s.finish();
  return r;
}

}  // namespace

Scenario parse_scenario(const YAML::Node& root_node, std::optional<Kind> forced) {
  Section root(root_node, "");
  Scenario sc;
  if (root.has("schema")) {
    const int v = root.integer_or("schema", kSchemaVersion);
    if (v != kSchemaVersion)
      root.fail("schema", "unsupported schema version " + std::to_string(v));
  }
  if (root.has("kind")) {
    const std::string k = root.text("kind");
    auto parsed = parse_kind(k);
    if (!parsed) root.fail("kind", "unknown scenario kind '" + k + "'");
    sc.kind = *parsed;
    if (forced && *forced != sc.kind)
      root.fail("kind", "config is a '" + k + "' scenario, expected '" +
                            std::string(to_string(*forced)) + "'");
  } else if (!forced) {
    root.fail_here("missing required field 'kind'");
  } else {
    sc.kind = *forced;
  }
  sc.name = root.optional_text("name").value_or(std::string(to_string(sc.kind)));

  const YAML::Node mat = root.raw("material");
  if (!mat) throw SchemaError("material", root.line(), "missing required field");
  sc.material = parse_material(mat, "material");
  sc.substrate = parse_substrate(root.raw("substrate"), "substrate");

  Section device = root.child("device");
  const std::string type = device.text("type");
  if (type == "bridge") {
    sc.bridge = parse_bridge(device);
  } else if (type == "cantilever") {
    sc.cantilever = parse_cantilever(device, sc.material);
  } else {
    device.fail("type", "expected bridge or cantilever");
  }
  const bool needs_bridge = sc.kind != Kind::cantilever;
  if (needs_bridge && !sc.bridge)
    device.fail("type", std::string(to_string(sc.kind)) + " scenarios need a bridge device");
  if (!needs_bridge && !sc.cantilever)
    device.fail("type", "cantilever scenarios need a cantilever device");

  const bool driven = sc.kind == Kind::transient || sc.kind == Kind::qswitch || sc.kind == Kind::dual;
  if (driven) {
    Section drive = root.child("drive");
    sc.drive = parse_drive(drive);
    if (sc.kind != Kind::transient && sc.drive->waveform.kind != DriveWaveform::Kind::square)
      drive.fail("kind", "laser scenarios need a square drive");
  } else if (root.has("drive")) {
    root.raw("drive");
  }

  const double gap = sc.bridge ? sc.bridge->gap : 0.0;
  if (sc.kind == Kind::qswitch) {
    LaserArm arm;
    arm.label = "laser";
    const YAML::Node c = root.raw("coupling");
    const YAML::Node l = root.raw("laser");
    if (!c) throw SchemaError("coupling", root.line(), "missing required field");
    if (!l) throw SchemaError("laser", root.line(), "missing required field");
    arm.coupling = parse_coupling(c, "coupling", gap);
    arm.laser = parse_laser(l, "laser");
    sc.arms.push_back(std::move(arm));
  } else if (sc.kind == Kind::dual) {
    const YAML::Node arms = root.raw("arms");
    if (!arms || !arms.IsSequence() || arms.size() != 2)
      throw SchemaError("arms", arms ? line_of(arms) : root.line(),
                        "expected a list of exactly two arms");
    for (std::size_t i = 0; i < 2; ++i) {
      const std::string path = "arms[" + std::to_string(i) + "]";
      Section a(arms[i], path);
      LaserArm arm;
      arm.label = a.optional_text("label").value_or(i == 0 ? "a" : "b");
      if (!a.has("coupling")) a.fail("coupling", "missing required field");
      if (!a.has("laser")) a.fail("laser", "missing required field");
      arm.coupling = parse_coupling(a.raw("coupling"), path + ".coupling", gap);
      arm.laser = parse_laser(a.raw("laser"), path + ".laser");
      a.finish();
      sc.arms.push_back(std::move(arm));
    }
    if (sc.arms[0].label == sc.arms[1].label)
      throw SchemaError("arms", line_of(arms), "arm labels must differ");
  }

  sc.run = parse_run(root.raw("run"), sc.kind, sc.cantilever ? &*sc.cantilever : nullptr);
  root.finish();
  return sc;
}

YAML::Node load_yaml(const std::filesystem::path& path) {
  try {
    return YAML::LoadFile(path.string());
  } catch (const YAML::BadFile&) {
    throw IoError("cannot read config " + path.string());
  } catch (const YAML::ParserException& e) {
    throw SchemaError("<root>", e.mark.line + 1, e.msg);
  }
}

SweepSpec parse_sweep(const YAML::Node& root_node) {
  Section root(root_node, "");
  if (root.has("schema")) {
    const int v = root.integer_or("schema", kSchemaVersion);
    if (v != kSchemaVersion)
      root.fail("schema", "unsupported schema version " + std::to_string(v));
  }
  if (root.has("kind") && root.text("kind") != "sweep") root.fail("kind", "expected 'sweep'");
  if (root.has("name")) root.raw("name");
  SweepSpec spec;
  spec.base = root.raw("base");
  if (!spec.base || !spec.base.IsMap())
    throw SchemaError("base", root.line(), "missing scenario mapping");
  spec.axis = root.text("axis");
  const bool has_values = root.has("values");
  const bool has_range = root.has("range");
  if (has_values == has_range) root.fail_here("give exactly one of values or range");
  if (has_values) {
    const YAML::Node v = root.raw("values");
    if (!v.IsSequence() || v.size() == 0)
      throw SchemaError("values", line_of(v), "expected a non-empty list");
    for (const auto& item : v) {
      if (!item.IsScalar()) throw SchemaError("values", line_of(item), "expected scalars");
      spec.values.push_back(item.Scalar());
    }
  } else {
    Section range = root.child("range");
    const std::string from = range.text("from");
    const std::string to = range.text("to");
    const int steps = range.integer_or("steps", 2);
    if (steps < 1) range.fail("steps", "must be >= 1");
    auto split = [&](const std::string& text) {
      double v = 0.0;
      const char* b = text.data();
      const auto res = std::from_chars(b, b + text.size(), v);
      if (res.ec != std::errc() || res.ptr == b)
        range.fail_here("expected a number with unit, got '" + text + "'");
      std::string unit(res.ptr, b + text.size());
      while (!unit.empty() && unit.front() == ' ') unit.erase(unit.begin());
      return std::pair{v, unit};
    };
    const auto [a, unit] = split(from);
    const auto [b, unit_to] = split(to);
    if (unit != unit_to) range.fail_here("from and to must use the same unit");
    try {
      parse_quantity(from);
    } catch (const UnitError& e) {
      range.fail("from", e.what());
    }
    range.finish();
    for (int i = 0; i < steps; ++i) {
      const double v = steps == 1 ? a : a + (b - a) * i / (steps - 1);
      std::ostringstream os;
      os.precision(15);
      os << v << (unit.empty() ? "" : " ") << unit;
      spec.values.push_back(os.str());
    }
  }
  if (root.has("outputs")) {
    const YAML::Node o = root.raw("outputs");
    if (!o.IsSequence()) throw SchemaError("outputs", line_of(o), "expected a list");
    for (const auto& item : o) spec.outputs.push_back(item.Scalar());
  }
  root.finish();
  return spec;
}

YAML::Node with_override(const YAML::Node& base, const std::string& dotted_path,
                         const std::string& value) {
  YAML::Node copy = YAML::Clone(base);
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(dotted_path);
  while (std::getline(in, part, '.')) parts.push_back(part);
  if (parts.empty()) throw SchemaError("axis", 0, "empty axis path");

  YAML::Node cur = copy;
  std::string walked;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    walked = join(walked, parts[i]);
    YAML::Node next = cur[parts[i]];
    if (!next || !next.IsMap())
      throw SchemaError("axis", 0, "'" + walked + "' is not a mapping in the base scenario");
    cur.reset(next);
  }
  YAML::Node leaf = cur[parts.back()];
  if (leaf && !leaf.IsScalar())
    throw SchemaError("axis", 0, "'" + dotted_path + "' does not name a scalar field");
  cur[parts.back()] = value;
  return copy;
}

}  // namespace moems::cli
