#include "moems/cli/app.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "moems/cli/presets.hpp"
#include "moems/cli/report.hpp"
#include "moems/cli/runner.hpp"
#include "moems/cli/scenario.hpp"
#include "moems/cli/sweep.hpp"
#include "moems/cli/units.hpp"
#include "moems/errors.hpp"

namespace moems::cli {

namespace {
using nlohmann::ordered_json;

constexpr int kExitSchema = 2;
constexpr int kExitPhysics = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string config;
  std::string preset;
  std::string out = "moems-out";
  std::string format = "json";
  int jobs = 1;
};

void diagnose(ordered_json diag) {
  std::cerr << diag.dump() << '\n';
}

YAML::Node load_input(const Options& opt) {
  if (!opt.preset.empty()) {
    const ShippedPreset* p = find_preset(opt.preset);
    if (!p) throw SchemaError("--preset", 0, "unknown preset '" + opt.preset + "'");
    return YAML::Load(std::string(p->yaml));
  }
  if (opt.config.empty()) throw SchemaError("--config", 0, "give --config or --preset");
  return load_yaml(opt.config);
}

bool is_sweep(const YAML::Node& root) {
  return root.IsMap() && root["kind"] && root["kind"].IsScalar() &&
         root["kind"].Scalar() == "sweep";
}

void print_written(const std::vector<std::filesystem::path>& paths) {
  for (const auto& p : paths) std::cout << p.string() << '\n';
}

void run_one(const Options& opt, std::optional<Kind> forced, bool allow_sweep) {
  const Format format = *parse_format(opt.format);
  const YAML::Node root = load_input(opt);
  if (is_sweep(root) || (forced == std::nullopt && allow_sweep && root["axis"])) {
    if (!allow_sweep) throw SchemaError("kind", 0, "sweep configs run with 'moems sweep'");
    const SweepResult result = run_sweep(parse_sweep(root), opt.jobs);
    std::error_code ec;
    std::filesystem::create_directories(opt.out, ec);
    if (ec) throw IoError("cannot create output directory " + opt.out + ": " + ec.message());
    const auto path = std::filesystem::path(opt.out) /
                      (format == Format::json ? "sweep.json" : "sweep.csv");
    write_text(path, format == Format::json ? summary_text(sweep_json(result))
                                            : sweep_table_csv(result));
    print_written({path});
    return;
  }
  const Scenario sc = parse_scenario(root, forced);
  const Report report = run_scenario(sc, opt.jobs);
  print_written(write_report(report, opt.out, format));
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config, "Scenario or sweep file (YAML)");
  cmd->add_option("--preset", opt.preset, "Run a shipped preset by name");
  cmd->add_option("--out", opt.out, "Output directory")->capture_default_str();
  cmd->add_option("--format", opt.format, "Summary format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
}

}  // namespace

int run_app(int argc, const char* const* argv) {
  CLI::App app{"Electrostatic micro-mirror and Q-switched fiber laser simulator", "moems"};
  app.require_subcommand(0, 1);
  Options opt;
  std::string seed_dir;
  app.add_option("--seed-presets", seed_dir, "Write the shipped preset files into DIR")
      ->type_name("DIR");
  bool list = false;
  app.add_flag("--list-presets", list, "List shipped preset names");

  struct Sub {
    const char* name;
    const char* help;
    std::optional<Kind> kind;
  };
  const Sub subs[] = {
      {"modal", "Fundamental frequency of a bridge", Kind::modal},
      {"pullin", "Lumped stiffness and pull-in voltage", Kind::pullin},
      {"transient", "Driven membrane trajectory", Kind::transient},
      {"cantilever", "Curled cantilever profile, frequency and pulldown", Kind::cantilever},
      {"qswitch", "Bridge-modulated Q-switched laser", Kind::qswitch},
      {"dual", "Two laser cavities sharing one bridge", Kind::dual},
      {"sweep", "Sweep one scenario field", std::nullopt},
      {"run", "Run any scenario or sweep file", std::nullopt},
  };
  std::vector<CLI::App*> commands;
  for (const auto& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    add_common(cmd, opt);
    commands.push_back(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (list) {
      for (const auto& p : shipped_presets()) std::cout << p.name << '\n';
      return 0;
    }
    if (!seed_dir.empty()) {
      print_written(seed_presets(seed_dir));
      if (app.get_subcommands().empty()) return 0;
    }
    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (!commands[i]->parsed()) continue;
      const std::string name = subs[i].name;
      if (name == "sweep") {
        const YAML::Node root = load_input(opt);
        if (!is_sweep(root) && !root["axis"])
          throw SchemaError("kind", 0, "expected a sweep config (kind: sweep)");
      }
      run_one(opt, subs[i].kind, subs[i].kind == std::nullopt);
      return 0;
    }
    std::cerr << app.help();
    return 1;
  } catch (const SchemaError& e) {
    diagnose({{"error", "schema"}, {"path", e.path()}, {"line", e.line()}, {"message", e.what()}});
    return kExitSchema;
  } catch (const UnitError& e) {
    diagnose({{"error", "schema"}, {"message", e.what()}});
    return kExitSchema;
  } catch (const moems::SimulationError& e) {
    diagnose({{"error", "physics"},
              {"kind", std::string(moems::to_string(e.kind()))},
              {"message", e.what()}});
    return kExitPhysics;
  } catch (const IoError& e) {
    diagnose({{"error", "io"}, {"message", e.what()}});
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    diagnose({{"error", "invalid"}, {"message", e.what()}});
    return kExitSchema;
  } catch (const YAML::Exception& e) {
    diagnose({{"error", "schema"}, {"line", e.mark.line + 1}, {"message", e.msg}});
    return kExitSchema;
  } catch (const std::exception& e) {
    diagnose({{"error", "internal"}, {"message", e.what()}});
    return 1;
  }
}

}  // namespace moems::cli
