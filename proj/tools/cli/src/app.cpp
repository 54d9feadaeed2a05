#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "weylbrane/cli/commands.hpp"
#include "weylbrane/errors.hpp"

namespace weylbrane::cli {

std::filesystem::path write_output(const std::filesystem::path& dir, const std::string& name,
                                   const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto path = dir / name;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << content;
  f.close();
  if (!f) throw ConfigError("error while writing " + path.string());
  return path;
}

namespace {

struct Overrides {
  std::string config_path;
  std::map<std::string, std::string> values;
};

void add_key_options(CLI::App* cmd, Overrides& o, const std::vector<std::string>& keys) {
  for (const auto& key : keys) {
    cmd->add_option("--" + key, o.values[key], "override '" + key + "'");
  }
}

// File first, then flags in key order; only flags actually given override.
template <class Target>
void load(Target& target, const Overrides& o, CLI::App* cmd) {
  if (!o.config_path.empty()) {
    for (const auto& [k, v] : read_config_file(o.config_path)) apply_setting(target, k, v);
  }
  for (const auto& [k, v] : o.values) {
    if (cmd->count("--" + k) > 0) apply_setting(target, k, v);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-law braneworld toolkit for 5D integrable Weyl gravity", "weylbrane"};
  app.require_subcommand(1);

  ValidateOptions vopts;
  auto* validate = app.add_subcommand("validate", "Run the curvature-engine golden checks");
  validate->add_flag("--flip-riemann-sign", vopts.flip_riemann_sign,
                     "Negate the curvature sign convention (negative control; checks must fail)");

  Overrides brane_o, audit_o, sweep_o;
  auto* brane = app.add_subcommand("brane", "Effective brane fluid over the time grid -> brane.csv");
  auto* audit = app.add_subcommand("audit", "Field-equation residual audit -> audit.csv");
  auto* sweep = app.add_subcommand("sweep", "Admissibility sweep over p -> sweep.csv");
  for (auto [cmd, o] : {std::pair{brane, &brane_o}, {audit, &audit_o}, {sweep, &sweep_o}}) {
    cmd->add_option("--config", o->config_path, "key = value configuration file");
    add_key_options(cmd, *o, scenario_keys());
  }
  add_key_options(sweep, sweep_o, sweep_keys());

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*validate) {
      const auto results = run_golden_checks(vopts);
      out << render_validate(results);
      for (const auto& r : results)
        if (!r.passed) return kCheckFailed;
      return kOk;
    }
    if (*sweep) {
      SweepSpec spec;
      load(spec, sweep_o, sweep);
      const CommandOutput r = render_sweep(spec);
      const auto path = write_output(spec.base.output, "sweep.csv", r.csv);
      out << r.summary << "wrote " << path.string() << "\n";
      return kOk;
    }
    ScenarioConfig config;
    const bool is_brane = static_cast<bool>(*brane);
    load(config, is_brane ? brane_o : audit_o, is_brane ? brane : audit);
    const CommandOutput r = is_brane ? render_brane(config) : render_audit(config);
    const auto path = write_output(config.output, is_brane ? "brane.csv" : "audit.csv", r.csv);
    out << r.summary << "wrote " << path.string() << "\n";
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const AdmissibilityError& e) {
    err << "admissibility error: " << e.what() << "\n";
    return kAdmissibilityError;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace weylbrane::cli
