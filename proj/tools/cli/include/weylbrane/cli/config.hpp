#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylbrane/cosmology/audit.hpp"
#include "weylbrane/cosmology/power_law.hpp"

namespace weylbrane::cli {

/// Everything a single-scenario command needs.
struct ScenarioConfig {
  double p = 0.45;
  double a0 = 1.0;
  double t0 = 1.0;
  double A1 = 1.0;
  double A2 = 0.0;
  double C1 = 1.0;
  double C2 = 0.0;
  double xi = 1.0;
  TimeGrid grid;
  double l0 = 0.0;
  std::filesystem::path output = ".";

  /// Throws ConfigError on any violated invariant. Does not look at p:
  /// whether p is admissible is an AdmissibilityError, raised later.
  void validate() const;
  PowerLawScenario scenario() const;
  PowerLawScenario scenario_at(double p_value) const;
};

struct SweepSpec {
  double p_min = 0.30;
  double p_max = 0.56;
  int steps = 27;
  int workers = 1;
  ScenarioConfig base;

  void validate() const;
  /// Inclusive grid; steps == 1 gives {p_min}.
  std::vector<double> p_values() const;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Strict `key = value` parser: one pair per line, `#` starts a comment,
/// blank lines ignored. Malformed lines and duplicate keys throw ConfigError.
KeyValues parse_key_values(std::string_view text, std::string_view origin = "<config>");
KeyValues read_config_file(const std::filesystem::path& path);

const std::vector<std::string>& scenario_keys();
const std::vector<std::string>& sweep_keys();

/// Applies one setting. Unknown keys throw ConfigError.
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value);
void apply_setting(SweepSpec& spec, std::string_view key, std::string_view value);

}  // namespace weylbrane::cli
