#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weylbrane/cli/config.hpp"

namespace weylbrane::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kAdmissibilityError = 3,
  kNumericalError = 4,
};

// Each command renders its CSV to a string (so callers can compare runs),
// writes it under the configured output directory, and prints a summary.

struct CommandOutput {
  std::string csv;
  std::string summary;
};

CommandOutput render_brane(const ScenarioConfig& config);
CommandOutput render_audit(const ScenarioConfig& config);
CommandOutput render_sweep(const SweepSpec& spec);

struct ValidateOptions {
  bool flip_riemann_sign = false;
};

struct CheckResult {
  std::string name;
  bool passed;
  double error;
  double tolerance;
};

std::vector<CheckResult> run_golden_checks(const ValidateOptions& options);
/// Human-readable report of run_golden_checks.
std::string render_validate(const std::vector<CheckResult>& results);

/// Writes `content` to dir/name, creating dir if needed. Throws ConfigError
/// if the file cannot be written.
std::filesystem::path write_output(const std::filesystem::path& dir, const std::string& name,
                                   const std::string& content);

/// Full command line: `weylbrane <validate|brane|audit|sweep> [options]`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylbrane::cli
