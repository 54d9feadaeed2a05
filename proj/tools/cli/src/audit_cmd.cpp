#include <sstream>

#include "format.hpp"
#include "weylbrane/cli/commands.hpp"
#include "weylbrane/cosmology/audit.hpp"
#include "weylbrane/cosmology/power_law.hpp"

namespace weylbrane::cli {

namespace {
constexpr double kHoldsTolerance = 1e-8;
}

CommandOutput render_audit(const ScenarioConfig& config) {
  config.validate();
  const PowerLawScenario s = config.scenario();
  const WarpedModel model = warped_model(s);
  const ResidualReport report = audit_model(model, config.grid.points(), config.l0);

  std::ostringstream csv;
  report.write_csv(csv);

  std::ostringstream sum;
  sum << "audit: p = " << show(s.p) << ", xi = " << show(s.xi) << ", C1 = " << show(s.C1)
      << ", l0 = " << show(config.l0) << ", " << config.grid.samples << " samples\n";
  sum << "max |residual| per equation (holds means <= " << show(kHoldsTolerance) << "):\n";
  sum << report.summary(kHoldsTolerance);
  return {csv.str(), sum.str()};
}

}  // namespace weylbrane::cli
