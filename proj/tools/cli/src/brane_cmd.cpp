#include <algorithm>
#include <sstream>

#include "format.hpp"
#include "weylbrane/brane/induced.hpp"
#include "weylbrane/cli/commands.hpp"
#include "weylbrane/cosmology/power_law.hpp"

namespace weylbrane::cli {

namespace {

std::string trend(const std::vector<BraneState>& states) {
  bool inc = true, dec = true;
  double lo = states.front().omega_eff, hi = lo;
  for (std::size_t i = 1; i < states.size(); ++i) {
    const double a = states[i - 1].omega_eff, b = states[i].omega_eff;
    inc = inc && b > a;
    dec = dec && b < a;
    lo = std::min(lo, b);
    hi = std::max(hi, b);
  }
  if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) return "constant";
  if (dec) return "strictly decreasing";
  if (inc) return "strictly increasing";
  return "not monotonic";
}

}  // namespace

CommandOutput render_brane(const ScenarioConfig& config) {
  config.validate();
  const PowerLawScenario s = config.scenario();
  const double gamma = gamma_exponent(s.p);  // names the admissible interval if p is outside it
  const WarpedModel model = warped_model(s);
  const Curve lambda = lambda_powerlaw(s);
  const LambdaFunction lambda_fn = [&lambda](double t) { return lambda(t); };

  std::vector<BraneState> states;
  for (double t : config.grid.points()) states.push_back(effective_fluid(model.F, model.a, lambda_fn, t));

  std::ostringstream csv;
  write_brane_csv(csv, states);

  const Admissibility adm = admissibility(s.p);
  std::ostringstream sum;
  sum << "brane: p = " << show(s.p) << ", xi = " << show(s.xi) << ", C1 = " << show(s.C1)
      << ", B1 = " << show(s.B1) << "\n";
  sum << "  gamma                  = " << show(gamma) << "\n";
  sum << "  discriminant           = " << show(discriminant(s.p)) << "\n";
  sum << "  lambda coefficient     = " << show(s.lambda_coefficient()) << "  (Lambda = coef * t^"
      << show(-2.0 * gamma) << ")\n";
  sum << "  real_gamma             = " << yes_no(adm.real_gamma) << "\n";
  sum << "  omega_decreasing       = " << yes_no(adm.omega_decreasing) << "\n";
  sum << "  admissible_window      = " << yes_no(adm.admissible_window) << "\n";
  sum << "  de_sitter              = " << yes_no(adm.de_sitter) << "\n";
  sum << "  omega_eff(t_min = " << show(states.front().t) << ") = " << show(states.front().omega_eff) << "\n";
  sum << "  omega_eff(t_max = " << show(states.back().t) << ") = " << show(states.back().omega_eff) << "\n";
  sum << "  omega_eff on grid      : " << trend(states) << "\n";
  return {csv.str(), sum.str()};
}

}  // namespace weylbrane::cli
