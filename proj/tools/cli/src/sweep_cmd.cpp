#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "format.hpp"
#include "weylbrane/cli/commands.hpp"
#include "weylbrane/cosmology/power_law.hpp"
#include "weylbrane/errors.hpp"
#include "weylbrane/weyl/report.hpp"

namespace weylbrane::cli {

namespace {

struct SweepRow {
  double p = 0.0;
  double discriminant = 0.0;
  double gamma = std::numeric_limits<double>::quiet_NaN();
  Admissibility flags;
  double omega_tmax = std::numeric_limits<double>::quiet_NaN();
};

// Pure function of (p, base): rows never share state.
SweepRow evaluate_row(double p, const ScenarioConfig& base) {
  SweepRow r;
  r.p = p;
  r.discriminant = discriminant(p);
  r.flags = admissibility(p);
  if (!r.flags.real_gamma) return r;
  r.gamma = gamma_exponent(p);
  try {
    r.omega_tmax = omega_eff_powerlaw(base.scenario_at(p))(base.grid.t_max);
  } catch (const NumericalError&) {
    // omega undefined where the effective density vanishes; stays nan
  }
  return r;
}

}  // namespace

CommandOutput render_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> ps = spec.p_values();
  std::vector<SweepRow> rows(ps.size());

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(spec.workers), std::max<std::size_t>(ps.size(), 1));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < ps.size(); i += workers) rows[i] = evaluate_row(ps[i], spec.base);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  // p grid is ascending by construction; rows are emitted in index order.
  std::ostringstream csv;
  csv << "p,discriminant,gamma,real_gamma,omega_decreasing,admissible_window,de_sitter,omega_eff_tmax\n";
  int admissible = 0;
  for (const auto& r : rows) {
    csv << format_real(r.p) << ',' << format_real(r.discriminant) << ',' << format_real(r.gamma) << ','
        << int(r.flags.real_gamma) << ',' << int(r.flags.omega_decreasing) << ','
        << int(r.flags.admissible_window) << ',' << int(r.flags.de_sitter) << ','
        << format_real(r.omega_tmax) << '\n';
    admissible += r.flags.admissible_window ? 1 : 0;
  }

  std::ostringstream sum;
  sum << "sweep: p in [" << show(spec.p_min) << ", " << show(spec.p_max) << "], " << rows.size()
      << " rows, omega_eff evaluated at t_max = " << show(spec.base.grid.t_max) << "\n";
  sum << "  admissible rows (1/3 < p <= 1/4 + sqrt(6)/8): " << admissible << "\n";
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].flags.omega_decreasing != rows[i - 1].flags.omega_decreasing)
      sum << "  omega_decreasing flips between p = " << show(rows[i - 1].p) << " and " << show(rows[i].p) << "\n";
    if (rows[i].flags.real_gamma != rows[i - 1].flags.real_gamma)
      sum << "  real_gamma flips between p = " << show(rows[i - 1].p) << " and " << show(rows[i].p) << "\n";
  }
  for (const auto& r : rows)
    if (r.flags.de_sitter) sum << "  de Sitter row at p = " << show(r.p) << "\n";
  return {csv.str(), sum.str()};
}

}  // namespace weylbrane::cli
