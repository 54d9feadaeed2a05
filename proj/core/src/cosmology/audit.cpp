#include "weylbrane/cosmology/audit.hpp"

#include <cmath>
#include <stdexcept>

#include "weylbrane/brane/induced.hpp"
#include "weylbrane/weyl/residuals.hpp"

namespace weylbrane {

std::vector<double> TimeGrid::points() const {
  if (!(t_min > 0.0) || !(t_max > t_min) || samples < 2) {
    throw std::invalid_argument("time grid requires 0 < t_min < t_max and samples >= 2");
  }
  std::vector<double> t(static_cast<std::size_t>(samples));
  const double last = static_cast<double>(samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double f = static_cast<double>(i) / last;
    t[static_cast<std::size_t>(i)] =
        log_spacing ? t_min * std::pow(t_max / t_min, f) : t_min + (t_max - t_min) * f;
  }
  t.front() = t_min;
  t.back() = t_max;
  return t;
}

ResidualReport audit_model(const WarpedModel& model, const std::vector<double>& times,
                           double l0) {
  ResidualReport report(bulk_coordinate_names());
  const WeylFrame frame = model.frame();
  const LapseModel lapse = model.lapse();
  const LambdaFunction lambda = [&model](double t) { return lambda_warped(model, t); };

  // Collect per equation first so the CSV is grouped by equation id.
  ResidualReport split, system, ueq, brane;
  for (double t : times) {
    const double point[5] = {t, 0.0, 0.0, 0.0, l0};
    for (const auto& terms : split_terms(frame, lapse, point)) {
      if (terms.id == "eq13" || terms.id == "eq14" || terms.id == "eq15") continue;
      split.add(terms, point);
    }
    const BulkSystemResiduals b = bulk_system_residuals(model, t);
    system.add("eq22", point, b.eq22);
    system.add("eq23", point, b.eq23);
    system.add("eq24", point, b.eq24);
    system.add("eq25", point, b.eq25);
    system.add("eq25_identity", point, b.identity_gap);
    ueq.add("eq26", point, u_equation_residual(model, t).eq26);
    for (const auto& terms : brane_terms(model.F, model.a, lambda, t)) brane.add(terms, point);
  }
  report.merge(split);
  report.merge(system);
  report.merge(ueq);
  report.merge(brane);
  return report;
}

}  // namespace weylbrane
