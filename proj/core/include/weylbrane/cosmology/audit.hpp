#pragma once

#include <vector>

#include "weylbrane/cosmology/warped_model.hpp"
#include "weylbrane/weyl/report.hpp"

namespace weylbrane {

/// Sample times in [t_min, t_max], log-spaced by default.
struct TimeGrid {
  double t_min = 1.0;
  double t_max = 100.0;
  int samples = 16;
  bool log_spacing = true;

  /// Throws std::invalid_argument unless 0 < t_min < t_max and samples >= 2.
  std::vector<double> points() const;
};

/// Residual audit of a warped model over a time grid, at the spatial
/// origin and slice l = l0. Equations, in report order:
///   eq16 eq17 eq18 eq19 eq19_variant  (split bulk equations, phi = phi(l))
///   eq22 eq23 eq24 eq25 eq25_identity (Friedmann-like system, eq23+eq24-eq25)
///   eq26                              (u-equation)
///   eq33 eq34                         (brane Friedmann equations, Lambda from the warp)
/// Rows carry the full bulk coordinates (t, x, y, z, l).
ResidualReport audit_model(const WarpedModel& model, const std::vector<double>& times,
                           double l0 = 0.0);

}  // namespace weylbrane
