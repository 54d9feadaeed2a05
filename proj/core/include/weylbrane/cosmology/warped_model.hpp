#pragma once

#include <string>
#include <vector>

#include "weylbrane/geometry/fields.hpp"
#include "weylbrane/numerics/functions.hpp"
#include "weylbrane/weyl/frame.hpp"
#include "weylbrane/weyl/report.hpp"

namespace weylbrane {

/// Coordinate names of the 5D bulk, in index order.
inline const std::vector<std::string>& bulk_coordinate_names() {
  static const std::vector<std::string> names{"t", "x", "y", "z", "l"};
  return names;
}

/// Flat FRW metric diag(1, -a^2, -a^2, -a^2) on (t, x, y, z).
MetricField frw_metric(const Curve& a);

/// Warped bulk dS^2 = dt^2 - a(t)^2 dr^2 - e^{2F(t)} dl^2 with the linear
/// Weyl field phi = C1 l + C2.
struct WarpedModel {
  Curve a;
  Curve F;
  double C1 = 1.0;
  double C2 = 0.0;
  double xi = 1.0;

  double coupling() const { return 6.0 - 5.0 * xi; }

  MetricField metric() const;
  ScalarField phi() const;
  /// Phi = e^{F(t)}.
  LapseModel lapse() const;
  WeylFrame frame() const;
};

/// Residuals of the reduced u-equation at t, u = a e^F.
struct UEquationResidual {
  double u;
  double eq26;   // u'' + 4 (a''/a + H^2) u
  double eq25;   // F'' + F'^2 + 2 H F' + 5 a''/a + 4 H^2
  double scale;  // |u''| + 4 |a''/a + H^2| |u|, for relative comparisons
};

UEquationResidual u_equation_residual(const WarpedModel& model, double t);

/// Residuals (LHS - RHS) of the three Friedmann-like bulk equations with
/// S = 1/4 (6 - 5xi) C1^2 e^{-2F}:
///   eq22: 3H^2 + 3F'H - S
///   eq23: 2a''/a + H^2 + 2F'H + F'' + F'^2 - S
///   eq24: 3(a''/a + H^2) + S
/// Eliminating S gives eq23 + eq24 = eq25; `identity_gap` is
/// eq23 + eq24 - eq25 and vanishes up to rounding.
struct BulkSystemResiduals {
  double eq22;
  double eq23;
  double eq24;
  double eq25;
  double identity_gap;
  double source;  // S
};

BulkSystemResiduals bulk_system_residuals(const WarpedModel& model, double t);

/// Lambda(t) = (C1/2)^2 (6 - 5xi) e^{-2F(t)} for a general warp F.
double lambda_warped(const WarpedModel& model, double t);

}  // namespace weylbrane
