#pragma once

#include <span>

#include "weylbrane/geometry/fields.hpp"
#include "weylbrane/geometry/tensor.hpp"

namespace weylbrane {

/// Integrable Weyl frame (g, sigma = d phi) with coupling xi.
///
/// sigma is never stored: it is always the gradient of phi, so the frame
/// is integrable by construction.
struct WeylFrame {
  MetricField metric;
  ScalarField phi;
  double xi = 1.0;

  /// 6 - 5 xi, the only combination through which xi enters the
  /// Riemannian-form equations.
  double coupling() const { return 6.0 - 5.0 * xi; }
};

/// Lapse Phi(x, l) > 0 of a block metric g_ab(x,l) dx^a dx^b - Phi^2 dl^2.
struct LapseModel {
  ScalarField Phi;

  /// Phi at the point; throws NumericalError unless strictly positive.
  double at(std::span<const double> point) const;
};

/// nabla_a g_bc - sigma_a g_bc, nabla taken with the frame's Weyl connection.
/// Indexed (a, b, c); vanishes identically for a consistent frame.
Rank3<double> compatibility_residual(const WeylFrame& frame, std::span<const double> point);

/// (g, phi) -> (e^{-f} g, phi - f).
WeylFrame frame_transform(const WeylFrame& frame, const ScalarField& f);

}  // namespace weylbrane
