#pragma once

#include <span>
#include <vector>

#include "weylbrane/geometry/fields.hpp"
#include "weylbrane/geometry/tensor.hpp"

namespace weylbrane {

/// Curvature sign convention. The default is the one under which flat FRW
/// with signature (+,-,-,-) gives G_tt = +3H^2; riemann_sign = -1 flips it
/// (used only as a negative control).
struct Conventions {
  int riemann_sign = 1;
};

/// Connection and curvature of a metric (or metric + Weyl potential) at a point.
struct CurvatureBundle {
  std::vector<double> point;
  Matrix<double> metric;
  Matrix<double> inverse_metric;
  Rank3<double> gamma;    // Gamma^a_bc
  Rank4<double> riemann;  // R^a_bcd
  Matrix<double> ricci;   // R_bd = R^a_bad, not symmetrized
  double scalar = 0.0;
  Matrix<double> einstein;  // G_ab = R_ab - 1/2 g_ab R

  /// G^a_b = g^ac G_cb.
  Matrix<double> einstein_mixed() const;
};

/// Levi-Civita coefficients Gamma^a_bc = 1/2 g^ad (d_b g_dc + d_c g_db - d_d g_bc).
Rank3<double> christoffel(const MetricField& metric, std::span<const double> point);

CurvatureBundle curvature(const MetricField& metric, std::span<const double> point,
                          Conventions conventions = {});

/// Christoffel symbols minus 1/2 [phi_b delta^a_c + phi_c delta^a_b - g_bc phi^a].
Rank3<double> weyl_connection(const MetricField& metric, const ScalarField& phi,
                              std::span<const double> point);

CurvatureBundle weyl_curvature(const MetricField& metric, const ScalarField& phi,
                               std::span<const double> point, Conventions conventions = {});

/// Covariant divergence nabla_a G^ab of the Levi-Civita Einstein tensor.
/// Needs third metric derivatives, obtained by nesting jets.
std::vector<double> einstein_divergence(const MetricField& metric,
                                        std::span<const double> point);

}  // namespace weylbrane
