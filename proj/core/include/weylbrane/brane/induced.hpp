#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "weylbrane/geometry/fields.hpp"
#include "weylbrane/geometry/tensor.hpp"
#include "weylbrane/numerics/functions.hpp"
#include "weylbrane/weyl/frame.hpp"
#include "weylbrane/weyl/report.hpp"

namespace weylbrane {

/// The 4D metric h_ab(x) = g_ab(x, l0) of the slice l = l0.
struct InducedGeometry {
  MetricField metric4;
  double l0 = 0.0;
};

/// Slices a block-form 5D metric. Evaluating the induced metric throws
/// FoliationError wherever g_al != 0.
InducedGeometry induce_metric(const MetricField& metric5, double l0);

/// Same, but also checks the block form eagerly at (probe, l0).
InducedGeometry induce_metric(const MetricField& metric5, double l0,
                              std::span<const double> probe);

/// Induced-matter stress-energy on l = l0 at the 4D point x:
///
///   T_ab = Phi_{a||b} / Phi
///        + 1/(2 Phi^2) { (Phi*/Phi) g*_ab - g**_ab + g^{lm} g*_al g*_bm
///                        - 1/2 g^{mn} g*_mn g*_ab
///                        + 1/4 g_ab [ (g^{mn})* g*_mn + (g^{mn} g*_mn)^2 ] }
///
/// with * = d/dl, || the covariant derivative of the induced metric, and
/// (g^{mn})* the l-derivative of the inverse 4-metric.
Matrix<double> induced_stress_energy(const MetricField& metric5, const LapseModel& lapse,
                                     double l0, std::span<const double> x);

struct InducedFluid {
  double rho_im;
  double p_im;
};

/// T_ab = F_,ab + F_,a F_,b - Gamma^c_ab F_,c on the flat FRW brane, as a
/// 4x4 tensor at (t, 0, 0, 0).
Matrix<double> induced_stress_energy_frw_tensor(const Curve& F, const Curve& a, double t);

/// rho = T^t_t, P = -T^x_x of the FRW-reduced tensor (= F'' + F'^2 and -H F').
InducedFluid induced_stress_energy_frw(const Curve& F, const Curve& a, double t);

/// Lambda = 1/4 (6 - 5xi) Phi^-2 phi_l^2 at the slice; throws NumericalError
/// unless Phi > 0.
double lambda_induced(double lapse_value, double phi_l, double xi);

/// Effective fluid on the brane at one instant.
struct BraneState {
  double t = 0.0;
  double a = 0.0;
  double F = 0.0;
  double rho_im = 0.0;
  double p_im = 0.0;
  double lambda = 0.0;
  double rho_eff = 0.0;
  double p_eff = 0.0;
  double omega_eff = 0.0;          // p_eff / rho_eff
  double omega_eff_bracket = 0.0;  // -[1 - (F'^2 + F'' - H F') / (F'' + F'^2 + Lambda)]
};

using LambdaFunction = std::function<double(double)>;

/// Throws NumericalError when rho_eff vanishes (omega undefined).
BraneState effective_fluid(const Curve& F, const Curve& a, const LambdaFunction& lambda_fn,
                           double t);

/// eq33: 3H^2 - rho_im - Lambda;  eq34: 2a''/a + H^2 + (P_im - Lambda).
std::vector<EquationTerms> brane_terms(const Curve& F, const Curve& a,
                                       const LambdaFunction& lambda_fn, double t);
ResidualReport brane_residuals(const Curve& F, const Curve& a, const LambdaFunction& lambda_fn,
                               double t);

/// Header: t,a,F,rho_im,p_im,lambda,rho_eff,p_eff,omega_eff
void write_brane_csv(std::ostream& out, const std::vector<BraneState>& states);

}  // namespace weylbrane
