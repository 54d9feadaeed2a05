#include "weylbrane/brane/induced.hpp"

#include <cmath>
#include <ostream>

#include "detail/engine.hpp"
#include "weylbrane/geometry/curvature.hpp"
#include "weylbrane/cosmology/warped_model.hpp"
#include "weylbrane/errors.hpp"

namespace weylbrane {
namespace {

std::vector<double> slice_point(std::span<const double> x, double l0) {
  std::vector<double> y(x.begin(), x.end());
  y.push_back(l0);
  return y;
}

void require_block_form(const Matrix<double>& g, std::span<const double> where) {
  const int l = g.dim() - 1;
  double scale = 0.0;
  for (double v : g.data()) scale = std::max(scale, std::abs(v));
  for (int a = 0; a < l; ++a) {
    if (std::abs(g(a, l)) > 1e-14 * scale || std::abs(g(l, a)) > 1e-14 * scale) {
      throw FoliationError("metric has nonzero g_(a l) at point " +
                           detail::describe_point(where) + "; not of block form");
    }
  }
}

}  // namespace

InducedGeometry induce_metric(const MetricField& metric5, double l0) {
  const int n = metric5.dim() - 1;
  std::vector<int> sig(metric5.signature().begin(), metric5.signature().end());
  if (!sig.empty()) sig.pop_back();
  MetricField h(n, std::move(sig), [metric5, l0, n](auto x) {
    using S = typename decltype(x)::value_type;
    std::vector<S> y(x.begin(), x.end());
    y.push_back(S(l0));
    const Matrix<S> g = metric5.eval<S>(std::span<const S>(y));
    Matrix<S> out(n);
    for (int a = 0; a < n; ++a) {
      if (value_of(g(a, n)) != 0.0 || value_of(g(n, a)) != 0.0) {
        throw FoliationError("induced metric: 5D metric is not of block form");
      }
      for (int b = 0; b < n; ++b) out(a, b) = g(a, b);
    }
    return out;
  });
  return InducedGeometry{std::move(h), l0};
}

InducedGeometry induce_metric(const MetricField& metric5, double l0,
                              std::span<const double> probe) {
  const auto y = slice_point(probe, l0);
  require_block_form(metric5(y), y);
  return induce_metric(metric5, l0);
}

Matrix<double> induced_stress_energy(const MetricField& metric5, const LapseModel& lapse,
                                     double l0, std::span<const double> x) {
  const int n = metric5.dim() - 1;
  const int l = n;
  const auto y = slice_point(x, l0);
  const auto mj = detail::metric_jet<double>(metric5, std::span<const double>(y), 2);
  require_block_form(mj.g, y);
  const auto sj = detail::scalar_jet<double>(lapse.Phi, std::span<const double>(y));
  const double Phi = sj.value;
  if (!(Phi > 0.0)) {
    throw NumericalError("induced_stress_energy: lapse vanishes or is negative at point " +
                         detail::describe_point(y));
  }

  // Induced 4-metric, its inverse, and its Christoffel symbols.
  Matrix<double> h(n), gs(n), gss(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      h(a, b) = mj.g(a, b);
      gs(a, b) = mj.dg[static_cast<std::size_t>(l)](a, b);
      gss(a, b) = mj.ddg[static_cast<std::size_t>(l)][static_cast<std::size_t>(l)](a, b);
    }
  const Matrix<double> hinv = detail::inverse(h, std::span<const double>(y));
  Rank3<double> gamma(n);
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double s = 0.0;
        for (int d = 0; d < n; ++d) {
          s += 0.5 * hinv(c, d) *
               (mj.dg[static_cast<std::size_t>(a)](d, b) + mj.dg[static_cast<std::size_t>(b)](d, a) -
                mj.dg[static_cast<std::size_t>(d)](a, b));
        }
        gamma(c, a, b) = s;
      }

  // (g^{mn})* and the traces used in the bracket.
  Matrix<double> dinv(n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s -= hinv(m, i) * gs(i, j) * hinv(j, k);
      dinv(m, k) = s;
    }
  double tr = 0.0;       // g^{mn} g*_mn
  double dinv_gs = 0.0;  // (g^{mn})* g*_mn
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      tr += hinv(m, k) * gs(m, k);
      dinv_gs += dinv(m, k) * gs(m, k);
    }
  const double Phi_star = sj.d[static_cast<std::size_t>(l)];

  Matrix<double> T(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double hess = sj.dd(a, b);
      for (int c = 0; c < n; ++c) hess -= gamma(c, a, b) * sj.d[static_cast<std::size_t>(c)];
      double quad = 0.0;  // g^{lm} g*_al g*_bm
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) quad += hinv(i, j) * gs(a, i) * gs(b, j);
      const double bracket = (Phi_star / Phi) * gs(a, b) - gss(a, b) + quad -
                             0.5 * tr * gs(a, b) + 0.25 * h(a, b) * (dinv_gs + tr * tr);
      T(a, b) = hess / Phi + bracket / (2.0 * Phi * Phi);
    }
  return T;
}

Matrix<double> induced_stress_energy_frw_tensor(const Curve& F, const Curve& a, double t) {
  const MetricField h = frw_metric(a);
  const double x[4] = {t, 0.0, 0.0, 0.0};
  const Rank3<double> gamma = christoffel(h, x);
  const CurveJet f = curve_jet(F, t);
  const double dF[4] = {f.d1, 0.0, 0.0, 0.0};
  Matrix<double> T(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = (i == 0 && j == 0 ? f.d2 : 0.0) + dF[i] * dF[j];
      for (int c = 0; c < 4; ++c) s -= gamma(c, i, j) * dF[c];
      T(i, j) = s;
    }
  return T;
}

InducedFluid induced_stress_energy_frw(const Curve& F, const Curve& a, double t) {
  const Matrix<double> T = induced_stress_energy_frw_tensor(F, a, t);
  const double av = a(t);
  // Diagonal metric: T^t_t = g^tt T_tt, T^x_x = g^xx T_xx = -T_xx / a^2.
  return InducedFluid{T(0, 0), T(1, 1) / (av * av)};
}

double lambda_induced(double lapse_value, double phi_l, double xi) {
  if (!(lapse_value > 0.0)) throw NumericalError("lambda_induced: lapse must be positive");
  return 0.25 * (6.0 - 5.0 * xi) * phi_l * phi_l / (lapse_value * lapse_value);
}

BraneState effective_fluid(const Curve& F, const Curve& a, const LambdaFunction& lambda_fn,
                           double t) {
  const InducedFluid fluid = induced_stress_energy_frw(F, a, t);
  const CurveJet f = curve_jet(F, t);
  const CurveJet aj = curve_jet(a, t);
  const double H = aj.d1 / aj.value;
  BraneState s;
  s.t = t;
  s.a = aj.value;
  s.F = f.value;
  s.rho_im = fluid.rho_im;
  s.p_im = fluid.p_im;
  s.lambda = lambda_fn(t);
  s.rho_eff = s.rho_im + s.lambda;
  s.p_eff = s.p_im - s.lambda;
  const double den = f.d2 + f.d1 * f.d1 + s.lambda;
  const double size = std::abs(s.rho_im) + std::abs(s.lambda);
  if (s.rho_eff == 0.0 || std::abs(s.rho_eff) <= 1e-14 * size || den == 0.0) {
    throw NumericalError("effective density vanishes at t = " + format_real(t) +
                         "; omega_eff undefined");
  }
  s.omega_eff = s.p_eff / s.rho_eff;
  s.omega_eff_bracket = -(1.0 - (f.d1 * f.d1 + f.d2 - H * f.d1) / den);
  return s;
}

std::vector<EquationTerms> brane_terms(const Curve& F, const Curve& a,
                                       const LambdaFunction& lambda_fn, double t) {
  const InducedFluid fluid = induced_stress_energy_frw(F, a, t);
  const CurveJet aj = curve_jet(a, t);
  const double H = aj.d1 / aj.value;
  const double lambda = lambda_fn(t);
  EquationTerms eq33{"eq33", {3.0 * H * H}, {fluid.rho_im + lambda}};
  EquationTerms eq34{"eq34", {2.0 * aj.d2 / aj.value + H * H}, {-(fluid.p_im - lambda)}};
  return {std::move(eq33), std::move(eq34)};
}

ResidualReport brane_residuals(const Curve& F, const Curve& a, const LambdaFunction& lambda_fn,
                               double t) {
  const double point[1] = {t};
  ResidualReport r({"t"});
  for (const auto& terms : brane_terms(F, a, lambda_fn, t)) r.add(terms, point);
  return r;
}

void write_brane_csv(std::ostream& out, const std::vector<BraneState>& states) {
  out << "t,a,F,rho_im,p_im,lambda,rho_eff,p_eff,omega_eff\n";
  for (const auto& s : states) {
    out << format_real(s.t) << ',' << format_real(s.a) << ',' << format_real(s.F) << ','
        << format_real(s.rho_im) << ',' << format_real(s.p_im) << ',' << format_real(s.lambda)
        << ',' << format_real(s.rho_eff) << ',' << format_real(s.p_eff) << ','
        << format_real(s.omega_eff) << '\n';
  }
}

}  // namespace weylbrane
