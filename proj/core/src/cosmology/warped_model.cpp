#include "weylbrane/cosmology/warped_model.hpp"

#include <cmath>

#include "weylbrane/errors.hpp"

namespace weylbrane {

MetricField frw_metric(const Curve& a) {
  return MetricField(4, {1, -1, -1, -1}, [a](auto y) {
    using S = typename decltype(y)::value_type;
    const S av = a.eval<S>(y[0]);
    const S a2 = av * av;
    return Matrix<S>::diagonal({S(1.0), -a2, -a2, -a2});
  });
}

MetricField WarpedModel::metric() const {
  return MetricField(5, {1, -1, -1, -1, -1}, [a = a, F = F](auto y) {
    using S = typename decltype(y)::value_type;
    using std::exp;
    const S av = a.eval<S>(y[0]);
    const S a2 = av * av;
    return Matrix<S>::diagonal({S(1.0), -a2, -a2, -a2, -exp(2.0 * F.eval<S>(y[0]))});
  });
}

ScalarField WarpedModel::phi() const { return ScalarField::linear(4, C1, C2); }

LapseModel WarpedModel::lapse() const {
  return LapseModel{ScalarField([F = F](auto y) {
    using S = typename decltype(y)::value_type;
    using std::exp;
    return exp(F.eval<S>(y[0]));
  })};
}

WeylFrame WarpedModel::frame() const { return WeylFrame{metric(), phi(), xi}; }

namespace {

struct Kinematics {
  double a, H, addot_over_a, F, dF, ddF;
};

Kinematics kinematics(const WarpedModel& m, double t) {
  const CurveJet a = curve_jet(m.a, t);
  const CurveJet F = curve_jet(m.F, t);
  if (!(a.value > 0.0)) throw NumericalError("scale factor must be positive");
  return {a.value, a.d1 / a.value, a.d2 / a.value, F.value, F.d1, F.d2};
}

}  // namespace

UEquationResidual u_equation_residual(const WarpedModel& model, double t) {
  const Jet tj = Jet::variable(t);
  const Jet u = model.a.eval(tj) * exp(model.F.eval(tj));
  if (!all_finite(u)) throw NumericalError("u-equation: evaluation outside domain");
  const Kinematics k = kinematics(model, t);
  const double q = k.addot_over_a + k.H * k.H;
  UEquationResidual r;
  r.u = u.value;
  r.eq26 = u.d2 + 4.0 * q * u.value;
  r.eq25 = k.ddF + k.dF * k.dF + 2.0 * k.H * k.dF + 5.0 * k.addot_over_a + 4.0 * k.H * k.H;
  r.scale = std::abs(u.d2) + 4.0 * std::abs(q) * std::abs(u.value);
  return r;
}

BulkSystemResiduals bulk_system_residuals(const WarpedModel& model, double t) {
  const Kinematics k = kinematics(model, t);
  const double S = 0.25 * model.coupling() * model.C1 * model.C1 * std::exp(-2.0 * k.F);
  BulkSystemResiduals r;
  r.source = S;
  r.eq22 = 3.0 * k.H * k.H + 3.0 * k.dF * k.H - S;
  r.eq23 = 2.0 * k.addot_over_a + k.H * k.H + 2.0 * k.dF * k.H + k.ddF + k.dF * k.dF - S;
  r.eq24 = 3.0 * (k.addot_over_a + k.H * k.H) + S;
  r.eq25 = k.ddF + k.dF * k.dF + 2.0 * k.H * k.dF + 5.0 * k.addot_over_a + 4.0 * k.H * k.H;
  r.identity_gap = r.eq23 + r.eq24 - r.eq25;
  return r;
}

double lambda_warped(const WarpedModel& model, double t) {
  const double half = 0.5 * model.C1;
  return half * half * model.coupling() * std::exp(-2.0 * model.F(t));
}

}  // namespace weylbrane
