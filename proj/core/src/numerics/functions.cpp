#include "weylbrane/numerics/functions.hpp"

#include <cmath>
#include <string>

#include "weylbrane/errors.hpp"

namespace weylbrane {

CurveJet curve_jet(const Curve& f, double t) {
  const Jet r = f.eval(Jet::variable(t));
  if (!all_finite(r)) {
    throw NumericalError("evaluation outside domain at t = " + std::to_string(t));
  }
  return {r.value, r.d1, r.d2};
}

double derivative(const Curve& f, double t, int order) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("derivative order must be 1 or 2");
  }
  const CurveJet j = curve_jet(f, t);
  return order == 1 ? j.d1 : j.d2;
}

}  // namespace weylbrane
