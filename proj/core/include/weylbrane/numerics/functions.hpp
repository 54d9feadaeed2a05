#pragma once

#include <functional>
#include <span>
#include <tuple>
#include <utility>

#include "weylbrane/numerics/jet.hpp"

namespace weylbrane {

/// Type-erases one generic callable over every FieldScalar type.
///
/// `Sig<S>` is the call signature for scalar type S. The stored callable is
/// instantiated once per scalar type, so a single generic lambda written
/// against `auto` arguments can be differentiated to any supported depth.
template <template <class> class Sig>
class PolyFunction {
 public:
  PolyFunction() = default;

  template <class Fn>
    requires(!std::same_as<std::decay_t<Fn>, PolyFunction>)
  explicit PolyFunction(const Fn& fn) : fns_{fn, fn, fn} {}

  template <FieldScalar S>
  const std::function<Sig<S>>& get() const {
    return std::get<std::function<Sig<S>>>(fns_);
  }

  explicit operator bool() const { return static_cast<bool>(std::get<0>(fns_)); }

 private:
  std::tuple<std::function<Sig<double>>, std::function<Sig<Jet>>,
             std::function<Sig<NestedJet>>>
      fns_;
};

template <class S>
using CurveSignature = S(const S&);

/// A smooth real function of one real variable, e.g. a(t) or F(t).
class Curve {
 public:
  Curve() = default;

  template <class Fn>
    requires(!std::same_as<std::decay_t<Fn>, Curve>)
  explicit Curve(Fn fn) : fn_(std::move(fn)) {}

  template <FieldScalar S>
  S eval(const S& t) const {
    return fn_.template get<S>()(t);
  }

  double operator()(double t) const { return eval(t); }

  static Curve constant(double c) {
    return Curve([c](const auto& t) {
      using S = std::decay_t<decltype(t)>;
      return S(c);
    });
  }

 private:
  PolyFunction<CurveSignature> fn_;
};

/// Value, first and second derivative of a curve at t (jet propagated).
struct CurveJet {
  double value;
  double d1;
  double d2;
};

/// Exact jet-propagated derivatives; throws NumericalError on non-finite
/// output ("evaluation outside domain").
CurveJet curve_jet(const Curve& f, double t);

/// d^order f / dt^order at t, order 1 or 2.
double derivative(const Curve& f, double t, int order);

}  // namespace weylbrane
