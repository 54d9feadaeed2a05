#pragma once

#include <span>
#include <utility>
#include <vector>

#include "weylbrane/geometry/tensor.hpp"
#include "weylbrane/numerics/functions.hpp"

namespace weylbrane {

template <class S>
using MetricSignature = Matrix<S>(std::span<const S>);
template <class S>
using ScalarFieldSignature = S(std::span<const S>);

/// A metric g_ab(y) on a coordinate patch of dimension `dim`.
///
/// Built from one generic callable taking `std::span<const S>` and returning
/// `Matrix<S>`; it must be written generically so it can be evaluated on
/// jets. Signature entries are +1/-1 per coordinate and are descriptive
/// (the engine does not assume diagonal metrics).
class MetricField {
 public:
  MetricField() = default;

  template <class Fn>
  MetricField(int dim, std::vector<int> signature, Fn fn)
      : dim_(dim), signature_(std::move(signature)), fn_(std::move(fn)) {}

  int dim() const { return dim_; }
  const std::vector<int>& signature() const { return signature_; }

  template <FieldScalar S>
  Matrix<S> eval(std::span<const S> y) const {
    return fn_.template get<S>()(y);
  }

  Matrix<double> operator()(std::span<const double> y) const { return eval(y); }

  /// Constant diag(signature) metric.
  static MetricField flat(std::vector<int> signature);

 private:
  int dim_ = 0;
  std::vector<int> signature_;
  PolyFunction<MetricSignature> fn_;
};

/// A scalar function of the coordinates (Weyl potential, lapse, gauge
/// function, ...).
class ScalarField {
 public:
  ScalarField() = default;

  template <class Fn>
    requires(!std::same_as<std::decay_t<Fn>, ScalarField>)
  explicit ScalarField(Fn fn) : fn_(std::move(fn)) {}

  template <FieldScalar S>
  S eval(std::span<const S> y) const {
    return fn_.template get<S>()(y);
  }

  double operator()(std::span<const double> y) const { return eval(y); }

  static ScalarField constant(double c);
  /// c * y[index] + offset.
  static ScalarField linear(int index, double c, double offset = 0.0);

 private:
  PolyFunction<ScalarFieldSignature> fn_;
};

}  // namespace weylbrane
