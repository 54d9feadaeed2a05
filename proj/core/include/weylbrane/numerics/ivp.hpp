#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace weylbrane {

/// y' = f(t, y). The callee writes dy/dt into `dydt` (same length as y).
using VectorField =
    std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

struct IvpOptions {
  double rtol = 1e-10;
  double atol = 1e-10;
  std::size_t max_steps = 1'000'000;
};

/// Output of integrate_ivp: accepted step endpoints plus the continuous
/// extension of every step, so the state can be queried anywhere in
/// [t_begin, t_end].
class Trajectory {
 public:
  struct Sample {
    double t;
    std::vector<double> state;
  };

  const std::vector<Sample>& samples() const { return samples_; }
  const IvpOptions& options() const { return options_; }
  std::size_t dimension() const { return dim_; }
  double t_begin() const { return samples_.front().t; }
  double t_end() const { return samples_.back().t; }
  std::size_t rejected_steps() const { return rejected_; }

  /// Interpolated state at t (4th-order Dormand-Prince dense output).
  std::vector<double> at(double t) const;
  double at(double t, std::size_t component) const;

 private:
  friend Trajectory integrate_ivp(const VectorField&, double, std::span<const double>,
                                  double, const IvpOptions&);

  // Per step: 5 coefficient vectors of the continuous extension.
  struct DenseStep {
    double t0;
    double h;
    std::vector<double> coeffs;  // 5 * dim
  };

  IvpOptions options_;
  std::size_t dim_ = 0;
  std::size_t rejected_ = 0;
  std::vector<Sample> samples_;
  std::vector<DenseStep> dense_;
};

/// Adaptive Dormand-Prince 5(4) integration of y' = f(t, y) from t0 to tf.
///
/// Throws NumericalError when the step size underflows (stiffness, or a
/// singularity such as t = 0 inside the interval) or the step budget runs
/// out, and std::invalid_argument when tf <= t0.
Trajectory integrate_ivp(const VectorField& f, double t0, std::span<const double> y0,
                         double tf, const IvpOptions& options = {});

}  // namespace weylbrane
