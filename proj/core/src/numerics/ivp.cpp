#include "weylbrane/numerics/ivp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "weylbrane/errors.hpp"

namespace weylbrane {
namespace {

// Dormand-Prince 5(4) tableau with Hairer's dense-output coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

bool finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

double weighted_rms(std::span<const double> v, std::span<const double> scale) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double r = v[i] / scale[i];
    s += r * r;
  }
  return std::sqrt(s / static_cast<double>(v.size()));
}

// Hairer's starting step heuristic.
double initial_step(const VectorField& f, double t0, std::span<const double> y0,
                    std::span<const double> f0, double span, const IvpOptions& opt) {
  const std::size_t n = y0.size();
  std::vector<double> sk(n), y1(n), f1(n);
  for (std::size_t i = 0; i < n; ++i) sk[i] = opt.atol + opt.rtol * std::abs(y0[i]);
  const double dnf = weighted_rms(f0, sk);
  const double dny = weighted_rms(y0, sk);
  double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * dny / dnf;
  h = std::min(h, span);
  for (std::size_t i = 0; i < n; ++i) y1[i] = y0[i] + h * f0[i];
  f(t0 + h, y1, f1);
  if (!finite(f1)) return std::min(1e-6, span);
  for (std::size_t i = 0; i < n; ++i) f1[i] -= f0[i];
  const double der2 = weighted_rms(f1, sk) / h;
  const double der12 = std::max(std::abs(der2), dnf);
  const double h1 = der12 <= 1e-15 ? std::max(1e-6, std::abs(h) * 1e-3)
                                   : std::pow(0.01 / der12, 1.0 / 5.0);
  return std::min({100.0 * h, h1, span});
}

}  // namespace

std::vector<double> Trajectory::at(double t) const {
  if (dense_.empty()) {
    return samples_.front().state;
  }
  if (t < t_begin() || t > t_end()) {
    throw std::out_of_range("trajectory query outside integrated interval");
  }
  // Last step whose start is <= t.
  auto it = std::upper_bound(dense_.begin(), dense_.end(), t,
                             [](double x, const DenseStep& s) { return x < s.t0; });
  const DenseStep& step = it == dense_.begin() ? dense_.front() : *std::prev(it);
  const double theta = (t - step.t0) / step.h;
  const double theta1 = 1.0 - theta;
  std::vector<double> y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const double* r = &step.coeffs[5 * i];
    y[i] = r[0] + theta * (r[1] + theta1 * (r[2] + theta * (r[3] + theta1 * r[4])));
  }
  return y;
}

double Trajectory::at(double t, std::size_t component) const { return at(t).at(component); }

Trajectory integrate_ivp(const VectorField& f, double t0, std::span<const double> y0,
                         double tf, const IvpOptions& options) {
  if (!(tf > t0)) throw std::invalid_argument("integrate_ivp requires tf > t0");
  if (!(options.rtol > 0.0) || !(options.atol >= 0.0)) {
    throw std::invalid_argument("integrate_ivp requires rtol > 0 and atol >= 0");
  }
  const std::size_t n = y0.size();
  Trajectory traj;
  traj.options_ = options;
  traj.dim_ = n;

  std::vector<double> y(y0.begin(), y0.end()), ynew(n), ytmp(n), err(n), sk(n);
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
  if (!finite(y)) throw NumericalError("integrate_ivp: non-finite initial state");
  f(t0, y, k1);
  if (!finite(k1)) throw NumericalError("integrate_ivp: vector field non-finite at t0");

  traj.samples_.push_back({t0, y});
  double t = t0;
  double h = initial_step(f, t0, y, k1, tf - t0, options);
  const double safety = 0.9;
  bool last_rejected = false;

  for (std::size_t step = 0; t < tf; ++step) {
    if (step >= options.max_steps) {
      throw NumericalError("integrate_ivp: step budget exhausted at t = " + std::to_string(t));
    }
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      throw NumericalError("integrate_ivp: step size underflow at t = " + std::to_string(t) +
                           " (stiff problem or singularity)");
    }
    if (t + h > tf || tf - (t + h) < 1e-14 * std::abs(tf)) h = tf - t;

    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    f(t + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] =
          y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const double tnew = t + h;
    f(tnew, ytmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] =
          y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    f(tnew, ynew, k7);

    double err_norm = std::numeric_limits<double>::infinity();
    if (finite(ynew) && finite(k7)) {
      for (std::size_t i = 0; i < n; ++i) {
        err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                      e7 * k7[i]);
        sk[i] = options.atol + options.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      }
      err_norm = weighted_rms(err, sk);
      if (!std::isfinite(err_norm)) err_norm = std::numeric_limits<double>::infinity();
    }

    if (err_norm <= 1.0) {
      Trajectory::DenseStep dense{t, h, std::vector<double>(5 * n)};
      for (std::size_t i = 0; i < n; ++i) {
        const double ydiff = ynew[i] - y[i];
        const double bspl = h * k1[i] - ydiff;
        double* r = &dense.coeffs[5 * i];
        r[0] = y[i];
        r[1] = ydiff;
        r[2] = bspl;
        r[3] = ydiff - h * k7[i] - bspl;
        r[4] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                    d7 * k7[i]);
      }
      traj.dense_.push_back(std::move(dense));
      t = (h == tf - t) ? tf : tnew;
      y.swap(ynew);
      k1.swap(k7);
      traj.samples_.push_back({t, y});
      double fac = err_norm == 0.0 ? 5.0 : safety * std::pow(err_norm, -0.2);
      fac = std::clamp(fac, 0.2, 5.0);
      if (last_rejected) fac = std::min(fac, 1.0);
      h *= fac;
      last_rejected = false;
    } else {
      ++traj.rejected_;
      const double fac = std::isfinite(err_norm)
                             ? std::clamp(safety * std::pow(err_norm, -0.2), 0.1, 1.0)
                             : 0.1;
      h *= fac;
      last_rejected = true;
    }
  }
  return traj;
}

}  // namespace weylbrane
