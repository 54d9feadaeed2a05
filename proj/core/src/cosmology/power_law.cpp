#include "weylbrane/cosmology/power_law.hpp"

#include <cmath>
#include <string>

#include "weylbrane/errors.hpp"

namespace weylbrane {
namespace {

std::string p_string(double p) { return format_real(p); }

double checked_root(double p) {
  const double D = discriminant(p);
  if (D < -kDiscriminantTolerance) {
    throw AdmissibilityError("complex exponents: p = " + p_string(p) +
                             " outside admissible range; p must range in the interval "
                             "0 < p <= 1/4 + sqrt(6)/8");
  }
  return D > 0.0 ? std::sqrt(D) : 0.0;
}

}  // namespace

PowerLawScenario PowerLawScenario::from_constants(double p, double a0, double t0, double A1,
                                                  double A2, double C1, double C2, double xi) {
  PowerLawScenario s;
  s.p = p;
  s.a0 = a0;
  s.t0 = t0;
  s.A1 = A1;
  s.A2 = A2;
  s.C1 = C1;
  s.C2 = C2;
  s.xi = xi;
  s.B1 = A1 * std::pow(t0, p) / a0;
  return s;
}

double PowerLawScenario::lambda_coefficient() const {
  const double half = 0.5 * C1;
  return half * half * coupling() / (B1 * B1);
}

double discriminant(double p) { return 1.0 - 32.0 * p * p + 16.0 * p; }

double p_upper_bound() { return 0.25 + std::sqrt(6.0) / 8.0; }

double gamma_exponent(double p, GammaBranch branch) {
  const double root = checked_root(p);
  const double sign = branch == GammaBranch::Plus ? 1.0 : -1.0;
  return (0.5 - p) + sign * 0.5 * root;
}

Curve u_general(const PowerLawScenario& s) {
  const double root = checked_root(s.p);
  const double A1 = s.A1;
  const double A2 = s.A2;
  if (root == 0.0) {
    return Curve([A1, A2](const auto& t) {
      using std::log;
      using std::sqrt;
      return (A1 + A2 * log(t)) * sqrt(t);
    });
  }
  const double m1 = 0.5 + 0.5 * root;
  const double m2 = 0.5 - 0.5 * root;
  return Curve([A1, A2, m1, m2](const auto& t) {
    using std::pow;
    return A1 * pow(t, m1) + A2 * pow(t, m2);
  });
}

Trajectory solve_u_numeric(double p, double u0, double du0, double t0, double tf,
                           const IvpOptions& options) {
  if (!(t0 > 0.0)) throw std::invalid_argument("solve_u_numeric requires t0 > 0");
  const double c = 4.0 * p * (2.0 * p - 1.0);
  const VectorField f = [c](double t, std::span<const double> y, std::span<double> dy) {
    dy[0] = y[1];
    dy[1] = -c / (t * t) * y[0];
  };
  const double y0[2] = {u0, du0};
  return integrate_ivp(f, t0, y0, tf, options);
}

Admissibility admissibility(double p) {
  Admissibility a;
  const double D = discriminant(p);
  a.real_gamma = p > 0.0 && D >= -kDiscriminantTolerance;
  if (D >= -kDiscriminantTolerance) {
    a.omega_decreasing = 2.0 - 2.0 * gamma_exponent(p) > 0.0;
  }
  a.admissible_window = a.real_gamma && a.omega_decreasing;
  a.de_sitter = std::abs(p - 5.0 / 9.0) <= 1e-12;
  return a;
}

Curve lambda_powerlaw(const PowerLawScenario& s) {
  if (s.B1 == 0.0) throw NumericalError("lambda_powerlaw: B1 must be nonzero");
  const double gamma = gamma_exponent(s.p);
  const double K = s.lambda_coefficient();
  return Curve([K, gamma](const auto& t) {
    using std::pow;
    return K * pow(t, -2.0 * gamma);
  });
}

std::function<double(double)> omega_eff_powerlaw(const PowerLawScenario& s) {
  if (s.B1 == 0.0) throw NumericalError("omega_eff_powerlaw: B1 must be nonzero");
  const double g = gamma_exponent(s.p);
  const double K = s.lambda_coefficient();
  const double p = s.p;
  return [g, K, p](double t) {
    const double lambda_term = K * std::pow(t, 2.0 - 2.0 * g);
    const double den = g * g - g + lambda_term;
    if (std::abs(den) <= 1e-14 * (std::abs(g * g - g) + std::abs(lambda_term))) {
      throw NumericalError("omega_eff singular at t = " + format_real(t) +
                           " (vanishing effective density)");
    }
    return -(1.0 - (g * g - g - p * g) / den);
  };
}

WarpedModel warped_model(const PowerLawScenario& s) {
  if (!(s.B1 > 0.0)) throw NumericalError("warped_model: B1 must be positive");
  if (!(s.a0 > 0.0) || !(s.t0 > 0.0)) {
    throw NumericalError("warped_model: a0 and t0 must be positive");
  }
  const double gamma = gamma_exponent(s.p);
  const double log_b1 = std::log(s.B1);
  WarpedModel m;
  m.a = Curve([a0 = s.a0, t0 = s.t0, p = s.p](const auto& t) {
    using std::pow;
    return a0 * pow(t / t0, p);
  });
  m.F = Curve([log_b1, gamma](const auto& t) {
    using std::log;
    return log_b1 + gamma * log(t);
  });
  m.C1 = s.C1;
  m.C2 = s.C2;
  m.xi = s.xi;
  return m;
}

}  // namespace weylbrane
