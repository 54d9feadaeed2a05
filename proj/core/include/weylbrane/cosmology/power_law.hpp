#pragma once

#include <functional>

#include "weylbrane/cosmology/warped_model.hpp"
#include "weylbrane/numerics/functions.hpp"
#include "weylbrane/numerics/ivp.hpp"

namespace weylbrane {

/// Power-law brane a(t) = a0 (t/t0)^p with warp e^F = B1 t^gamma.
struct PowerLawScenario {
  double p = 0.45;
  double a0 = 1.0;
  double t0 = 1.0;
  double A1 = 1.0;
  double A2 = 0.0;
  double B1 = 1.0;
  double C1 = 1.0;
  double C2 = 0.0;
  double xi = 1.0;

  /// Builds the scenario with B1 = A1 t0^p / a0.
  static PowerLawScenario from_constants(double p, double a0, double t0, double A1, double A2,
                                         double C1, double C2, double xi);

  double coupling() const { return 6.0 - 5.0 * xi; }
  /// (C1/2)^2 (6 - 5xi) B1^-2, the prefactor of t^{-2 gamma} in Lambda(t).
  double lambda_coefficient() const;
};

/// Discriminants within this distance below zero are treated as zero
/// (the repeated-root boundary).
inline constexpr double kDiscriminantTolerance = 1e-12;

/// 1 - 32 p^2 + 16 p.
double discriminant(double p);

/// Upper end of the real-exponent window, 1/4 + sqrt(6)/8.
double p_upper_bound();

enum class GammaBranch { Plus, Minus };

/// gamma = (1/2 - p) +/- (1/2) sqrt(1 - 32p^2 + 16p). The Plus branch is the
/// A2 = 0 particular solution. Throws AdmissibilityError when the
/// discriminant is negative.
double gamma_exponent(double p, GammaBranch branch = GammaBranch::Plus);

/// General solution of u'' + 4p(2p-1)/t^2 u = 0:
///   A1 t^{1/2 + sqrt(D)/2} + A2 t^{1/2 - sqrt(D)/2}   for D > 0,
///   (A1 + A2 ln t) sqrt(t)                            for D = 0.
Curve u_general(const PowerLawScenario& scenario);

/// Numerical solution of u'' + 4p(2p-1)/t^2 u = 0 from (t0, u0, du0) to tf.
/// State vector is (u, u').
Trajectory solve_u_numeric(double p, double u0, double du0, double t0, double tf,
                           const IvpOptions& options = {});

struct Admissibility {
  bool real_gamma = false;         // D >= 0 and p > 0
  bool omega_decreasing = false;   // 2 - 2 gamma > 0
  bool admissible_window = false;  // both of the above
  bool de_sitter = false;          // p = 5/9 within 1e-12
};

Admissibility admissibility(double p);

/// Lambda(t) = (C1/2)^2 (6 - 5xi) B1^-2 t^{-2 gamma}.
Curve lambda_powerlaw(const PowerLawScenario& scenario);

/// omega_eff(t) = -[1 - (g^2 - g - p g) / (g^2 - g + K t^{2-2g})], g = gamma,
/// K = lambda_coefficient(). The returned function throws NumericalError
/// where the denominator vanishes.
std::function<double(double)> omega_eff_powerlaw(const PowerLawScenario& scenario);

/// The warped bulk realizing the scenario: a = a0 (t/t0)^p,
/// F = ln(B1 t^gamma), phi = C1 l + C2. Requires B1 > 0 and real gamma.
WarpedModel warped_model(const PowerLawScenario& scenario);

}  // namespace weylbrane
