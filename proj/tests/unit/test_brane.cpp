#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "support/zoo.hpp"
#include "weylbrane/brane/induced.hpp"
#include "weylbrane/cosmology/audit.hpp"
#include "weylbrane/cosmology/power_law.hpp"
#include "weylbrane/errors.hpp"

namespace weylbrane {
namespace {

// g = e^{2 k l} eta (+) -Phi^2 dl^2 with Phi = e^{m l}.
MetricField conformal_bulk(double k, double m) {
  return MetricField(5, {1, -1, -1, -1, -1}, [k, m](auto y) {
    using S = typename decltype(y)::value_type;
    using std::exp;
    const S w = exp(2.0 * k * y[4]);
    Matrix<S> g(5);
    g(0, 0) = w;
    g(1, 1) = g(2, 2) = g(3, 3) = -w;
    g(4, 4) = -exp(2.0 * m * y[4]);
    return g;
  });
}

TEST(InducedStressEnergy, ConformallyFlatBulk) {
  const double k = 0.3, l0 = 0.4;
  const std::vector<double> x = {0.5, 0.1, 0.2, 0.3};
  const Matrix<double> T = induced_stress_energy(conformal_bulk(k, 0.0), LapseModel{ScalarField::constant(1.0)}, l0, x);
  const double c = 2.0 * k * k * std::exp(2.0 * k * l0);
  const double eta[4] = {1, -1, -1, -1};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) EXPECT_NEAR(T(a, b), a == b ? c * eta[a] : 0.0, 1e-13);
}

TEST(InducedStressEnergy, ConformallyFlatBulkWithLapse) {
  const double k = 0.3, m = -0.7, l0 = 0.4;
  const std::vector<double> x = {0.5, 0.1, 0.2, 0.3};
  const LapseModel lapse{ScalarField([m](auto y) {
    using std::exp;
    return exp(m * y[4]);
  })};
  const Matrix<double> T = induced_stress_energy(conformal_bulk(k, m), lapse, l0, x);
  const double c = k * (2.0 * k + m) * std::exp(-2.0 * m * l0) * std::exp(2.0 * k * l0);
  EXPECT_NEAR(T(0, 0), c, 1e-13);
  EXPECT_NEAR(T(2, 2), -c, 1e-13);
  EXPECT_NEAR(T(0, 3), 0.0, 1e-13);
}

TEST(InducedStressEnergy, PowerLawFluid) {
  const double p = 0.45, g = gamma_exponent(p);
  const WarpedModel m = warped_model(PowerLawScenario{});
  for (double t : {1.0, 4.0, 30.0}) {
    const InducedFluid f = induced_stress_energy_frw(m.F, m.a, t);
    EXPECT_NEAR(f.rho_im, (g * g - g) / (t * t), 1e-14);
    EXPECT_NEAR(f.p_im, -p * g / (t * t), 1e-14);
  }
}

TEST(InducedStressEnergy, GeneralFormulaMatchesFrwReduction) {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> pd(0.34, 0.55), cd(0.5, 2.0), td(1.0, 50.0), ld(-1.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const PowerLawScenario s =
        PowerLawScenario::from_constants(pd(rng), cd(rng), cd(rng), cd(rng), 0.0, cd(rng), 0.0, 1.0);
    const WarpedModel m = warped_model(s);
    const double t = td(rng);
    const std::vector<double> x = {t, 0.0, 0.0, 0.0};
    const Matrix<double> general = induced_stress_energy(m.metric(), m.lapse(), ld(rng), x);
    const Matrix<double> reduced = induced_stress_energy_frw_tensor(m.F, m.a, t);
    EXPECT_LE(max_abs_diff(general, reduced), 1e-10);
  }
}

TEST(InduceMetric, SlicesBlockMetric) {
  const WarpedModel m = testing::warped(0.5, 0.5);
  const std::vector<double> probe = {2.0, 0.0, 0.0, 0.0};
  const InducedGeometry h = induce_metric(m.metric(), 0.3, probe);
  const Matrix<double> h4 = h.metric4(probe);
  EXPECT_EQ(h4.dim(), 4);
  EXPECT_DOUBLE_EQ(h4(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(h4(1, 1), -2.0);
}

TEST(InduceMetric, RejectsMixedComponents) {
  const MetricField tilted(5, {1, -1, -1, -1, -1}, [](auto y) {
    using S = typename decltype(y)::value_type;
    Matrix<S> g = Matrix<S>::diagonal({S(1.0), S(-1.0), S(-1.0), S(-1.0), S(-1.0)});
    g(1, 4) = g(4, 1) = 0.2 + 0.0 * y[0];
    return g;
  });
  const std::vector<double> probe = {1.0, 0.0, 0.0, 0.0};
  EXPECT_THROW(induce_metric(tilted, 0.0, probe), FoliationError);
  const InducedGeometry lazy = induce_metric(tilted, 0.0);
  EXPECT_THROW(lazy.metric4(probe), FoliationError);
}

TEST(LambdaInduced, Values) {
  EXPECT_DOUBLE_EQ(lambda_induced(1.0, 2.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(lambda_induced(2.0, 2.0, 1.2), 0.0);
  EXPECT_THROW(lambda_induced(0.0, 1.0, 1.0), NumericalError);
}

TEST(LambdaInduced, MatchesPowerLawClosedForm) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> pd(0.34, 0.55), cd(0.5, 2.0), xd(0.8, 1.15), td(1.0, 100.0);
  for (int trial = 0; trial < 12; ++trial) {
    const PowerLawScenario s = PowerLawScenario::from_constants(pd(rng), cd(rng), cd(rng), cd(rng), 0.0,
                                                                cd(rng), cd(rng), xd(rng));
    const WarpedModel m = warped_model(s);
    const double t = td(rng);
    const std::vector<double> x = {t, 0.0, 0.0, 0.0, 0.0};
    const double a = lambda_induced(m.lapse().at(x), s.C1, s.xi);
    const double b = lambda_powerlaw(s)(t);
    EXPECT_LE(std::abs(a - b), 1e-12 * std::abs(b));
  }
}

TEST(EffectiveFluid, MatchesPowerLawOmega) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> pd(0.34, 0.55), cd(0.5, 2.0), xd(0.8, 1.15);
  int compared = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const PowerLawScenario s = PowerLawScenario::from_constants(pd(rng), cd(rng), cd(rng), cd(rng), 0.0,
                                                                cd(rng), cd(rng), xd(rng));
    const WarpedModel m = warped_model(s);
    const auto w = omega_eff_powerlaw(s);
    const LambdaFunction lam = [&](double t) { return lambda_warped(m, t); };
    for (double t : TimeGrid{}.points()) {
      const BraneState st = effective_fluid(m.F, m.a, lam, t);
      EXPECT_NEAR(st.omega_eff, w(t), 1e-9 * std::max(1.0, std::abs(w(t))));
      EXPECT_NEAR(st.omega_eff_bracket, st.omega_eff, 1e-9 * std::max(1.0, std::abs(w(t))));
      ++compared;
    }
  }
  EXPECT_EQ(compared, 12 * 16);
}

TEST(EffectiveFluid, DeSitterPoint) {
  PowerLawScenario s;
  s.p = 5.0 / 9.0;
  const WarpedModel m = warped_model(s);
  const LambdaFunction lam = [&](double t) { return lambda_warped(m, t); };
  for (double t : TimeGrid{}.points()) {
    const BraneState st = effective_fluid(m.F, m.a, lam, t);
    EXPECT_NEAR(st.omega_eff, -1.0, 1e-12);
    EXPECT_NEAR(st.lambda, 0.25, 1e-12);
  }
}

TEST(EffectiveFluid, VanishingDensityThrows) {
  PowerLawScenario s;
  s.p = 0.5;
  const WarpedModel m = warped_model(s);
  const LambdaFunction lam = [&](double t) { return lambda_warped(m, t); };
  EXPECT_THROW(effective_fluid(m.F, m.a, lam, 1.0), NumericalError);
}

TEST(BraneCsv, HeaderAndRows) {
  const WarpedModel m = warped_model(PowerLawScenario{});
  const LambdaFunction lam = [&](double t) { return lambda_warped(m, t); };
  std::vector<BraneState> states = {effective_fluid(m.F, m.a, lam, 1.0), effective_fluid(m.F, m.a, lam, 2.0)};
  std::ostringstream out;
  write_brane_csv(out, states);
  const std::string csv = out.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,a,F,rho_im,p_im,lambda,rho_eff,p_eff,omega_eff");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv.back(), '\n');
}

TEST(BraneEquations, ResidualIds) {
  const WarpedModel m = warped_model(PowerLawScenario{});
  const LambdaFunction lam = [&](double t) { return lambda_warped(m, t); };
  const ResidualReport r = brane_residuals(m.F, m.a, lam, 2.0);
  EXPECT_TRUE(r.contains("eq33"));
  EXPECT_TRUE(r.contains("eq34"));
  // eq33 = 3H^2 - rho_im - Lambda by hand.
  const double p = 0.45, g = gamma_exponent(p), t = 2.0;
  const double expected = 3 * p * p / (t * t) - (g * g - g) / (t * t) - 0.25 * std::pow(t, -2 * g);
  EXPECT_NEAR(r.at("eq33").rows[0].residual, expected, 1e-13);
}

}  // namespace
}  // namespace weylbrane
