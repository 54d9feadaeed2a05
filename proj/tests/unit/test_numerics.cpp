#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "weylbrane/errors.hpp"
#include "weylbrane/numerics/functions.hpp"
#include "weylbrane/numerics/ivp.hpp"
#include "weylbrane/numerics/jet.hpp"

namespace weylbrane {
namespace {

TEST(Jet, ConstantLiftHasZeroDerivatives) {
  const Jet c(3.5);
  EXPECT_EQ(c.value, 3.5);
  EXPECT_EQ(c.d1, 0.0);
  EXPECT_EQ(c.d2, 0.0);
  const NestedJet n(2.0);
  EXPECT_EQ(n.d1.value, 0.0);
  EXPECT_EQ(n.value.d1, 0.0);
}

TEST(Derivative, CubicFirstDerivative) {
  const Curve f([](const auto& t) { return t * t * t; });
  EXPECT_DOUBLE_EQ(derivative(f, 2.0, 1), 12.0);
  EXPECT_DOUBLE_EQ(derivative(f, 2.0, 2), 12.0);
}

TEST(Derivative, SineSecondDerivativeAtZero) {
  const Curve f([](const auto& t) {
    using std::sin;
    return sin(t);
  });
  EXPECT_EQ(derivative(f, 0.0, 2), 0.0);
  EXPECT_DOUBLE_EQ(derivative(f, 0.0, 1), 1.0);
}

TEST(Derivative, LogPowerLaw) {
  // d/dt ln(B1 t^gamma) = gamma / t.
  const Curve f([](const auto& t) {
    using std::log;
    using std::pow;
    return log(1.0 * pow(t, 0.5));
  });
  EXPECT_NEAR(derivative(f, 4.0, 1), 0.125, 1e-15);
  EXPECT_NEAR(derivative(f, 4.0, 2), -0.5 / 16.0, 1e-15);
}

TEST(Derivative, OutsideDomainThrows) {
  const Curve f([](const auto& t) {
    using std::log;
    return log(t);
  });
  EXPECT_THROW(derivative(f, -1.0, 1), NumericalError);
  EXPECT_THROW(derivative(f, 1.0, 3), std::invalid_argument);
}

TEST(Jet, QuotientAndTranscendentalRules) {
  const Jet x = Jet::variable(0.7);
  const Jet q = exp(x) / (1.0 + x * x);
  // Closed form: q = e^x/(1+x^2).
  const double v = 0.7, e = std::exp(v), d = 1 + v * v;
  const double q1 = e / d - 2 * v * e / (d * d);
  const double q2 = e / d - 4 * v * e / (d * d) - 2 * e / (d * d) + 8 * v * v * e / (d * d * d);
  EXPECT_NEAR(q.value, e / d, 1e-15);
  EXPECT_NEAR(q.d1, q1, 1e-14);
  EXPECT_NEAR(q.d2, q2, 1e-14);

  const Jet s = sqrt(x);
  EXPECT_NEAR(s.d2, -0.25 * std::pow(v, -1.5), 1e-14);
  const Jet c = cos(x) * sin(x);  // = sin(2x)/2
  EXPECT_NEAR(c.d2, -2.0 * std::sin(2 * v), 1e-14);
  const Jet th = tanh(x);
  EXPECT_NEAR(th.d1, 1.0 / (std::cosh(v) * std::cosh(v)), 1e-15);
  const Jet at = atan(x);
  EXPECT_NEAR(at.d2, -2 * v / ((1 + v * v) * (1 + v * v)), 1e-15);
}

TEST(Jet, NestedJetGivesMixedThirdDerivative) {
  // f(x, y) = x^2 y^3; inner direction y, outer direction x.
  const Jet y = Jet::variable(1.5);
  const NestedJet x = NestedJet::variable(Jet(2.0));
  const NestedJet f = x * x * y * y * y;
  // d2/dx2 f = 2 y^3, then d/dy = 6 y^2.
  EXPECT_NEAR(f.d2.d1, 6.0 * 1.5 * 1.5, 1e-13);
  // d/dx d/dy f = 2x * 3y^2.
  EXPECT_NEAR(f.d1.d1, 2.0 * 2.0 * 3.0 * 1.5 * 1.5, 1e-13);
}

// Random polynomials up to degree 6: jet derivatives against a long-double
// evaluation of the symbolic derivative coefficients.
TEST(JetProperty, PolynomialDerivativesWithinEightUlp) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> degree(0, 6);
  std::uniform_real_distribution<double> coef(0.1, 1.0);
  std::uniform_real_distribution<double> point(0.25, 2.0);
  const auto ulp = [](double r) {
    return std::nextafter(std::abs(r), std::numeric_limits<double>::infinity()) - std::abs(r);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> c(static_cast<std::size_t>(degree(rng) + 1));
    for (auto& ci : c) ci = coef(rng);
    const double x = point(rng);
    Jet acc(0.0);
    const Jet xj = Jet::variable(x);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * xj + Jet(*it);

    long double p = 0, p1 = 0, p2 = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const long double ck = c[k];
      p += ck * std::pow(static_cast<long double>(x), static_cast<long double>(k));
      if (k >= 1) p1 += ck * k * std::pow(static_cast<long double>(x), static_cast<long double>(k - 1));
      if (k >= 2)
        p2 += ck * k * (k - 1) * std::pow(static_cast<long double>(x), static_cast<long double>(k - 2));
    }
    ASSERT_LE(std::abs(acc.value - static_cast<double>(p)), 8 * ulp(static_cast<double>(p)));
    ASSERT_LE(std::abs(acc.d1 - static_cast<double>(p1)), 8 * ulp(static_cast<double>(p1)) + 0.0);
    ASSERT_LE(std::abs(acc.d2 - static_cast<double>(p2)), 8 * ulp(static_cast<double>(p2)) + 0.0);
  }
}

TEST(Ivp, ExponentialDecay) {
  const VectorField f = [](double, std::span<const double> y, std::span<double> dy) {
    dy[0] = -y[0];
  };
  const double y0[1] = {1.0};
  const Trajectory traj = integrate_ivp(f, 0.0, y0, 1.0);
  EXPECT_NEAR(traj.at(1.0, 0), 0.36787944117144233, 1e-9);
  EXPECT_NEAR(traj.at(0.5, 0), std::exp(-0.5), 1e-9);
  EXPECT_EQ(traj.options().rtol, 1e-10);
  EXPECT_EQ(traj.options().atol, 1e-10);
}

TEST(Ivp, IdentityFlowIsConstant) {
  const VectorField f = [](double, std::span<const double>, std::span<double> dy) {
    dy[0] = 0.0;
    dy[1] = 0.0;
  };
  const double y0[2] = {2.5, -1.0};
  const Trajectory traj = integrate_ivp(f, 0.0, y0, 10.0);
  for (double t : {0.0, 0.3, 4.0, 10.0}) {
    EXPECT_EQ(traj.at(t, 0), 2.5);
    EXPECT_EQ(traj.at(t, 1), -1.0);
  }
}

TEST(Ivp, SamplesStrictlyIncreasingAndFinite) {
  const VectorField f = [](double t, std::span<const double> y, std::span<double> dy) {
    dy[0] = y[1];
    dy[1] = -y[0] + std::sin(t);
  };
  const double y0[2] = {1.0, 0.0};
  const Trajectory traj = integrate_ivp(f, 0.0, y0, 20.0);
  const auto& s = traj.samples();
  ASSERT_GE(s.size(), 3u);
  for (std::size_t i = 1; i < s.size(); ++i) {
    EXPECT_GT(s[i].t, s[i - 1].t);
    for (double v : s[i].state) EXPECT_TRUE(std::isfinite(v));
  }
  EXPECT_EQ(s.back().t, 20.0);
}

TEST(Ivp, ZeroCoefficientEulerEquationGivesLine) {
  // u'' + 4p(2p-1)/t^2 u = 0 with p = 1/2 is u'' = 0.
  const double p = 0.5;
  const VectorField f = [p](double t, std::span<const double> y, std::span<double> dy) {
    dy[0] = y[1];
    dy[1] = -4.0 * p * (2.0 * p - 1.0) / (t * t) * y[0];
  };
  const double y0[2] = {1.0, 1.0};
  const Trajectory traj = integrate_ivp(f, 1.0, y0, 10.0);
  for (double t = 1.0; t <= 10.0; t += 0.25) {
    EXPECT_NEAR(traj.at(t, 0), t, 1e-8 * t);
  }
}

TEST(Ivp, TighterToleranceReducesError) {
  const VectorField f = [](double, std::span<const double> y, std::span<double> dy) {
    dy[0] = y[1];
    dy[1] = -y[0];
  };
  const double y0[2] = {0.0, 1.0};
  double previous = std::numeric_limits<double>::infinity();
  for (double tol : {1e-5, 1e-7, 1e-9, 1e-11}) {
    const Trajectory traj = integrate_ivp(f, 0.0, y0, 10.0, {tol, tol});
    double err = 0.0;
    for (double t = 0.0; t <= 10.0; t += 0.1) err = std::max(err, std::abs(traj.at(t, 0) - std::sin(t)));
    EXPECT_LT(err, previous);
    previous = err;
  }
}

TEST(Ivp, DeterministicOutput) {
  const VectorField f = [](double t, std::span<const double> y, std::span<double> dy) {
    dy[0] = -2.0 * t * y[0];
  };
  const double y0[1] = {1.0};
  const Trajectory a = integrate_ivp(f, 0.0, y0, 3.0);
  const Trajectory b = integrate_ivp(f, 0.0, y0, 3.0);
  ASSERT_EQ(a.samples().size(), b.samples().size());
  for (std::size_t i = 0; i < a.samples().size(); ++i) {
    EXPECT_EQ(a.samples()[i].t, b.samples()[i].t);
    EXPECT_EQ(a.samples()[i].state, b.samples()[i].state);
  }
  EXPECT_EQ(a.at(1.2345), b.at(1.2345));
}

TEST(Ivp, SingularityAtZeroUnderflows) {
  // y' = 1/t has y = ln|t| + c, which blows up at t = 0.
  const VectorField f = [](double t, std::span<const double>, std::span<double> dy) {
    dy[0] = 1.0 / t;
  };
  const double y0[1] = {0.0};
  EXPECT_THROW(integrate_ivp(f, -1.0, y0, 1.0), NumericalError);
}

TEST(Ivp, RejectsBackwardInterval) {
  const VectorField f = [](double, std::span<const double>, std::span<double> dy) { dy[0] = 0; };
  const double y0[1] = {0.0};
  EXPECT_THROW(integrate_ivp(f, 1.0, y0, 1.0), std::invalid_argument);
  const Trajectory traj = integrate_ivp(f, 0.0, y0, 1.0);
  EXPECT_THROW(traj.at(1.5), std::out_of_range);
}

}  // namespace
}  // namespace weylbrane
