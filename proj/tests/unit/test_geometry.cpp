#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/zoo.hpp"
#include "weylbrane/errors.hpp"
#include "weylbrane/geometry/curvature.hpp"

namespace weylbrane {
namespace {

using testing::metric_zoo;
using testing::power_curve;

TEST(Curvature, MinkowskiIsFlat) {
  for (int dim : {4, 5}) {
    std::vector<int> sig(static_cast<std::size_t>(dim), -1);
    sig[0] = 1;
    const MetricField eta = MetricField::flat(sig);
    const std::vector<double> x(static_cast<std::size_t>(dim), 0.37);
    const CurvatureBundle c = curvature(eta, x);
    EXPECT_LE(max_abs(c.gamma), 1e-14);
    EXPECT_LE(max_abs(c.riemann), 1e-14);
    EXPECT_LE(max_abs(c.ricci), 1e-14);
    EXPECT_LE(std::abs(c.scalar), 1e-14);
    EXPECT_LE(max_abs(c.einstein), 1e-14);
  }
}

TEST(Curvature, FrwMatterEraEinstein) {
  // a = t^{2/3}: H = 2/(3t), G^t_t = 3H^2 = 4/(3 t^2).
  const MetricField g = frw_metric(power_curve(1.0, 2.0 / 3.0));
  const std::vector<double> x = {1.0, 0.0, 0.0, 0.0};
  const CurvatureBundle c = curvature(g, x);
  EXPECT_NEAR(c.einstein(0, 0), 4.0 / 3.0, 1e-9);
  EXPECT_NEAR(c.einstein_mixed()(0, 0), 4.0 / 3.0, 1e-9);
  const std::vector<double> x2 = {3.0, 0.0, 0.0, 0.0};
  EXPECT_NEAR(curvature(g, x2).einstein_mixed()(0, 0), 4.0 / 27.0, 1e-9);
}

TEST(Christoffel, RadiationFrwComponent) {
  // a = t^{1/2}: Gamma^t_xx = a adot = 1/2.
  const MetricField g = frw_metric(power_curve(1.0, 0.5));
  const std::vector<double> x = {1.0, 0.0, 0.0, 0.0};
  const Rank3<double> G = christoffel(g, x);
  EXPECT_NEAR(G(0, 1, 1), 0.5, 1e-15);
  EXPECT_NEAR(G(1, 0, 1), 0.5, 1e-15);  // H
}

TEST(Christoffel, WarpedMetricLapseComponent) {
  // a = 1, F = ln t: Gamma^t_ll = e^{2F} Fdot = t at t = 2 -> 2.
  WarpedModel m;
  m.a = Curve::constant(1.0);
  m.F = testing::log_curve(0.0, 1.0);
  const std::vector<double> x = {2.0, 0.0, 0.0, 0.0, 0.5};
  EXPECT_NEAR(christoffel(m.metric(), x)(0, 4, 4), 2.0, 1e-14);
}

TEST(Curvature, WarpedEinsteinMatchesHandFormulas) {
  // G^t_t = 3H^2 + 3 Fdot H, G_al = 0, G^l_l = 3(addot/a + H^2).
  for (double p : {0.4, 0.45, 0.5}) {
    const double gamma = 0.7;
    const WarpedModel m = testing::warped(p, gamma);
    for (double t : {1.0, 2.5, 7.0}) {
      const std::vector<double> x = {t, 0.2, -0.1, 0.3, 0.8};
      const CurvatureBundle c = curvature(m.metric(), x);
      const auto mixed = c.einstein_mixed();
      const double H = p / t, Fd = gamma / t, addot = p * (p - 1) / (t * t);
      EXPECT_NEAR(c.einstein(0, 0), 3 * H * H + 3 * Fd * H, 1e-9);
      EXPECT_NEAR(mixed(1, 1), 2 * addot + H * H + 2 * Fd * H - gamma / (t * t) + Fd * Fd, 1e-9);
      EXPECT_NEAR(mixed(4, 4), 3 * (addot + H * H), 1e-9);
      for (int a = 0; a < 4; ++a) EXPECT_LE(std::abs(c.einstein(a, 4)), 1e-10);
    }
  }
  const WarpedModel half = testing::warped(0.5, 0.5);
  const std::vector<double> x = {1.0, 0.0, 0.0, 0.0, 0.0};
  EXPECT_NEAR(curvature(half.metric(), x).einstein(0, 0), 1.5, 1e-12);
}

TEST(Curvature, RiemannSignFlipNegatesEinstein) {
  const MetricField g = frw_metric(power_curve(1.0, 2.0 / 3.0));
  const std::vector<double> x = {1.0, 0.0, 0.0, 0.0};
  const CurvatureBundle a = curvature(g, x);
  const CurvatureBundle b = curvature(g, x, Conventions{-1});
  EXPECT_NEAR(b.einstein(0, 0), -a.einstein(0, 0), 1e-14);
}

TEST(CurvatureProperty, ChristoffelAndEinsteinSymmetric) {
  for (const auto& z : metric_zoo()) {
    SCOPED_TRACE(z.name);
    const CurvatureBundle c = curvature(z.metric, z.point);
    const int n = z.metric.dim();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) EXPECT_LE(std::abs(c.gamma(a, b, d) - c.gamma(a, d, b)), 1e-12);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) EXPECT_LE(std::abs(c.einstein(a, b) - c.einstein(b, a)), 1e-10);
  }
}

TEST(CurvatureProperty, RiemannAntisymmetricInLastPair) {
  for (const auto& z : metric_zoo()) {
    SCOPED_TRACE(z.name);
    const CurvatureBundle c = curvature(z.metric, z.point);
    const int n = z.metric.dim();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q)
            EXPECT_LE(std::abs(c.riemann(a, b, p, q) + c.riemann(a, b, q, p)), 1e-12);
  }
}

TEST(CurvatureProperty, ContractedBianchiIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  for (const auto& z : metric_zoo()) {
    SCOPED_TRACE(z.name);
    for (int k = 0; k < 5; ++k) {
      std::vector<double> x = z.point;
      for (auto& xi : x) xi += jitter(rng);
      const std::vector<double> div = einstein_divergence(z.metric, x);
      for (double v : div) EXPECT_LE(std::abs(v), 1e-8);
    }
  }
}

TEST(CurvatureProperty, ConstantRescalingOfMetric) {
  for (const auto& z : metric_zoo()) {
    SCOPED_TRACE(z.name);
    const CurvatureBundle base = curvature(z.metric, z.point);
    for (double lambda : {2.0, 10.0}) {
      const MetricField inner = z.metric;
      const double l2 = lambda * lambda;
      const MetricField scaled(inner.dim(), inner.signature(), [inner, l2](auto y) {
        auto g = inner.eval(y);
        for (int i = 0; i < g.dim(); ++i)
          for (int j = 0; j < g.dim(); ++j) g(i, j) = l2 * g(i, j);
        return g;
      });
      const CurvatureBundle c = curvature(scaled, z.point);
      const double scale = 1.0 + max_abs(base.riemann);
      EXPECT_LE(max_abs_diff(c.gamma, base.gamma), 1e-12 * (1.0 + max_abs(base.gamma)));
      EXPECT_LE(max_abs_diff(c.riemann, base.riemann), 1e-12 * scale);
      EXPECT_LE(max_abs_diff(c.einstein, base.einstein), 1e-11 * (1.0 + max_abs(base.einstein)));
      EXPECT_NEAR(c.scalar * l2, base.scalar, 1e-11 * (1.0 + std::abs(base.scalar)));
    }
  }
}

TEST(Curvature, SingularMetricThrows) {
  const MetricField bad(2, {1, -1}, [](auto y) {
    using S = typename decltype(y)::value_type;
    Matrix<S> g(2);
    g(0, 0) = y[0];
    g(1, 1) = -1.0;
    return g;
  });
  const std::vector<double> x = {0.0, 0.0};
  EXPECT_THROW(curvature(bad, x), NumericalError);
}

TEST(Curvature, NonFiniteMetricThrows) {
  const MetricField bad = frw_metric(power_curve(1.0, 0.5));
  const std::vector<double> x = {-1.0, 0.0, 0.0, 0.0};
  EXPECT_THROW(curvature(bad, x), NumericalError);
}

TEST(Curvature, WrongPointDimensionThrows) {
  const MetricField eta = MetricField::flat({1, -1, -1, -1});
  const std::vector<double> x = {0.0, 0.0};
  EXPECT_THROW(curvature(eta, x), std::invalid_argument);
}

}  // namespace
}  // namespace weylbrane
