#include <cmath>
#include <cstdio>
#include <functional>

#include "weylbrane/cli/commands.hpp"
#include "weylbrane/cosmology/warped_model.hpp"
#include "weylbrane/geometry/curvature.hpp"
#include "weylbrane/weyl/frame.hpp"
#include "weylbrane/weyl/report.hpp"

namespace weylbrane::cli {

namespace {

Curve power(double p) {
  return Curve([p](const auto& t) {
    using std::pow;
    return pow(t, p);
  });
}

Curve log_warp(double gamma) {
  return Curve([gamma](const auto& t) {
    using std::log;
    return gamma * log(t);
  });
}

WarpedModel warped(double p, double gamma) {
  WarpedModel m;
  m.a = power(p);
  m.F = log_warp(gamma);
  return m;
}

struct Golden {
  MetricField metric;
  std::vector<double> point;
};

// Fixed points only: the command must be bit-for-bit reproducible.
std::vector<Golden> zoo() {
  return {
      {MetricField::flat({1, -1, -1, -1}), {0.3, 0.1, -0.2, 0.5}},
      {MetricField::flat({1, -1, -1, -1, -1}), {0.3, 0.1, -0.2, 0.5, 1.0}},
      {frw_metric(power(2.0 / 3.0)), {1.7, 0.0, 0.3, 0.0}},
      {warped(0.45, 0.7).metric(), {2.3, 0.1, 0.0, -0.4, 0.7}},
  };
}

double max_abs_vec(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<CheckResult> run_golden_checks(const ValidateOptions& options) {
  const Conventions conv{options.flip_riemann_sign ? -1 : 1};
  std::vector<CheckResult> out;
  const auto check = [&out](std::string name, double tol, const std::function<double()>& err) {
    double e = 0.0;
    try {
      e = err();
    } catch (const std::exception&) {
      e = std::numeric_limits<double>::infinity();
    }
    out.push_back({std::move(name), e <= tol, e, tol});
  };

  check("minkowski4: curvature vanishes", 1e-14, [&] {
    const std::vector<double> x = {0.3, 0.1, -0.2, 0.5};
    const auto c = curvature(MetricField::flat({1, -1, -1, -1}), x, conv);
    return std::max({max_abs(c.gamma), max_abs(c.riemann), max_abs(c.einstein)});
  });
  check("minkowski5: curvature vanishes", 1e-14, [&] {
    const std::vector<double> x = {0.3, 0.1, -0.2, 0.5, 1.0};
    const auto c = curvature(MetricField::flat({1, -1, -1, -1, -1}), x, conv);
    return std::max({max_abs(c.gamma), max_abs(c.riemann), max_abs(c.einstein)});
  });
  check("frw a=t^(2/3): G^t_t = 3H^2", 1e-9, [&] {
    const std::vector<double> x = {1.5, 0.0, 0.0, 0.0};
    const double H = 2.0 / (3.0 * 1.5);
    return std::abs(curvature(frw_metric(power(2.0 / 3.0)), x, conv).einstein_mixed()(0, 0) - 3 * H * H);
  });
  check("frw a=t^(2/3): G^x_x = 2a''/a + H^2", 1e-9, [&] {
    const double t = 1.5, p = 2.0 / 3.0, H = p / t;
    const std::vector<double> x = {t, 0.0, 0.0, 0.0};
    const double expected = 2.0 * p * (p - 1.0) / (t * t) + H * H;
    return std::abs(curvature(frw_metric(power(p)), x, conv).einstein_mixed()(1, 1) - expected);
  });
  check("frw a=t^(1/2): Gamma^t_xx = a a'", 1e-14, [&] {
    const std::vector<double> x = {1.0, 0.0, 0.0, 0.0};
    return std::abs(christoffel(frw_metric(power(0.5)), x)(0, 1, 1) - 0.5);
  });
  check("warped: G^t_t = 3H^2 + 3F'H", 1e-9, [&] {
    const double p = 0.45, g = 0.7, t = 2.0;
    const std::vector<double> x = {t, 0.0, 0.0, 0.0, 0.3};
    const double H = p / t, Fd = g / t;
    return std::abs(curvature(warped(p, g).metric(), x, conv).einstein_mixed()(0, 0) -
                    (3 * H * H + 3 * Fd * H));
  });
  check("warped: G^l_l = 3(a''/a + H^2)", 1e-9, [&] {
    const double p = 0.45, g = 0.7, t = 2.0;
    const std::vector<double> x = {t, 0.0, 0.0, 0.0, 0.3};
    const double H = p / t;
    return std::abs(curvature(warped(p, g).metric(), x, conv).einstein_mixed()(4, 4) -
                    3 * (p * (p - 1) / (t * t) + H * H));
  });
  check("warped: G_al = 0", 1e-10, [&] {
    const std::vector<double> x = {2.0, 0.0, 0.0, 0.0, 0.3};
    const auto c = curvature(warped(0.45, 0.7).metric(), x, conv);
    double m = 0.0;
    for (int a = 0; a < 4; ++a) m = std::max(m, std::abs(c.einstein(a, 4)));
    return m;
  });
  check("zoo: Christoffel symmetric in lower indices", 1e-12, [&] {
    double m = 0.0;
    for (const auto& z : zoo()) {
      const auto G = christoffel(z.metric, z.point);
      const int n = z.metric.dim();
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) m = std::max(m, std::abs(G(a, b, c) - G(a, c, b)));
    }
    return m;
  });
  check("zoo: Einstein tensor symmetric", 1e-10, [&] {
    double m = 0.0;
    for (const auto& z : zoo()) {
      const auto c = curvature(z.metric, z.point, conv);
      const int n = z.metric.dim();
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m = std::max(m, std::abs(c.einstein(a, b) - c.einstein(b, a)));
    }
    return m;
  });
  check("zoo: contracted Bianchi identity", 1e-8, [&] {
    double m = 0.0;
    for (const auto& z : zoo()) m = std::max(m, max_abs_vec(einstein_divergence(z.metric, z.point)));
    return m;
  });
  check("weyl: constant phi reduces to Levi-Civita", 0.0, [&] {
    double m = 0.0;
    for (const auto& z : zoo())
      m = std::max(m, max_abs_diff(weyl_connection(z.metric, ScalarField::constant(2.0), z.point),
                                   christoffel(z.metric, z.point)));
    return m;
  });
  check("weyl: compatibility residual vanishes", 1e-10, [&] {
    double m = 0.0;
    const ScalarField phi([](auto y) {
      using std::sin;
      return 0.3 * y[0] + 0.2 * sin(y[1]) * y[0];
    });
    for (const auto& z : zoo())
      m = std::max(m, max_abs(compatibility_residual(WeylFrame{z.metric, phi, 1.0}, z.point)));
    return m;
  });
  check("weyl: minkowski5 with phi = l, G^W = diag(-3/4, 3/4, 3/4, 3/4, 3/2)", 1e-14, [&] {
    const std::vector<double> x = {0.1, 0.2, 0.3, 0.4, 0.5};
    const auto c = weyl_curvature(MetricField::flat({1, -1, -1, -1, -1}), ScalarField::linear(4, 1.0), x, conv);
    const double expected[5] = {-0.75, 0.75, 0.75, 0.75, 1.5};
    double m = 0.0;
    for (int i = 0; i < 5; ++i) m = std::max(m, std::abs(c.einstein(i, i) - expected[i]));
    return m;
  });
  return out;
}

std::string render_validate(const std::vector<CheckResult>& results) {
  std::string s;
  int passed = 0;
  for (const auto& r : results) {
    s += (r.passed ? "PASS  " : "FAIL  ") + r.name + "  (error " + format_real(r.error) +
         ", tolerance " + format_real(r.tolerance) + ")\n";
    passed += r.passed ? 1 : 0;
  }
  s += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
  for (const auto& r : results)
    if (!r.passed) s += "failed: " + r.name + "\n";
  return s;
}

}  // namespace weylbrane::cli
