#include "weylbrane/geometry/curvature.hpp"

#include "detail/engine.hpp"

namespace weylbrane {
namespace {

using detail::Connection;
using detail::MetricJet;

CurvatureBundle assemble(std::span<const double> point, const MetricJet<double>& mj,
                         const Connection<double>& conn, Conventions conventions) {
  const auto curv = detail::curvature_from(conn, mj, conventions.riemann_sign);
  CurvatureBundle b;
  b.point.assign(point.begin(), point.end());
  b.metric = mj.g;
  b.inverse_metric = mj.ginv;
  b.gamma = conn.gamma;
  b.riemann = curv.riemann;
  b.ricci = curv.ricci;
  b.scalar = curv.scalar;
  b.einstein = curv.einstein;
  return b;
}

}  // namespace

Matrix<double> CurvatureBundle::einstein_mixed() const {
  const int n = einstein.dim();
  Matrix<double> m(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (int c = 0; c < n; ++c) s += inverse_metric(a, c) * einstein(c, b);
      m(a, b) = s;
    }
  return m;
}

Rank3<double> christoffel(const MetricField& metric, std::span<const double> point) {
  const auto mj = detail::metric_jet<double>(metric, point, 1);
  return detail::levi_civita(mj, false).gamma;
}

CurvatureBundle curvature(const MetricField& metric, std::span<const double> point,
                          Conventions conventions) {
  const auto mj = detail::metric_jet<double>(metric, point, 2);
  return assemble(point, mj, detail::levi_civita(mj, true), conventions);
}

Rank3<double> weyl_connection(const MetricField& metric, const ScalarField& phi,
                              std::span<const double> point) {
  const auto mj = detail::metric_jet<double>(metric, point, 1);
  auto conn = detail::levi_civita(mj, false);
  detail::add_weyl_part(conn, mj, detail::scalar_jet<double>(phi, point));
  return conn.gamma;
}

CurvatureBundle weyl_curvature(const MetricField& metric, const ScalarField& phi,
                               std::span<const double> point, Conventions conventions) {
  const auto mj = detail::metric_jet<double>(metric, point, 2);
  auto conn = detail::levi_civita(mj, true);
  detail::add_weyl_part(conn, mj, detail::scalar_jet<double>(phi, point));
  return assemble(point, mj, conn, conventions);
}

std::vector<double> einstein_divergence(const MetricField& metric,
                                        std::span<const double> point) {
  const int n = metric.dim();
  // d_e G^ab for every e, from the pipeline run on jets seeded along e.
  std::vector<Matrix<double>> dG(static_cast<std::size_t>(n), Matrix<double>(n));
  Matrix<double> Gup(n);
  Rank3<double> gamma(n);
  for (int e = 0; e < n; ++e) {
    std::vector<Jet> x;
    for (int i = 0; i < n; ++i) {
      x.push_back(Jet::variable(point[static_cast<std::size_t>(i)], i == e ? 1.0 : 0.0));
    }
    const auto mj = detail::metric_jet<Jet>(metric, x, 2);
    const auto conn = detail::levi_civita(mj, true);
    const auto curv = detail::curvature_from(conn, mj, 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Jet s(0.0);
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) s = s + mj.ginv(a, c) * mj.ginv(b, d) * curv.einstein(c, d);
        dG[static_cast<std::size_t>(e)](a, b) = s.d1;
        if (e == 0) Gup(a, b) = s.value;
      }
    if (e == 0) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) gamma(a, b, c) = conn.gamma(a, b, c).value;
    }
  }
  std::vector<double> div(static_cast<std::size_t>(n), 0.0);
  for (int b = 0; b < n; ++b) {
    double s = 0.0;
    for (int a = 0; a < n; ++a) {
      s += dG[static_cast<std::size_t>(a)](a, b);
      for (int e = 0; e < n; ++e) s += gamma(a, a, e) * Gup(e, b) + gamma(b, a, e) * Gup(a, e);
    }
    div[static_cast<std::size_t>(b)] = s;
  }
  return div;
}

}  // namespace weylbrane
