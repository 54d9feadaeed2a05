#include "weylbrane/weyl/frame.hpp"

#include <cmath>

#include "detail/engine.hpp"
#include "weylbrane/errors.hpp"

namespace weylbrane {

double LapseModel::at(std::span<const double> point) const {
  const double v = Phi(point);
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw NumericalError("lapse must be strictly positive at point " +
                         detail::describe_point(point));
  }
  return v;
}

Rank3<double> compatibility_residual(const WeylFrame& frame, std::span<const double> point) {
  const auto mj = detail::metric_jet<double>(frame.metric, point, 1);
  const auto sj = detail::scalar_jet<double>(frame.phi, point);
  auto conn = detail::levi_civita(mj, false);
  detail::add_weyl_part(conn, mj, sj);
  const int n = mj.n;
  Rank3<double> r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        double s = mj.dg[static_cast<std::size_t>(a)](b, c);
        for (int d = 0; d < n; ++d) {
          s -= conn.gamma(d, a, b) * mj.g(d, c) + conn.gamma(d, a, c) * mj.g(b, d);
        }
        r(a, b, c) = s - sj.d[static_cast<std::size_t>(a)] * mj.g(b, c);
      }
  return r;
}

WeylFrame frame_transform(const WeylFrame& frame, const ScalarField& f) {
  MetricField g = frame.metric;
  ScalarField phi = frame.phi;
  MetricField gbar(g.dim(), g.signature(), [g, f](auto y) {
    using S = typename decltype(y)::value_type;
    using std::exp;
    Matrix<S> m = g.eval<S>(y);
    const S w = exp(-f.eval<S>(y));
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) m(i, j) = w * m(i, j);
    return m;
  });
  ScalarField phibar([phi, f](auto y) {
    using S = typename decltype(y)::value_type;
    return phi.eval<S>(y) - f.eval<S>(y);
  });
  return WeylFrame{std::move(gbar), std::move(phibar), frame.xi};
}

}  // namespace weylbrane
