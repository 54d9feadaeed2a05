#include "weylbrane/weyl/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail/engine.hpp"
#include "weylbrane/errors.hpp"

namespace weylbrane {
namespace {

std::vector<double> flatten(const Matrix<double>& m, int rows, int cols) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(rows * cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) v.push_back(m(i, j));
  return v;
}

struct LeviCivitaState {
  detail::MetricJet<double> mj;
  detail::ScalarJet<double> sj;
  detail::Connection<double> conn;
  detail::CurvatureT<double> curv;
};

LeviCivitaState levi_civita_state(const WeylFrame& frame, std::span<const double> point) {
  LeviCivitaState s;
  s.mj = detail::metric_jet<double>(frame.metric, point, 2);
  s.sj = detail::scalar_jet<double>(frame.phi, point);
  s.conn = detail::levi_civita(s.mj, true);
  s.curv = detail::curvature_from(s.conn, s.mj, 1);
  return s;
}

// d_l Q for Q = sqrt|g| Phi^-2 phi_l^power, by running the pipeline on jets
// seeded along l.
double conserved_flux_derivative(const WeylFrame& frame, const LapseModel& lapse,
                                 std::span<const double> point, int power) {
  const int n = frame.metric.dim();
  std::vector<Jet> x;
  for (int i = 0; i < n; ++i) {
    x.push_back(Jet::variable(point[static_cast<std::size_t>(i)], i == n - 1 ? 1.0 : 0.0));
  }
  const std::span<const Jet> xs(x);
  const Matrix<Jet> g = frame.metric.eval<Jet>(xs);
  Jet det = detail::determinant(g);
  if (det < Jet(0.0)) det = -det;
  const Jet Phi = lapse.Phi.eval<Jet>(xs);
  const Jet phi_l = detail::scalar_jet<Jet>(frame.phi, xs).d[static_cast<std::size_t>(n - 1)];
  Jet q = sqrt(det) / (Phi * Phi);
  for (int k = 0; k < power; ++k) q = q * phi_l;
  if (!all_finite(q)) {
    throw NumericalError("non-finite flux at point " + detail::describe_point(point));
  }
  return q.d1;
}

}  // namespace

const EquationTerms& find_terms(const std::vector<EquationTerms>& terms, std::string_view id) {
  auto it = std::find_if(terms.begin(), terms.end(),
                         [&](const EquationTerms& t) { return t.id == id; });
  if (it == terms.end()) throw std::out_of_range("no equation " + std::string(id));
  return *it;
}

std::vector<EquationTerms> bulk_terms_weyl(const WeylFrame& frame,
                                           std::span<const double> point) {
  const auto mj = detail::metric_jet<double>(frame.metric, point, 2);
  const auto sj = detail::scalar_jet<double>(frame.phi, point);
  auto conn = detail::levi_civita(mj, true);
  detail::add_weyl_part(conn, mj, sj);
  const auto curv = detail::curvature_from(conn, mj, 1);
  const auto hess = detail::covariant_hessian(conn.gamma, sj);
  const double phi2 = detail::contract_gradient(mj.ginv, sj.d);
  const int n = mj.n;
  const double xi = frame.xi;

  EquationTerms eq7{"eq7", flatten(curv.einstein, n, n), {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      eq7.source.push_back(-hess(a, b) +
                           (2.0 * xi - 1.0) * sj.d[static_cast<std::size_t>(a)] *
                               sj.d[static_cast<std::size_t>(b)] -
                           xi * mj.g(a, b) * phi2);
  EquationTerms eq8{"eq8", {detail::trace(mj.ginv, hess)}, {-2.0 * phi2}};
  return {std::move(eq7), std::move(eq8)};
}

std::vector<EquationTerms> bulk_terms_riemann(const WeylFrame& frame,
                                              std::span<const double> point) {
  const auto s = levi_civita_state(frame, point);
  const int n = s.mj.n;
  const double k = frame.coupling();
  const double phi2 = detail::contract_gradient(s.mj.ginv, s.sj.d);

  EquationTerms eq10{"eq10", flatten(s.curv.einstein, n, n), {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      eq10.source.push_back(0.5 * k *
                            (s.sj.d[static_cast<std::size_t>(a)] *
                                 s.sj.d[static_cast<std::size_t>(b)] -
                             0.5 * s.mj.g(a, b) * phi2));
  const auto hess = detail::covariant_hessian(s.conn.gamma, s.sj);
  EquationTerms eq11{"eq11", {detail::trace(s.mj.ginv, hess)}, {0.0}};
  return {std::move(eq10), std::move(eq11)};
}

std::vector<EquationTerms> split_terms(const WeylFrame& frame, const LapseModel& lapse,
                                       std::span<const double> point) {
  const auto s = levi_civita_state(frame, point);
  const int n = s.mj.n;
  const int l = n - 1;
  const auto& g = s.mj.g;

  double scale = 0.0;
  for (double v : g.data()) scale = std::max(scale, std::abs(v));
  for (int a = 0; a < l; ++a) {
    if (std::abs(g(a, l)) > 1e-14 * scale || std::abs(g(l, a)) > 1e-14 * scale) {
      throw FoliationError("metric has nonzero g_(a l) at point " +
                           detail::describe_point(point) + "; unsupported foliation");
    }
  }
  const double Phi = lapse.at(point);
  if (std::abs(Phi * Phi + g(l, l)) > 1e-10 * std::max(1.0, std::abs(g(l, l)))) {
    throw FoliationError("lapse does not match -g_ll at point " + detail::describe_point(point));
  }

  const double k = frame.coupling();
  const auto& d = s.sj.d;
  const double phi_l = d[static_cast<std::size_t>(l)];
  double phi4 = 0.0;
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      phi4 += s.mj.ginv(a, b) * d[static_cast<std::size_t>(a)] * d[static_cast<std::size_t>(b)];
  const auto& G = s.curv.einstein;

  EquationTerms eq13{"eq13", flatten(G, l, l), {}};
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      eq13.source.push_back(0.5 * k *
                            (d[static_cast<std::size_t>(a)] * d[static_cast<std::size_t>(b)] -
                             0.5 * g(a, b) * (phi4 - phi_l * phi_l / (Phi * Phi))));
  EquationTerms eq14{"eq14", {}, {}};
  for (int a = 0; a < l; ++a) {
    eq14.geometric.push_back(G(a, l));
    eq14.source.push_back(0.5 * k * d[static_cast<std::size_t>(a)] * phi_l);
  }
  EquationTerms eq15{"eq15", {G(l, l)}, {0.25 * k * (phi_l * phi_l + Phi * Phi * phi4)}};

  std::vector<EquationTerms> out{std::move(eq13), std::move(eq14), std::move(eq15)};

  const bool phi_of_l_only =
      std::all_of(d.begin(), d.begin() + l, [](double v) { return v == 0.0; });
  if (!phi_of_l_only) return out;

  EquationTerms eq16{"eq16", flatten(G, l, l), {}};
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      eq16.source.push_back(0.25 * k * g(a, b) * phi_l * phi_l / (Phi * Phi));
  EquationTerms eq17{"eq17", {}, std::vector<double>(static_cast<std::size_t>(l), 0.0)};
  for (int a = 0; a < l; ++a) eq17.geometric.push_back(G(a, l));
  EquationTerms eq18{"eq18", {G(l, l)}, {0.25 * k * phi_l * phi_l}};
  EquationTerms eq19{"eq19", {conserved_flux_derivative(frame, lapse, point, 2)}, {0.0}};
  EquationTerms eq19v{"eq19_variant", {conserved_flux_derivative(frame, lapse, point, 1)}, {0.0}};
  out.push_back(std::move(eq16));
  out.push_back(std::move(eq17));
  out.push_back(std::move(eq18));
  out.push_back(std::move(eq19));
  out.push_back(std::move(eq19v));
  return out;
}

ResidualReport bulk_residuals_weyl(const WeylFrame& frame, std::span<const double> point) {
  return to_report(bulk_terms_weyl(frame, point), point);
}

ResidualReport bulk_residuals_riemann(const WeylFrame& frame, std::span<const double> point) {
  return to_report(bulk_terms_riemann(frame, point), point);
}

ResidualReport split_residuals(const WeylFrame& frame, const LapseModel& lapse,
                               std::span<const double> point) {
  return to_report(split_terms(frame, lapse, point), point);
}

}  // namespace weylbrane
