#pragma once

// Templated curvature kernels shared by the geometry, weyl and brane
// translation units. T is double for ordinary evaluation or Jet when an
// extra directional derivative of the whole pipeline is needed.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "weylbrane/errors.hpp"
#include "weylbrane/geometry/fields.hpp"
#include "weylbrane/geometry/tensor.hpp"
#include "weylbrane/numerics/jet.hpp"

namespace weylbrane::detail {

inline std::string describe_point(std::span<const double> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

template <class T>
std::vector<double> values_of(std::span<const T> x) {
  std::vector<double> v;
  v.reserve(x.size());
  for (const auto& xi : x) v.push_back(value_of(xi));
  return v;
}

/// Point x + s*v as jets in s.
template <class T>
std::vector<Jet2<T>> seed_direction(std::span<const T> x, const std::vector<double>& v) {
  std::vector<Jet2<T>> y;
  y.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y.push_back(Jet2<T>::variable(x[i], T(v[i])));
  return y;
}

inline std::vector<double> unit(int n, int e) {
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  v[static_cast<std::size_t>(e)] = 1.0;
  return v;
}

inline std::vector<double> unit_pair(int n, int e, int f) {
  std::vector<double> v = unit(n, e);
  v[static_cast<std::size_t>(f)] = 1.0;
  return v;
}

/// Inverse by Gauss-Jordan elimination with partial pivoting on the value part.
template <class T>
Matrix<T> inverse(const Matrix<T>& m, std::span<const double> where) {
  const int n = m.dim();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  double scale = 0.0;
  for (const auto& x : m.data()) scale = std::max(scale, std::abs(value_of(x)));
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(value_of(a(r, col))) > std::abs(value_of(a(piv, col)))) piv = r;
    }
    if (!(std::abs(value_of(a(piv, col))) > 1e-13 * scale)) {
      throw NumericalError("singular metric at point " + describe_point(where));
    }
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const T p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / p;
      inv(col, j) = inv(col, j) / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const T f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Determinant via LU with partial pivoting.
template <class T>
T determinant(const Matrix<T>& m) {
  const int n = m.dim();
  Matrix<T> a = m;
  T det(1.0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(value_of(a(r, col))) > std::abs(value_of(a(piv, col)))) piv = r;
    }
    if (value_of(a(piv, col)) == 0.0) return T(0.0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det = det * a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const T f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
    }
  }
  return det;
}

/// Metric with exact first and second coordinate derivatives at a point.
template <class T>
struct MetricJet {
  int n = 0;
  Matrix<T> g;
  Matrix<T> ginv;
  std::vector<Matrix<T>> dg;                // dg[e](i, j) = d_e g_ij
  std::vector<Matrix<T>> dginv;             // d_e g^ij
  std::vector<std::vector<Matrix<T>>> ddg;  // ddg[e][f](i, j) = d_e d_f g_ij
};

template <class T>
void require_finite(const Matrix<T>& m, std::span<const double> where, const char* what) {
  for (const auto& x : m.data()) {
    if (!all_finite(x)) {
      throw NumericalError(std::string("non-finite ") + what + " at point " +
                           describe_point(where));
    }
  }
}

/// Directional second derivatives plus polarization for the mixed ones.
template <class T>
MetricJet<T> metric_jet(const MetricField& metric, std::span<const T> x, int order = 2) {
  const int n = metric.dim();
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("point dimension does not match metric dimension");
  }
  const std::vector<double> where = values_of(x);
  MetricJet<T> mj;
  mj.n = n;
  mj.dg.assign(static_cast<std::size_t>(n), Matrix<T>(n));
  mj.dginv.assign(static_cast<std::size_t>(n), Matrix<T>(n));
  if (order >= 2) {
    mj.ddg.assign(static_cast<std::size_t>(n),
                  std::vector<Matrix<T>>(static_cast<std::size_t>(n), Matrix<T>(n)));
  }
  std::vector<Matrix<T>> diag2(static_cast<std::size_t>(n), Matrix<T>(n));
  for (int e = 0; e < n; ++e) {
    const auto y = seed_direction<T>(x, unit(n, e));
    const Matrix<Jet2<T>> gj = metric.eval<Jet2<T>>(y);
    if (e == 0) {
      mj.g = Matrix<T>(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mj.g(i, j) = gj(i, j).value;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        mj.dg[static_cast<std::size_t>(e)](i, j) = gj(i, j).d1;
        diag2[static_cast<std::size_t>(e)](i, j) = gj(i, j).d2;
      }
    }
    require_finite(mj.dg[static_cast<std::size_t>(e)], where, "metric derivative");
  }
  require_finite(mj.g, where, "metric");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double a = value_of(mj.g(i, j));
      const double b = value_of(mj.g(j, i));
      if (std::abs(a - b) > 1e-12 * (1.0 + std::abs(a))) {
        throw NumericalError("metric not symmetric at point " + describe_point(where));
      }
    }
  }
  if (order >= 2) {
    for (int e = 0; e < n; ++e) {
      require_finite(diag2[static_cast<std::size_t>(e)], where, "metric second derivative");
      mj.ddg[static_cast<std::size_t>(e)][static_cast<std::size_t>(e)] =
          diag2[static_cast<std::size_t>(e)];
      for (int f = e + 1; f < n; ++f) {
        const auto y = seed_direction<T>(x, unit_pair(n, e, f));
        const Matrix<Jet2<T>> gj = metric.eval<Jet2<T>>(y);
        Matrix<T> mixed(n);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            mixed(i, j) = 0.5 * (gj(i, j).d2 - diag2[static_cast<std::size_t>(e)](i, j) -
                                 diag2[static_cast<std::size_t>(f)](i, j));
          }
        }
        require_finite(mixed, where, "metric second derivative");
        mj.ddg[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] = mixed;
        mj.ddg[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)] = mixed;
      }
    }
  }
  mj.ginv = inverse(mj.g, where);
  for (int e = 0; e < n; ++e) {
    auto& out = mj.dginv[static_cast<std::size_t>(e)];
    const auto& d = mj.dg[static_cast<std::size_t>(e)];
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        T s(0.0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) s = s - mj.ginv(a, i) * d(i, j) * mj.ginv(j, b);
        out(a, b) = s;
      }
    }
  }
  return mj;
}

/// Scalar field with exact gradient and Hessian.
template <class T>
struct ScalarJet {
  T value{};
  std::vector<T> d;  // d_e phi
  Matrix<T> dd;      // d_e d_f phi
};

template <class T>
ScalarJet<T> scalar_jet(const ScalarField& phi, std::span<const T> x) {
  const int n = static_cast<int>(x.size());
  const std::vector<double> where = values_of(x);
  ScalarJet<T> sj;
  sj.d.assign(static_cast<std::size_t>(n), T(0.0));
  sj.dd = Matrix<T>(n);
  for (int e = 0; e < n; ++e) {
    const Jet2<T> v = phi.eval<Jet2<T>>(seed_direction<T>(x, unit(n, e)));
    if (!all_finite(v)) {
      throw NumericalError("non-finite scalar field at point " + describe_point(where));
    }
    if (e == 0) sj.value = v.value;
    sj.d[static_cast<std::size_t>(e)] = v.d1;
    sj.dd(e, e) = v.d2;
  }
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      const Jet2<T> v = phi.eval<Jet2<T>>(seed_direction<T>(x, unit_pair(n, e, f)));
      if (!all_finite(v)) {
        throw NumericalError("non-finite scalar field at point " + describe_point(where));
      }
      const T mixed = 0.5 * (v.d2 - sj.dd(e, e) - sj.dd(f, f));
      sj.dd(e, f) = mixed;
      sj.dd(f, e) = mixed;
    }
  }
  return sj;
}

/// Connection coefficients Gamma^a_bc and, optionally, d_e Gamma^a_bc.
template <class T>
struct Connection {
  Rank3<T> gamma;
  std::vector<Rank3<T>> dgamma;  // dgamma[e](a, b, c)
};

template <class T>
Connection<T> levi_civita(const MetricJet<T>& mj, bool with_derivatives) {
  const int n = mj.n;
  Rank3<T> first(n);  // Gamma_dbc
  for (int d = 0; d < n; ++d)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        first(d, b, c) = 0.5 * (mj.dg[static_cast<std::size_t>(b)](d, c) +
                                mj.dg[static_cast<std::size_t>(c)](d, b) -
                                mj.dg[static_cast<std::size_t>(d)](b, c));
  Connection<T> conn;
  conn.gamma = Rank3<T>(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        T s(0.0);
        for (int d = 0; d < n; ++d) s = s + mj.ginv(a, d) * first(d, b, c);
        conn.gamma(a, b, c) = s;
      }
  if (!with_derivatives) return conn;
  conn.dgamma.assign(static_cast<std::size_t>(n), Rank3<T>(n));
  for (int e = 0; e < n; ++e) {
    const auto& dgi = mj.dginv[static_cast<std::size_t>(e)];
    const auto& dd = mj.ddg[static_cast<std::size_t>(e)];
    auto& out = conn.dgamma[static_cast<std::size_t>(e)];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          T s(0.0);
          for (int d = 0; d < n; ++d) {
            const T dfirst = 0.5 * (dd[static_cast<std::size_t>(b)](d, c) +
                                    dd[static_cast<std::size_t>(c)](d, b) -
                                    dd[static_cast<std::size_t>(d)](b, c));
            s = s + dgi(a, d) * first(d, b, c) + mj.ginv(a, d) * dfirst;
          }
          out(a, b, c) = s;
        }
  }
  return conn;
}

/// Adds -1/2 [phi_b delta^a_c + phi_c delta^a_b - g_bc phi^a] (and its
/// derivative when the connection carries one).
template <class T>
void add_weyl_part(Connection<T>& conn, const MetricJet<T>& mj, const ScalarJet<T>& sj) {
  const int n = mj.n;
  std::vector<T> up(static_cast<std::size_t>(n), T(0.0));
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d) up[static_cast<std::size_t>(a)] =
        up[static_cast<std::size_t>(a)] + mj.ginv(a, d) * sj.d[static_cast<std::size_t>(d)];
  auto delta = [](int i, int j) { return i == j ? 1.0 : 0.0; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        conn.gamma(a, b, c) =
            conn.gamma(a, b, c) -
            0.5 * (sj.d[static_cast<std::size_t>(b)] * delta(a, c) +
                   sj.d[static_cast<std::size_t>(c)] * delta(a, b) -
                   mj.g(b, c) * up[static_cast<std::size_t>(a)]);
      }
  if (conn.dgamma.empty()) return;
  for (int e = 0; e < n; ++e) {
    std::vector<T> dup(static_cast<std::size_t>(n), T(0.0));
    for (int a = 0; a < n; ++a)
      for (int d = 0; d < n; ++d)
        dup[static_cast<std::size_t>(a)] =
            dup[static_cast<std::size_t>(a)] +
            mj.dginv[static_cast<std::size_t>(e)](a, d) * sj.d[static_cast<std::size_t>(d)] +
            mj.ginv(a, d) * sj.dd(d, e);
    auto& out = conn.dgamma[static_cast<std::size_t>(e)];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          out(a, b, c) = out(a, b, c) -
                         0.5 * (sj.dd(b, e) * delta(a, c) + sj.dd(c, e) * delta(a, b) -
                                mj.dg[static_cast<std::size_t>(e)](b, c) *
                                    up[static_cast<std::size_t>(a)] -
                                mj.g(b, c) * dup[static_cast<std::size_t>(a)]);
        }
  }
}

template <class T>
struct CurvatureT {
  Rank4<T> riemann;
  Matrix<T> ricci;
  T scalar{};
  Matrix<T> einstein;
};

/// R^a_bcd = d_c G^a_db - d_d G^a_cb + G^a_ce G^e_db - G^a_de G^e_cb,
/// R_bd = R^a_bad, R = g^bd R_bd, G_bd = R_bd - 1/2 g_bd R.
template <class T>
CurvatureT<T> curvature_from(const Connection<T>& conn, const MetricJet<T>& mj,
                             int riemann_sign) {
  const int n = mj.n;
  const auto& G = conn.gamma;
  CurvatureT<T> out;
  out.riemann = Rank4<T>(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          T s = conn.dgamma[static_cast<std::size_t>(c)](a, d, b) -
                conn.dgamma[static_cast<std::size_t>(d)](a, c, b);
          for (int e = 0; e < n; ++e) s = s + G(a, c, e) * G(e, d, b) - G(a, d, e) * G(e, c, b);
          out.riemann(a, b, c, d) = riemann_sign == 1 ? s : -s;
        }
  out.ricci = Matrix<T>(n);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) {
      T s(0.0);
      for (int a = 0; a < n; ++a) s = s + out.riemann(a, b, a, d);
      out.ricci(b, d) = s;
    }
  out.scalar = T(0.0);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) out.scalar = out.scalar + mj.ginv(b, d) * out.ricci(b, d);
  out.einstein = Matrix<T>(n);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) out.einstein(b, d) = out.ricci(b, d) - 0.5 * mj.g(b, d) * out.scalar;
  return out;
}

/// Weyl-covariant Hessian phi_{a;b} = d_b d_a phi - Gamma^c_ab phi_c.
template <class T>
Matrix<T> covariant_hessian(const Rank3<T>& gamma, const ScalarJet<T>& sj) {
  const int n = gamma.dim();
  Matrix<T> h(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      T s = sj.dd(a, b);
      for (int c = 0; c < n; ++c) s = s - gamma(c, a, b) * sj.d[static_cast<std::size_t>(c)];
      h(a, b) = s;
    }
  return h;
}

template <class T>
T trace(const Matrix<T>& ginv, const Matrix<T>& m) {
  T s(0.0);
  for (int a = 0; a < m.dim(); ++a)
    for (int b = 0; b < m.dim(); ++b) s = s + ginv(a, b) * m(a, b);
  return s;
}

template <class T>
T contract_gradient(const Matrix<T>& ginv, const std::vector<T>& v) {
  T s(0.0);
  for (int a = 0; a < ginv.dim(); ++a)
    for (int b = 0; b < ginv.dim(); ++b)
      s = s + ginv(a, b) * v[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
  return s;
}

template <class T>
Matrix<double> to_double(const Matrix<T>& m) {
  Matrix<double> out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = value_of(m(i, j));
  return out;
}

}  // namespace weylbrane::detail
