#pragma once

#include <cmath>
#include <concepts>
#include <type_traits>

namespace weylbrane {

/// Second-order truncated Taylor jet along one seeded direction.
///
/// A Jet2 carries f, f' and f'' of some quantity with respect to a single
/// scalar parameter s (typically the step along a coordinate direction).
/// Arithmetic propagates all three exactly, so polynomial inputs produce
/// exact derivative coefficients up to rounding. The component type T may
/// itself be a Jet2, which gives derivatives along a second direction.
template <class T>
struct Jet2 {
  T value{};
  T d1{};
  T d2{};

  constexpr Jet2() = default;

  // Constant lift: d1 = d2 = 0.
  template <class U>
    requires std::convertible_to<const U&, T>
  constexpr Jet2(const U& c) : value(c), d1(0.0), d2(0.0) {}  // NOLINT

  constexpr Jet2(T v, T first, T second)
      : value(std::move(v)), d1(std::move(first)), d2(std::move(second)) {}

  /// Independent variable x + s*direction.
  static constexpr Jet2 variable(T x, T direction = T(1.0)) {
    return Jet2(std::move(x), std::move(direction), T(0.0));
  }

  Jet2& operator+=(const Jet2& o) { return *this = *this + o; }
  Jet2& operator-=(const Jet2& o) { return *this = *this - o; }
  Jet2& operator*=(const Jet2& o) { return *this = *this * o; }
  Jet2& operator/=(const Jet2& o) { return *this = *this / o; }

  friend Jet2 operator+(const Jet2& a) { return a; }
  friend Jet2 operator-(const Jet2& a) { return {-a.value, -a.d1, -a.d2}; }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
  }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2};
  }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
            a.d2 * b.value + 2.0 * (a.d1 * b.d1) + a.value * b.d2};
  }
  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    const T q = a.value / b.value;
    const T q1 = (a.d1 - q * b.d1) / b.value;
    const T q2 = (a.d2 - 2.0 * (q1 * b.d1) - q * b.d2) / b.value;
    return {q, q1, q2};
  }

  // Comparisons look at the value part only.
  friend bool operator<(const Jet2& a, const Jet2& b) { return a.value < b.value; }
  friend bool operator>(const Jet2& a, const Jet2& b) { return a.value > b.value; }
  friend bool operator==(const Jet2& a, const Jet2& b) { return a.value == b.value; }

  friend Jet2 exp(const Jet2& x) {
    using std::exp;
    const T e = exp(x.value);
    return chain(x, e, e, e);
  }
  friend Jet2 log(const Jet2& x) {
    using std::log;
    const T inv = 1.0 / x.value;
    return chain(x, log(x.value), inv, -(inv * inv));
  }
  friend Jet2 sqrt(const Jet2& x) {
    using std::sqrt;
    const T s = sqrt(x.value);
    const T fp = 0.5 / s;
    return chain(x, s, fp, -0.5 * fp / x.value);
  }
  friend Jet2 pow(const Jet2& x, double a) {
    using std::pow;
    if (a == 0.0) return Jet2(T(1.0));
    const T f = pow(x.value, a);
    const T fp = a * pow(x.value, a - 1.0);
    const T fpp = (a * (a - 1.0)) * pow(x.value, a - 2.0);
    return chain(x, f, fp, fpp);
  }
  friend Jet2 sin(const Jet2& x) {
    using std::cos;
    using std::sin;
    const T s = sin(x.value);
    return chain(x, s, cos(x.value), -s);
  }
  friend Jet2 cos(const Jet2& x) {
    using std::cos;
    using std::sin;
    const T c = cos(x.value);
    return chain(x, c, -sin(x.value), -c);
  }
  friend Jet2 tan(const Jet2& x) {
    using std::tan;
    const T t = tan(x.value);
    const T fp = 1.0 + t * t;
    return chain(x, t, fp, 2.0 * t * fp);
  }
  friend Jet2 sinh(const Jet2& x) {
    using std::cosh;
    using std::sinh;
    const T s = sinh(x.value);
    return chain(x, s, cosh(x.value), s);
  }
  friend Jet2 cosh(const Jet2& x) {
    using std::cosh;
    using std::sinh;
    const T c = cosh(x.value);
    return chain(x, c, sinh(x.value), c);
  }
  friend Jet2 tanh(const Jet2& x) {
    using std::tanh;
    const T t = tanh(x.value);
    const T fp = 1.0 - t * t;
    return chain(x, t, fp, -2.0 * t * fp);
  }
  friend Jet2 atan(const Jet2& x) {
    using std::atan;
    const T fp = 1.0 / (1.0 + x.value * x.value);
    return chain(x, atan(x.value), fp, -2.0 * x.value * fp * fp);
  }

 private:
  // h(x) given h(v), h'(v), h''(v).
  static Jet2 chain(const Jet2& x, const T& f, const T& fp, const T& fpp) {
    return {f, fp * x.d1, fpp * (x.d1 * x.d1) + fp * x.d2};
  }
};

using Jet = Jet2<double>;
using NestedJet = Jet2<Jet>;

template <class T>
struct is_jet : std::false_type {};
template <class T>
struct is_jet<Jet2<T>> : std::true_type {};

/// Innermost real value of a (possibly nested) jet.
constexpr double value_of(double x) { return x; }
template <class T>
constexpr double value_of(const Jet2<T>& x) {
  return value_of(x.value);
}

/// True when every component at every nesting level is finite.
inline bool all_finite(double x) { return std::isfinite(x); }
template <class T>
bool all_finite(const Jet2<T>& x) {
  return all_finite(x.value) && all_finite(x.d1) && all_finite(x.d2);
}

/// Scalar types a type-erased field can be evaluated on.
template <class S>
concept FieldScalar =
    std::same_as<S, double> || std::same_as<S, Jet> || std::same_as<S, NestedJet>;

}  // namespace weylbrane
