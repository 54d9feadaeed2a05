#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

namespace weylbrane {

// Dense small-dimension arrays (dim <= 5). Index order follows the written
// tensor: Matrix(a, b), Rank3(a, b, c) for Gamma^a_bc, Rank4(a, b, c, d) for
// R^a_bcd.

template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n), T(0.0)) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int dim() const { return n_; }
  T& operator()(int i, int j) { return data_[idx(i, j)]; }
  const T& operator()(int i, int j) const { return data_[idx(i, j)]; }
  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t idx(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return static_cast<std::size_t>(i * n_ + j);
  }
  int n_ = 0;
  std::vector<T> data_;
};

template <class T>
class Rank3 {
 public:
  Rank3() = default;
  explicit Rank3(int n) : n_(n), data_(static_cast<std::size_t>(n * n * n), T(0.0)) {}

  int dim() const { return n_; }
  T& operator()(int a, int b, int c) { return data_[idx(a, b, c)]; }
  const T& operator()(int a, int b, int c) const { return data_[idx(a, b, c)]; }
  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t idx(int a, int b, int c) const {
    assert(a >= 0 && a < n_ && b >= 0 && b < n_ && c >= 0 && c < n_);
    return static_cast<std::size_t>((a * n_ + b) * n_ + c);
  }
  int n_ = 0;
  std::vector<T> data_;
};

template <class T>
class Rank4 {
 public:
  Rank4() = default;
  explicit Rank4(int n) : n_(n), data_(static_cast<std::size_t>(n * n * n * n), T(0.0)) {}

  int dim() const { return n_; }
  T& operator()(int a, int b, int c, int d) { return data_[idx(a, b, c, d)]; }
  const T& operator()(int a, int b, int c, int d) const { return data_[idx(a, b, c, d)]; }
  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t idx(int a, int b, int c, int d) const {
    assert(a >= 0 && a < n_ && b >= 0 && b < n_ && c >= 0 && c < n_ && d >= 0 && d < n_);
    return static_cast<std::size_t>(((a * n_ + b) * n_ + c) * n_ + d);
  }
  int n_ = 0;
  std::vector<T> data_;
};

/// Largest |component| of any of the dense arrays above.
template <class A>
double max_abs(const A& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

/// Largest |a - b| over matching components.
template <class A>
double max_abs_diff(const A& a, const A& b) {
  assert(a.data().size() == b.data().size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

}  // namespace weylbrane
