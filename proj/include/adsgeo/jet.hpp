#pragma once

#include <cmath>
#include <vector>

#include "adsgeo/errors.hpp"
#include "adsgeo/series.hpp"

namespace adsgeo {

inline constexpr int kMaxJetOrder = 3;

/// Ring hooks a scalar type must provide to flow through the jet and
/// curvature templates.
template <typename S>
struct ScalarOps {
  static S zero() { return S(0.0); }
  static S one() { return S(1.0); }
  static S from_double(double x) { return S(x); }
  static S recip(const S& x) {
    if (x == S(0.0)) throw DegenerateMetricError("reciprocal of zero");
    return S(1.0) / x;
  }
  /// Magnitude used to pick Gauss-Jordan pivots.
  static double pivot_weight(const S& x) { return std::abs(x); }
};

template <>
struct ScalarOps<LaurentSeries> {
  static LaurentSeries zero() { return LaurentSeries(); }
  static LaurentSeries one() { return LaurentSeries(1.0); }
  static LaurentSeries from_double(double x) { return LaurentSeries(x); }
  static LaurentSeries recip(const LaurentSeries& x) { return x.reciprocal(); }
  static double pivot_weight(const LaurentSeries& x) {
    return x.is_zero() ? 0.0 : std::abs(x.leading_coeff());
  }
};

/// Truncated Taylor data of a scalar quantity at a point: value plus full
/// symmetric derivative arrays up to `order` <= 3 in `dim` variables.
/// Arithmetic is exact Leibniz/chain-rule propagation, no finite differences.
template <typename S>
class Jet {
 public:
  Jet() : dim_(0), order_(0), v_(ScalarOps<S>::zero()) {}

  Jet(int dim, int order, S value) : dim_(dim), order_(order), v_(std::move(value)) {
    if (dim < 1) throw OrderError("jet dimension must be positive");
    if (order < 0 || order > kMaxJetOrder) throw OrderError("jet order out of range");
    allocate();
  }

  static Jet constant(int dim, int order, S value) { return Jet(dim, order, std::move(value)); }

  /// Coordinate function x^slot seeded with unit first derivative.
  static Jet variable(int dim, int order, S value, int slot) {
    Jet j(dim, order, std::move(value));
    if (slot < 0 || slot >= dim) throw OrderError("jet variable slot out of range");
    if (order >= 1) j.d1(slot) = ScalarOps<S>::one();
    return j;
  }

  int dim() const { return dim_; }
  int order() const { return order_; }

  const S& value() const { return v_; }
  S& value() { return v_; }

  const S& d1(int a) const { check(1); return g_[idx1(a)]; }
  S& d1(int a) { check(1); return g_[idx1(a)]; }
  const S& d2(int a, int b) const { check(2); return h_[idx2(a, b)]; }
  S& d2(int a, int b) { check(2); return h_[idx2(a, b)]; }
  const S& d3(int a, int b, int c) const { check(3); return t_[idx3(a, b, c)]; }
  S& d3(int a, int b, int c) { check(3); return t_[idx3(a, b, c)]; }

  /// Jet of the partial derivative d_a f, one order lower.
  Jet partial(int a) const {
    check(1);
    Jet r(dim_, order_ - 1, g_[idx1(a)]);
    if (r.order_ >= 1)
      for (int b = 0; b < dim_; ++b) r.d1(b) = d2(a, b);
    if (r.order_ >= 2)
      for (int b = 0; b < dim_; ++b)
        for (int c = 0; c < dim_; ++c) r.d2(b, c) = d3(a, b, c);
    return r;
  }

  Jet truncated(int order) const {
    if (order > order_) throw OrderError("cannot raise jet order by truncation");
    Jet r(dim_, order, v_);
    if (order >= 1)
      for (int a = 0; a < dim_; ++a) r.d1(a) = d1(a);
    if (order >= 2)
      for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) r.d2(a, b) = d2(a, b);
    if (order >= 3)
      for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b)
          for (int c = 0; c < dim_; ++c) r.d3(a, b, c) = d3(a, b, c);
    return r;
  }

  Jet operator-() const {
    Jet r(*this);
    r.v_ = -r.v_;
    for (auto& x : r.g_) x = -x;
    for (auto& x : r.h_) x = -x;
    for (auto& x : r.t_) x = -x;
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    return combine(a, b, [](const S& x, const S& y) { return x + y; });
  }

  friend Jet operator-(const Jet& a, const Jet& b) {
    return combine(a, b, [](const S& x, const S& y) { return x - y; });
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    const int n = matched_dim(a, b);
    const int ord = std::min(a.order_, b.order_);
    Jet r(n, ord, a.v_ * b.v_);
    if (ord >= 1)
      for (int i = 0; i < n; ++i) r.d1(i) = a.d1(i) * b.v_ + a.v_ * b.d1(i);
    if (ord >= 2)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          r.d2(i, j) = a.d2(i, j) * b.v_ + a.d1(i) * b.d1(j) + a.d1(j) * b.d1(i) +
                       a.v_ * b.d2(i, j);
    if (ord >= 3)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            r.d3(i, j, k) = a.d3(i, j, k) * b.v_ + a.d2(i, j) * b.d1(k) + a.d2(i, k) * b.d1(j) +
                            a.d2(j, k) * b.d1(i) + a.d1(i) * b.d2(j, k) + a.d1(j) * b.d2(i, k) +
                            a.d1(k) * b.d2(i, j) + a.v_ * b.d3(i, j, k);
    return r;
  }

  friend Jet operator+(const Jet& a, const S& c) { Jet r(a); r.v_ = r.v_ + c; return r; }
  friend Jet operator+(const S& c, const Jet& a) { return a + c; }
  friend Jet operator-(const Jet& a, const S& c) { Jet r(a); r.v_ = r.v_ - c; return r; }
  friend Jet operator-(const S& c, const Jet& a) { Jet r = -a; r.v_ = c + r.v_; return r; }
  friend Jet operator*(const Jet& a, const S& c) {
    Jet r(a);
    r.v_ = r.v_ * c;
    for (auto& x : r.g_) x = x * c;
    for (auto& x : r.h_) x = x * c;
    for (auto& x : r.t_) x = x * c;
    return r;
  }
  friend Jet operator*(const S& c, const Jet& a) { return a * c; }

  /// Chain rule through a univariate map u with derivative values c0..c3
  /// taken at this jet's value.
  Jet chain(const S& c0, const S& c1, const S& c2, const S& c3) const {
    Jet r(dim_, order_, c0);
    if (order_ >= 1)
      for (int i = 0; i < dim_; ++i) r.d1(i) = c1 * d1(i);
    if (order_ >= 2)
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
          r.d2(i, j) = c2 * (d1(i) * d1(j)) + c1 * d2(i, j);
    if (order_ >= 3)
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
          for (int k = 0; k < dim_; ++k)
            r.d3(i, j, k) = c3 * (d1(i) * d1(j) * d1(k)) +
                            c2 * (d2(i, j) * d1(k) + d2(i, k) * d1(j) + d2(j, k) * d1(i)) +
                            c1 * d3(i, j, k);
    return r;
  }

  /// 1/f in any ring with a reciprocal.
  Jet reciprocal() const {
    const S u0 = ScalarOps<S>::recip(v_);
    const S u0sq = u0 * u0;
    const S c1 = -u0sq;
    const S c2 = ScalarOps<S>::from_double(2.0) * (u0sq * u0);
    const S c3 = ScalarOps<S>::from_double(-6.0) * (u0sq * u0sq);
    return chain(u0, c1, c2, c3);
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }

 private:
  void allocate() {
    const size_t n = static_cast<size_t>(dim_);
    if (order_ >= 1) g_.assign(n, ScalarOps<S>::zero());
    if (order_ >= 2) h_.assign(n * n, ScalarOps<S>::zero());
    if (order_ >= 3) t_.assign(n * n * n, ScalarOps<S>::zero());
  }

  void check(int need) const {
    if (order_ < need) throw OrderError("jet does not carry derivatives of that order");
  }

  size_t idx1(int a) const { return static_cast<size_t>(a); }
  size_t idx2(int a, int b) const { return static_cast<size_t>(a) * dim_ + b; }
  size_t idx3(int a, int b, int c) const {
    return (static_cast<size_t>(a) * dim_ + b) * dim_ + c;
  }

  static int matched_dim(const Jet& a, const Jet& b) {
    if (a.dim_ != b.dim_) throw OrderError("jet dimension mismatch");
    return a.dim_;
  }

  template <typename F>
  static Jet combine(const Jet& a, const Jet& b, F&& f) {
    const int n = matched_dim(a, b);
    const int ord = std::min(a.order_, b.order_);
    Jet r(n, ord, f(a.v_, b.v_));
    if (ord >= 1)
      for (int i = 0; i < n; ++i) r.d1(i) = f(a.d1(i), b.d1(i));
    if (ord >= 2)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.d2(i, j) = f(a.d2(i, j), b.d2(i, j));
    if (ord >= 3)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) r.d3(i, j, k) = f(a.d3(i, j, k), b.d3(i, j, k));
    return r;
  }

  int dim_;
  int order_;
  S v_;
  std::vector<S> g_, h_, t_;
};

using DJet = Jet<double>;

namespace jet_math {

/// Applies a smooth univariate function given its value and first three
/// derivatives at f.value().
inline DJet apply(const DJet& f, double c0, double c1, double c2, double c3) {
  return f.chain(c0, c1, c2, c3);
}

inline DJet sqrt(const DJet& f) {
  const double v = f.value();
  if (v <= 0.0) throw VanishingDenominatorError("sqrt of non-positive jet value");
  const double s = std::sqrt(v);
  return apply(f, s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v));
}

inline DJet exp(const DJet& f) {
  const double e = std::exp(f.value());
  return apply(f, e, e, e, e);
}

inline DJet log(const DJet& f) {
  const double v = f.value();
  if (v <= 0.0) throw VanishingDenominatorError("log of non-positive jet value");
  return apply(f, std::log(v), 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

inline DJet sin(const DJet& f) {
  const double s = std::sin(f.value()), c = std::cos(f.value());
  return apply(f, s, c, -s, -c);
}

inline DJet cos(const DJet& f) {
  const double s = std::sin(f.value()), c = std::cos(f.value());
  return apply(f, c, -s, -c, s);
}

inline DJet sinh(const DJet& f) {
  const double s = std::sinh(f.value()), c = std::cosh(f.value());
  return apply(f, s, c, s, c);
}

inline DJet cosh(const DJet& f) {
  const double s = std::sinh(f.value()), c = std::cosh(f.value());
  return apply(f, c, s, c, s);
}

inline DJet pow(const DJet& f, double p) {
  const double v = f.value();
  if (v <= 0.0) throw VanishingDenominatorError("pow of non-positive jet base");
  const double w = std::pow(v, p);
  return apply(f, w, p * w / v, p * (p - 1.0) * w / (v * v),
               p * (p - 1.0) * (p - 2.0) * w / (v * v * v));
}

}  // namespace jet_math

}  // namespace adsgeo
