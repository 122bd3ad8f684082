#pragma once

#include <array>
#include <vector>

#include "adsgeo/errors.hpp"

namespace adsgeo {

/// Formal Taylor polynomial sum c_k s^k, k = 0..order, with truncation-aware
/// arithmetic: binary operations truncate to the smaller order so every
/// stored coefficient stays trustworthy.
class TruncatedSeries {
 public:
  TruncatedSeries() : c_(1, 0.0) {}
  explicit TruncatedSeries(std::vector<double> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(double value, int order);
  /// The series "s" itself (order >= 1).
  static TruncatedSeries identity(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of s^k; k past the truncation order is an OrderError,
  /// it is not known to be zero.
  double coeff(int k) const;
  double& at(int k);

  TruncatedSeries truncated(int order) const;
  bool is_zero(double tol = 0.0) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);

  TruncatedSeries derivative() const;
  /// Antiderivative with zero constant term; order grows by one.
  TruncatedSeries antiderivative() const;

  /// 1/f; needs f(0) != 0.
  TruncatedSeries inverse() const;
  /// Needs f(0) > 0.
  TruncatedSeries sqrt() const;
  TruncatedSeries exp() const;

  double evaluate(double s) const;
  /// Value and first three derivatives at s.
  std::array<double, 4> evaluate_jet(double s) const;

  const std::vector<double>& coeffs() const { return c_; }

 private:
  std::vector<double> c_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(double a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, double b);

/// outer(inner); requires inner(0) = 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse g with f(g(s)) = s; requires f(0) = 0, f'(0) != 0.
TruncatedSeries revert(const TruncatedSeries& f);

/// Laurent-type truncated series sum c_k s^k for k = lead..cap. Negative
/// exponents are allowed. `cap` is the largest exponent whose coefficient is
/// still trustworthy; arithmetic propagates it pessimistically. The exact
/// zero series has an unbounded cap.
class LaurentSeries {
 public:
  static constexpr int kInfCap = 1 << 20;

  LaurentSeries() = default;  // exact zero
  LaurentSeries(double value);  // NOLINT: implicit lift of exact constants
  static LaurentSeries monomial(double c, int exponent, int cap = kInfCap);
  static LaurentSeries from_taylor(const TruncatedSeries& t, int shift = 0);

  bool is_zero() const { return c_.empty(); }
  int lead() const { return lead_; }
  int cap() const { return cap_; }
  /// Exponent of the first stored nonzero coefficient (cap if none).
  int valuation() const;
  double leading_coeff() const;

  /// Coefficient of s^k. Asking past the cap is a SeriesError.
  double coeff(int k) const;

  LaurentSeries truncated(int cap) const;
  LaurentSeries operator-() const;
  LaurentSeries derivative() const;

  /// 1/f. Requires a sharply resolved valuation: the leading stored
  /// coefficient must dominate round-off noise.
  LaurentSeries reciprocal() const;

  double max_abs_coeff() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

 private:
  void normalize();

  int lead_ = 0;
  int cap_ = kInfCap;
  std::vector<double> c_;
};

LaurentSeries operator*(double a, const LaurentSeries& b);
LaurentSeries operator*(const LaurentSeries& a, double b);

}  // namespace adsgeo
