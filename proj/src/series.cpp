#include "adsgeo/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace adsgeo {

namespace {

int min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

// Zero-pad to a higher order. Internal: only valid where the appended
// coefficients are provably never read or provably multiply zeros.
TruncatedSeries padded(const TruncatedSeries& t, int order) {
  std::vector<double> c(t.coeffs());
  c.resize(static_cast<size_t>(order) + 1, 0.0);
  return TruncatedSeries(std::move(c));
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw SeriesError("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw SeriesError("negative truncation order");
  return TruncatedSeries(std::vector<double>(static_cast<size_t>(order) + 1, 0.0));
}

TruncatedSeries TruncatedSeries::constant(double value, int order) {
  TruncatedSeries t = zero(order);
  t.c_[0] = value;
  return t;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  if (order < 1) throw SeriesError("identity series needs order >= 1");
  TruncatedSeries t = zero(order);
  t.c_[1] = 1.0;
  return t;
}

double TruncatedSeries::coeff(int k) const {
  if (k < 0 || k > order()) throw OrderError("series coefficient past truncation order");
  return c_[static_cast<size_t>(k)];
}

double& TruncatedSeries::at(int k) {
  if (k < 0 || k > order()) throw OrderError("series coefficient past truncation order");
  return c_[static_cast<size_t>(k)];
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) throw OrderError("bad truncation order");
  return TruncatedSeries(std::vector<double>(c_.begin(), c_.begin() + order + 1));
}

bool TruncatedSeries::is_zero(double tol) const {
  for (double c : c_)
    if (std::abs(c) > tol) return false;
  return true;
}

TruncatedSeries TruncatedSeries::operator-() const {
  std::vector<double> c(c_);
  for (double& x : c) x = -x;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  *this = *this + rhs;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  *this = *this - rhs;
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<double> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) + b.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<double> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) - b.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    const double ai = a.coeff(i);
    if (ai == 0.0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += ai * b.coeff(j);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(double a, const TruncatedSeries& b) {
  std::vector<double> c(b.coeffs());
  for (double& x : c) x *= a;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, double b) { return b * a; }

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return zero(0);
  std::vector<double> c(static_cast<size_t>(order()));
  for (int k = 1; k <= order(); ++k) c[k - 1] = k * c_[static_cast<size_t>(k)];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::antiderivative() const {
  std::vector<double> c(static_cast<size_t>(order()) + 2, 0.0);
  for (int k = 0; k <= order(); ++k) c[k + 1] = c_[static_cast<size_t>(k)] / (k + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0] == 0.0) throw SeriesError("series reciprocal needs nonzero constant term");
  const int n = order();
  std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
  b[0] = 1.0 / c_[0];
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += c_[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
    b[static_cast<size_t>(k)] = -acc / c_[0];
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries TruncatedSeries::sqrt() const {
  if (c_[0] <= 0.0) throw SeriesError("series sqrt needs positive constant term");
  const int n = order();
  std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
  b[0] = std::sqrt(c_[0]);
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int j = 1; j < k; ++j) acc += b[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
    b[static_cast<size_t>(k)] = (c_[static_cast<size_t>(k)] - acc) / (2.0 * b[0]);
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries TruncatedSeries::exp() const {
  const int n = order();
  std::vector<double> e(static_cast<size_t>(n) + 1, 0.0);
  e[0] = std::exp(c_[0]);
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j)
      acc += j * c_[static_cast<size_t>(j)] * e[static_cast<size_t>(k - j)];
    e[static_cast<size_t>(k)] = acc / k;
  }
  return TruncatedSeries(std::move(e));
}

double TruncatedSeries::evaluate(double s) const {
  double v = 0.0;
  for (int k = order(); k >= 0; --k) v = v * s + c_[static_cast<size_t>(k)];
  return v;
}

std::array<double, 4> TruncatedSeries::evaluate_jet(double s) const {
  double v = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;
  for (int k = order(); k >= 0; --k) {
    d3 = d3 * s + d2;
    d2 = d2 * s + d1;
    d1 = d1 * s + v;
    v = v * s + c_[static_cast<size_t>(k)];
  }
  return {v, d1, 2.0 * d2, 6.0 * d3};
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner.coeff(0) != 0.0)
    throw SeriesError("series composition needs vanishing inner constant term");
  const int n = std::min(outer.order(), inner.order());
  const TruncatedSeries in = inner.truncated(n);
  TruncatedSeries r = TruncatedSeries::zero(n);
  for (int k = n; k >= 0; --k)
    r = r * in + TruncatedSeries::constant(outer.coeff(k), n);
  return r;
}

TruncatedSeries revert(const TruncatedSeries& f) {
  const int n = f.order();
  if (n < 1) throw SeriesError("reversion needs order >= 1");
  if (f.coeff(0) != 0.0) throw SeriesError("reversion needs vanishing constant term");
  const double a1 = f.coeff(1);
  if (a1 == 0.0) throw SeriesError("reversion needs nonzero linear coefficient");

  const TruncatedSeries id = TruncatedSeries::identity(n);
  TruncatedSeries g = (1.0 / a1) * id;
  const TruncatedSeries df = padded(f.derivative(), n);
  for (int iter = 0; iter < 64; ++iter) {
    const TruncatedSeries err = id - compose(f, g);
    if (err.is_zero(1e-15)) break;
    // err has valuation >= 2, so the padded tail of df never contributes.
    g += err * compose(df, g).inverse();
  }
  return g;
}

// ---------------------------------------------------------------------------

LaurentSeries::LaurentSeries(double value) {
  if (value != 0.0) {
    lead_ = 0;
    c_.assign(1, value);
  }
}

LaurentSeries LaurentSeries::monomial(double c, int exponent, int cap) {
  if (cap < exponent) throw SeriesError("monomial exponent past its cap");
  LaurentSeries s;
  s.cap_ = cap;
  if (c != 0.0) {
    s.lead_ = exponent;
    s.c_.assign(1, c);
  }
  return s;
}

LaurentSeries LaurentSeries::from_taylor(const TruncatedSeries& t, int shift) {
  LaurentSeries s;
  s.lead_ = shift;
  s.cap_ = t.order() + shift;
  s.c_ = t.coeffs();
  s.normalize();
  return s;
}

void LaurentSeries::normalize() {
  size_t lo = 0;
  while (lo < c_.size() && c_[lo] == 0.0) ++lo;
  size_t hi = c_.size();
  while (hi > lo && c_[hi - 1] == 0.0) --hi;
  lead_ += static_cast<int>(lo);
  c_.assign(c_.begin() + lo, c_.begin() + hi);
  if (c_.empty()) lead_ = 0;
}

int LaurentSeries::valuation() const { return c_.empty() ? cap_ : lead_; }

double LaurentSeries::leading_coeff() const { return c_.empty() ? 0.0 : c_.front(); }

double LaurentSeries::coeff(int k) const {
  if (k > cap_) throw SeriesError("Laurent coefficient past truncation cap");
  if (c_.empty() || k < lead_ || k >= lead_ + static_cast<int>(c_.size())) return 0.0;
  return c_[static_cast<size_t>(k - lead_)];
}

LaurentSeries LaurentSeries::truncated(int cap) const {
  LaurentSeries s;
  s.cap_ = std::min(cap, cap_);
  if (!c_.empty() && lead_ <= s.cap_) {
    s.lead_ = lead_;
    const int keep = std::min<int>(static_cast<int>(c_.size()), s.cap_ - lead_ + 1);
    s.c_.assign(c_.begin(), c_.begin() + keep);
    s.normalize();
  }
  return s;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries s(*this);
  for (double& x : s.c_) x = -x;
  return s;
}

LaurentSeries LaurentSeries::derivative() const {
  LaurentSeries s;
  s.cap_ = cap_ == kInfCap ? kInfCap : cap_ - 1;
  if (!c_.empty()) {
    s.lead_ = lead_ - 1;
    s.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
      s.c_[i] = (lead_ + static_cast<int>(i)) * c_[i];
    s.normalize();
  }
  return s;
}

double LaurentSeries::max_abs_coeff() const {
  double m = 0.0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

LaurentSeries LaurentSeries::reciprocal() const {
  if (c_.empty()) throw DegenerateMetricError("reciprocal of the zero series");
  // Valuation must be resolved above round-off or the result is garbage.
  size_t v0 = 0;
  const double scale = max_abs_coeff();
  while (v0 < c_.size() && std::abs(c_[v0]) <= 1e-10 * scale) ++v0;
  if (v0 == c_.size() || std::abs(c_[v0]) <= 1e-10 * scale)
    throw SeriesError("series valuation drowned in round-off; cannot invert");
  if (v0 != 0)
    throw SeriesError("series has round-off garbage ahead of its valuation");

  const int v = lead_;
  if (cap_ == kInfCap && c_.size() == 1)
    return monomial(1.0 / c_[0], -v);  // exact
  const int eff_cap = (cap_ == kInfCap ? lead_ + static_cast<int>(c_.size()) - 1 : cap_);
  const int width = eff_cap - v;
  LaurentSeries r;
  r.lead_ = -v;
  r.cap_ = eff_cap - 2 * v;
  r.c_.assign(static_cast<size_t>(width) + 1, 0.0);
  r.c_[0] = 1.0 / c_[0];
  for (int k = 1; k <= width; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) {
      const double fj = (static_cast<size_t>(j) < c_.size()) ? c_[static_cast<size_t>(j)] : 0.0;
      acc += fj * r.c_[static_cast<size_t>(k - j)];
    }
    r.c_[static_cast<size_t>(k)] = -acc / c_[0];
  }
  r.normalize();
  return r;
}

namespace {

int add_cap(int a, int b) {
  if (a >= LaurentSeries::kInfCap || b >= LaurentSeries::kInfCap)
    return LaurentSeries::kInfCap;
  return std::min(a + b, LaurentSeries::kInfCap);
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries s;
  s.cap_ = std::min(a.cap_, b.cap_);
  if (a.c_.empty() && b.c_.empty()) return s;
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  if (!a.c_.empty()) {
    lo = std::min(lo, a.lead_);
    hi = std::max(hi, a.lead_ + static_cast<int>(a.c_.size()) - 1);
  }
  if (!b.c_.empty()) {
    lo = std::min(lo, b.lead_);
    hi = std::max(hi, b.lead_ + static_cast<int>(b.c_.size()) - 1);
  }
  hi = std::min(hi, s.cap_);
  if (hi < lo) return s;
  s.lead_ = lo;
  s.c_.assign(static_cast<size_t>(hi - lo) + 1, 0.0);
  auto accumulate = [&](const LaurentSeries& x, double sign) {
    for (size_t i = 0; i < x.c_.size(); ++i) {
      const int k = x.lead_ + static_cast<int>(i);
      if (k >= lo && k <= hi) s.c_[static_cast<size_t>(k - lo)] += sign * x.c_[i];
    }
  };
  accumulate(a, 1.0);
  accumulate(b, 1.0);
  s.normalize();
  return s;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries s;
  if (a.c_.empty() || b.c_.empty()) {
    // Unknown tails only enter multiplied by the other factor's lead.
    if (a.cap_ == LaurentSeries::kInfCap || b.cap_ == LaurentSeries::kInfCap) {
      const bool a_exact_zero = a.c_.empty() && a.cap_ == LaurentSeries::kInfCap;
      const bool b_exact_zero = b.c_.empty() && b.cap_ == LaurentSeries::kInfCap;
      if (a_exact_zero || b_exact_zero) return s;  // exact zero
    }
    if (a.c_.empty() && b.c_.empty())
      s.cap_ = add_cap(add_cap(a.cap_, b.cap_), 1);
    else if (a.c_.empty())
      s.cap_ = add_cap(a.cap_, b.lead_);
    else
      s.cap_ = add_cap(b.cap_, a.lead_);
    return s;
  }
  s.lead_ = a.lead_ + b.lead_;
  s.cap_ = std::min(add_cap(a.cap_, b.lead_), add_cap(b.cap_, a.lead_));
  const int hi = std::min(s.cap_, a.lead_ + b.lead_ + static_cast<int>(a.c_.size() + b.c_.size()) - 2);
  if (hi < s.lead_) {
    s.c_.clear();
    s.lead_ = 0;
    return s;
  }
  s.c_.assign(static_cast<size_t>(hi - s.lead_) + 1, 0.0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0.0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      const int k = a.lead_ + static_cast<int>(i) + b.lead_ + static_cast<int>(j);
      if (k > hi) break;
      s.c_[static_cast<size_t>(k - s.lead_)] += a.c_[i] * b.c_[j];
    }
  }
  s.normalize();
  return s;
}

LaurentSeries operator*(double a, const LaurentSeries& b) {
  return LaurentSeries(a) * b;
}

LaurentSeries operator*(const LaurentSeries& a, double b) { return a * LaurentSeries(b); }

}  // namespace adsgeo
