#include <doctest.h>

#include <cmath>
#include <vector>

#include "adsgeo/series.hpp"

using adsgeo::LaurentSeries;
using adsgeo::TruncatedSeries;

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

TruncatedSeries sin_series(int order) {
  TruncatedSeries t = TruncatedSeries::zero(order);
  for (int k = 1; k <= order; k += 2)
    t.at(k) = ((k / 2) % 2 == 0 ? 1.0 : -1.0) / factorial(k);
  return t;
}

}  // namespace

TEST_CASE("truncated arithmetic keeps the smaller order") {
  const TruncatedSeries a = TruncatedSeries::constant(1.0, 5);
  const TruncatedSeries b = TruncatedSeries::identity(3);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK_THROWS_AS((a * b).coeff(4), adsgeo::OrderError);
}

TEST_CASE("reciprocal of 1-s is the geometric series") {
  TruncatedSeries f = TruncatedSeries::constant(1.0, 8);
  f.at(1) = -1.0;
  const TruncatedSeries g = f.inverse();
  for (int k = 0; k <= 8; ++k) CHECK(g.coeff(k) == doctest::Approx(1.0).epsilon(1e-14));
  const TruncatedSeries prod = f * g;
  CHECK(prod.coeff(0) == doctest::Approx(1.0));
  for (int k = 1; k <= 8; ++k) CHECK(prod.coeff(k) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("sqrt inverts squaring") {
  TruncatedSeries f = TruncatedSeries::constant(1.0, 6);
  f.at(1) = 2.0;
  f.at(3) = -0.5;
  const TruncatedSeries r = (f * f).sqrt();
  for (int k = 0; k <= 6; ++k) CHECK(r.coeff(k) == doctest::Approx(f.coeff(k)).epsilon(1e-13));
}

TEST_CASE("exp of s has factorial coefficients") {
  const TruncatedSeries e = TruncatedSeries::identity(9).exp();
  for (int k = 0; k <= 9; ++k)
    CHECK(e.coeff(k) == doctest::Approx(1.0 / factorial(k)).epsilon(1e-13));
}

TEST_CASE("derivative and antiderivative are inverse up to truncation") {
  TruncatedSeries f = TruncatedSeries::zero(5);
  for (int k = 0; k <= 5; ++k) f.at(k) = 0.3 * k * k - 1.0;
  const TruncatedSeries g = f.derivative().antiderivative();
  for (int k = 1; k <= 5; ++k) CHECK(g.coeff(k) == doctest::Approx(f.coeff(k)));
  CHECK(g.coeff(0) == 0.0);
}

TEST_CASE("evaluate_jet matches monomial calculus") {
  TruncatedSeries f = TruncatedSeries::zero(5);
  f.at(5) = 2.0;  // 2 s^5
  const auto j = f.evaluate_jet(1.3);
  const double s = 1.3;
  CHECK(j[0] == doctest::Approx(2 * std::pow(s, 5)).epsilon(1e-14));
  CHECK(j[1] == doctest::Approx(10 * std::pow(s, 4)).epsilon(1e-14));
  CHECK(j[2] == doctest::Approx(40 * std::pow(s, 3)).epsilon(1e-14));
  CHECK(j[3] == doctest::Approx(120 * s * s).epsilon(1e-14));
}

TEST_CASE("reversion of sin gives arcsin") {
  const int order = 11;
  const TruncatedSeries g = revert(sin_series(order));
  // arcsin coefficients (2k)! / (4^k (k!)^2 (2k+1))
  for (int k = 0; 2 * k + 1 <= order; ++k) {
    const double expect =
        factorial(2 * k) / (std::pow(4.0, k) * std::pow(factorial(k), 2) * (2 * k + 1));
    CHECK(g.coeff(2 * k + 1) == doctest::Approx(expect).epsilon(1e-12));
  }
  const TruncatedSeries id = compose(sin_series(order), g);
  CHECK(id.coeff(1) == doctest::Approx(1.0).epsilon(1e-13));
  for (int k = 2; k <= order; ++k) CHECK(id.coeff(k) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("composition rejects nonzero inner constant term") {
  const TruncatedSeries f = TruncatedSeries::identity(4);
  const TruncatedSeries bad = TruncatedSeries::constant(0.5, 4);
  CHECK_THROWS_AS(compose(f, bad), adsgeo::SeriesError);
  CHECK_THROWS_AS(revert(bad), adsgeo::SeriesError);
}

TEST_CASE("Laurent monomial algebra") {
  const LaurentSeries a = LaurentSeries::monomial(3.0, -2);
  const LaurentSeries b = LaurentSeries::monomial(0.5, 5);
  const LaurentSeries p = a * b;
  CHECK(p.lead() == 3);
  CHECK(p.coeff(3) == doctest::Approx(1.5));
  CHECK(p.coeff(0) == 0.0);
}

TEST_CASE("Laurent reciprocal tracks the trust cap") {
  // s^2 (1 + s), coefficients trusted through s^3
  TruncatedSeries t = TruncatedSeries::constant(1.0, 1);
  t.at(1) = 1.0;
  const LaurentSeries f = LaurentSeries::from_taylor(t, 2);
  CHECK(f.cap() == 3);
  const LaurentSeries r = f.reciprocal();
  CHECK(r.lead() == -2);
  CHECK(r.cap() == -1);
  CHECK(r.coeff(-2) == doctest::Approx(1.0));
  CHECK(r.coeff(-1) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(r.coeff(0), adsgeo::SeriesError);
  const LaurentSeries one = f * r;
  CHECK(one.coeff(0) == doctest::Approx(1.0));
}

TEST_CASE("Laurent exact cancellation stays exact") {
  TruncatedSeries t = TruncatedSeries::constant(1.0, 3);
  t.at(1) = 1.0;
  const LaurentSeries f = LaurentSeries::from_taylor(t, 0);
  const LaurentSeries d = f - LaurentSeries(1.0) - LaurentSeries::monomial(1.0, 1);
  CHECK(d.is_zero());
  CHECK(d.cap() == 3);
  CHECK_THROWS_AS(d.coeff(4), adsgeo::SeriesError);
}

TEST_CASE("Laurent derivative shifts exponents down") {
  const LaurentSeries f = LaurentSeries::monomial(2.0, -1);
  const LaurentSeries d = f.derivative();
  CHECK(d.lead() == -2);
  CHECK(d.coeff(-2) == doctest::Approx(-2.0));
}

TEST_CASE("reciprocal refuses a valuation drowned in noise") {
  const LaurentSeries f =
      LaurentSeries::monomial(1e-17, 0, 5) + LaurentSeries::monomial(1.0, 1, 5);
  CHECK_THROWS_AS(f.reciprocal(), adsgeo::SeriesError);
}

TEST_CASE("exact constant reciprocal keeps unbounded cap") {
  const LaurentSeries c(2.0);
  const LaurentSeries r = c.reciprocal();
  CHECK(r.coeff(0) == doctest::Approx(0.5));
  CHECK(r.cap() == LaurentSeries::kInfCap);
}
