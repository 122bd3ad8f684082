#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "adsgeo/jet.hpp"
#include "support/finite_diff.hpp"

using adsgeo::DJet;
using adsgeo::Jet;
using adsgeo::LaurentSeries;

TEST_CASE("product rule on x^2 y is exact") {
  const double xv = 2.0, yv = 3.0;
  const DJet x = DJet::variable(2, 3, xv, 0);
  const DJet y = DJet::variable(2, 3, yv, 1);
  const DJet f = x * x * y;
  CHECK(f.value() == 12.0);
  CHECK(f.d1(0) == 2 * xv * yv);
  CHECK(f.d1(1) == xv * xv);
  CHECK(f.d2(0, 0) == 2 * yv);
  CHECK(f.d2(0, 1) == 2 * xv);
  CHECK(f.d2(1, 1) == 0.0);
  CHECK(f.d3(0, 0, 1) == 2.0);
  CHECK(f.d3(0, 0, 0) == 0.0);
}

TEST_CASE("reciprocal jet matches 1/x calculus") {
  const DJet x = DJet::variable(1, 3, 2.0, 0);
  const DJet r = x.reciprocal();
  CHECK(r.value() == doctest::Approx(0.5));
  CHECK(r.d1(0) == doctest::Approx(-0.25));
  CHECK(r.d2(0, 0) == doctest::Approx(0.25));
  CHECK(r.d3(0, 0, 0) == doctest::Approx(-0.375));
}

TEST_CASE("chain rule through sin(x^2)") {
  const double xv = 0.7;
  const DJet x = DJet::variable(1, 3, xv, 0);
  const DJet f = adsgeo::jet_math::sin(x * x);
  const double s = std::sin(xv * xv), c = std::cos(xv * xv);
  CHECK(f.value() == doctest::Approx(s).epsilon(1e-15));
  CHECK(f.d1(0) == doctest::Approx(2 * xv * c).epsilon(1e-14));
  CHECK(f.d2(0, 0) == doctest::Approx(2 * c - 4 * xv * xv * s).epsilon(1e-14));
  CHECK(f.d3(0, 0, 0) ==
        doctest::Approx(-12 * xv * s - 8 * xv * xv * xv * c).epsilon(1e-13));
}

TEST_CASE("pow(f, 1/2) agrees with sqrt") {
  const DJet x = DJet::variable(1, 3, 1.9, 0);
  const DJet f = x * x + 1.0;
  const DJet a = adsgeo::jet_math::sqrt(f);
  const DJet b = adsgeo::jet_math::pow(f, 0.5);
  CHECK(a.value() == doctest::Approx(b.value()).epsilon(1e-14));
  CHECK(a.d1(0) == doctest::Approx(b.d1(0)).epsilon(1e-13));
  CHECK(a.d2(0, 0) == doctest::Approx(b.d2(0, 0)).epsilon(1e-13));
  CHECK(a.d3(0, 0, 0) == doctest::Approx(b.d3(0, 0, 0)).epsilon(1e-12));
}

namespace {

// A nontrivial smooth 3-variable test function exercised both through jets
// and through plain double evaluation for the finite-difference oracle.
template <typename T, typename Ops>
T sample_expr(const std::vector<T>& x, const Ops& ops) {
  const T a = x[0] * x[1] + ops.sinv(x[2]);
  const T b = ops.expv(x[0] * ops.from(0.3)) + x[2] * x[2] * x[1];
  return a * b + ops.sqrtv(x[1] * x[1] + ops.from(1.0)) * a;
}

struct DoubleOps {
  double from(double c) const { return c; }
  double sinv(double v) const { return std::sin(v); }
  double expv(double v) const { return std::exp(v); }
  double sqrtv(double v) const { return std::sqrt(v); }
};

struct JetOps {
  double from(double c) const { return c; }
  DJet sinv(const DJet& v) const { return adsgeo::jet_math::sin(v); }
  DJet expv(const DJet& v) const { return adsgeo::jet_math::exp(v); }
  DJet sqrtv(const DJet& v) const { return adsgeo::jet_math::sqrt(v); }
};

}  // namespace

TEST_CASE("jet derivatives agree with the finite-difference oracle") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> p = {u(rng), u(rng) + 1.5, u(rng)};
    std::vector<DJet> xj;
    for (int i = 0; i < 3; ++i) xj.push_back(DJet::variable(3, 3, p[i], i));
    const DJet f = sample_expr(xj, JetOps{});

    testsupport::Fn fn = [](const std::vector<double>& y) {
      return sample_expr(y, DoubleOps{});
    };
    CHECK(f.value() == doctest::Approx(fn(p)).epsilon(1e-13));
    for (int a = 0; a < 3; ++a) {
      const double fd = testsupport::fd1(fn, p, a);
      CHECK(f.d1(a) == doctest::Approx(fd).epsilon(1e-4));
      for (int b = a; b < 3; ++b) {
        const double fd2 = testsupport::fd2(fn, p, a, b);
        CHECK(f.d2(a, b) == doctest::Approx(fd2).epsilon(2e-4));
      }
    }
    const double fd3 = testsupport::fd3(fn, p, 0, 1, 2);
    CHECK(f.d3(0, 1, 2) == doctest::Approx(fd3).epsilon(5e-3));
  }
}

TEST_CASE("mixed partials come out symmetric") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.2, 1.2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<DJet> x;
    for (int i = 0; i < 3; ++i) x.push_back(DJet::variable(3, 3, u(rng), i));
    const DJet f = sample_expr(x, JetOps{});
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        CHECK(f.d2(a, b) == doctest::Approx(f.d2(b, a)).epsilon(1e-14));
        for (int c = 0; c < 3; ++c) {
          CHECK(f.d3(a, b, c) == doctest::Approx(f.d3(b, a, c)).epsilon(1e-13));
          CHECK(f.d3(a, b, c) == doctest::Approx(f.d3(a, c, b)).epsilon(1e-13));
        }
      }
  }
}

TEST_CASE("partial() shifts derivative data down one order") {
  const DJet x = DJet::variable(2, 3, 1.1, 0);
  const DJet y = DJet::variable(2, 3, -0.4, 1);
  const DJet f = x * x * y + y * y * x;
  const DJet fx = f.partial(0);
  CHECK(fx.order() == 2);
  CHECK(fx.value() == doctest::Approx(f.d1(0)));
  CHECK(fx.d1(1) == doctest::Approx(f.d2(0, 1)));
  CHECK(fx.d2(1, 1) == doctest::Approx(f.d3(0, 1, 1)));
}

TEST_CASE("jets over Laurent series propagate the series derivative slot") {
  // Emulates a warped-product component: value ring is a series in s and the
  // jet's s-slot holds d/ds of the series.
  const LaurentSeries s = LaurentSeries::monomial(1.0, 1, 12);
  Jet<LaurentSeries> f(1, 2, s * s);
  f.d1(0) = (s * s).derivative();
  f.d2(0, 0) = (s * s).derivative().derivative();
  const Jet<LaurentSeries> g = f * f;  // s^4
  CHECK(g.value().coeff(4) == doctest::Approx(1.0));
  CHECK(g.d1(0).coeff(3) == doctest::Approx(4.0));
  CHECK(g.d2(0, 0).coeff(2) == doctest::Approx(12.0));
  const Jet<LaurentSeries> r = f.reciprocal();  // s^-2
  CHECK(r.value().coeff(-2) == doctest::Approx(1.0));
  CHECK(r.d1(0).coeff(-3) == doctest::Approx(-2.0));
}
