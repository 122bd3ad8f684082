#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "adsgeo/catalog.hpp"
#include "adsgeo/curvature.hpp"
#include "adsgeo/fg.hpp"

using namespace adsgeo;

namespace {

double max_coeff_gap(const TruncatedSeries& a, const TruncatedSeries& b) {
  REQUIRE(a.order() == b.order());
  double m = 0.0;
  for (int k = 0; k <= a.order(); ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
  return m;
}

/// Mass aspect of the exterior profile family in the inverse-radius
/// variable: V - |grad sqrt(V)|^2 - 1 = -(n-1) M w^{n-2} - ((n-2)^2 M^2 / 4) w^{2n-2}.
TruncatedSeries mass_aspect_profile(int n, double mass, int order) {
  TruncatedSeries t = TruncatedSeries::zero(order);
  t.at(n - 2) = -(n - 1) * mass;
  if (2 * n - 2 <= order) t.at(2 * n - 2) -= 0.25 * (n - 2) * (n - 2) * mass * mass;
  return t;
}

}  // namespace

TEST_CASE("zero boundary data reproduces the exact warp factors") {
  const FGSolution sol = fg_recursion(3, 6);
  CHECK(max_coeff_gap(sol.metric.A2, ads_time_warp_sq(6)) < 1e-12);
  CHECK(max_coeff_gap(sol.metric.B2, ads_sphere_warp_sq(6)) < 1e-12);
  CHECK(sol.metric.A2.coeff(0) == 1.0);
  CHECK(sol.metric.A2.coeff(2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(sol.metric.A2.coeff(4) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  CHECK(std::abs(sol.tau00) < 1e-13);
  CHECK(std::abs(sol.alpha) < 1e-13);
  CHECK(sol.max_odd_below_n < 1e-13);
  CHECK(sol.trace_residual < 1e-12);
  CHECK(sol.cross_residual < 1e-12);
  CHECK(sol.max_affine_defect < 1e-12);
}

TEST_CASE("orders below the free one ignore the seed") {
  const FGSolution a = fg_recursion(5, 7, 0.2);
  const FGSolution b = fg_recursion(5, 7, -1.4);
  for (int k = 0; k <= 4; ++k) {
    CHECK(a.metric.A2.coeff(k) == doctest::Approx(b.metric.A2.coeff(k)).epsilon(1e-12));
    CHECK(a.metric.B2.coeff(k) == doctest::Approx(b.metric.B2.coeff(k)).epsilon(1e-12));
  }
  CHECK(a.metric.B2.coeff(5) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(b.metric.B2.coeff(5) == doctest::Approx(-1.4).epsilon(1e-12));
  // The free order is trace-free with respect to the boundary product form.
  CHECK(a.metric.A2.coeff(5) == doctest::Approx(-4.0 * 0.2).epsilon(1e-10));
  CHECK(b.metric.A2.coeff(5) == doctest::Approx(-4.0 * -1.4).epsilon(1e-10));
  CHECK(a.max_odd_below_n < 1e-12);
  CHECK(a.trace_residual < 1e-10);
  // The tail above the free order reacts nonlinearly to the seed.
  CHECK(std::abs(a.metric.A2.coeff(7) - b.metric.A2.coeff(7)) > 1e-3);
}

TEST_CASE("radial exterior profile converts to the normal form") {
  const TruncatedSeries pv = static_catalog_profile(3, 1.0, 6);
  const RadialGauge rg = radial_fg_gauge(3, 6, pv, pv);
  const FGSolution& sol = rg.solution;

  CHECK(sol.metric.A2.coeff(2) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(sol.metric.A2.coeff(3) == doctest::Approx(-2.0 / 3.0).epsilon(1e-13));
  CHECK(sol.metric.A2.coeff(4) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  CHECK(sol.metric.B2.coeff(2) == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(sol.metric.B2.coeff(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(sol.metric.B2.coeff(4) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));

  CHECK(sol.tau00 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(sol.tau_sphere == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(sol.alpha == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
  CHECK(sol.trace_residual < 1e-12);
  CHECK(sol.max_odd_below_n < 1e-13);
  CHECK(rg.identity_residual < 1e-12);

  // Inverse radius as a series in the defining function.
  CHECK(rg.w_of_s.coeff(1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(rg.w_of_s.coeff(2)) < 1e-14);
  CHECK(rg.w_of_s.coeff(3) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(rg.w_of_s.coeff(4) == doctest::Approx(-1.0 / 6.0).epsilon(1e-13));
  CHECK(rg.w_of_s.coeff(5) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("recursion and gauge transform agree on the exterior family") {
  for (double mass : {0.5, 1.0}) {
    const TruncatedSeries pv = static_catalog_profile(3, mass, 6);
    const RadialGauge rg = radial_fg_gauge(3, 6, pv, pv);
    const FGSolution rec = fg_recursion(3, 6, rg.solution.tau_sphere);
    CHECK(max_coeff_gap(rec.metric.A2, rg.solution.metric.A2) < 1e-10);
    CHECK(max_coeff_gap(rec.metric.B2, rg.solution.metric.B2) < 1e-10);
  }
  // Same agreement one odd dimension up.
  const TruncatedSeries pv5 = static_catalog_profile(5, 1.0, 8);
  const RadialGauge rg5 = radial_fg_gauge(5, 8, pv5, pv5);
  const FGSolution rec5 = fg_recursion(5, 8, rg5.solution.tau_sphere);
  CHECK(max_coeff_gap(rec5.metric.A2, rg5.solution.metric.A2) < 1e-10);
  CHECK(max_coeff_gap(rec5.metric.B2, rg5.solution.metric.B2) < 1e-10);
}

TEST_CASE("sphere-trace of the free term matches the mass aspect series") {
  for (int n : {3, 5}) {
    for (double mass : {0.5, 1.0, 2.0}) {
      const int N = n + 3;
      const TruncatedSeries pv = static_catalog_profile(n, mass, N);
      const RadialGauge rg = radial_fg_gauge(n, N, pv, pv);
      const TruncatedSeries w_aspect = mass_aspect_profile(n, mass, N);
      const TruncatedSeries s_aspect = compose(w_aspect, rg.w_of_s);
      CHECK(s_aspect.coeff(n - 2) ==
            doctest::Approx(n * rg.solution.alpha).epsilon(1e-10));
      for (int k = 0; k < n - 2; ++k) CHECK(std::abs(s_aspect.coeff(k)) < 1e-12);
    }
  }
}

TEST_CASE("free-term trace is linear in the mass") {
  std::vector<double> ratio;
  for (double mass : {0.5, 1.0, 2.0}) {
    const TruncatedSeries pv = static_catalog_profile(3, mass, 6);
    const RadialGauge rg = radial_fg_gauge(3, 6, pv, pv);
    ratio.push_back(rg.solution.alpha / mass);
  }
  CHECK(ratio[0] == doctest::Approx(ratio[1]).epsilon(1e-10));
  CHECK(ratio[2] == doctest::Approx(ratio[1]).epsilon(1e-10));
  CHECK(ratio[1] == doctest::Approx(-2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("massless profile converts to the exact warp factors") {
  const TruncatedSeries pv = static_catalog_profile(3, 0.0, 6);
  const RadialGauge rg = radial_fg_gauge(3, 6, pv, pv);
  CHECK(max_coeff_gap(rg.solution.metric.A2, ads_time_warp_sq(6)) < 1e-12);
  CHECK(max_coeff_gap(rg.solution.metric.B2, ads_sphere_warp_sq(6)) < 1e-12);
  CHECK(std::abs(rg.solution.alpha) < 1e-12);
}

TEST_CASE("even boundary dimension stops below the obstruction") {
  CHECK_THROWS_AS(fg_recursion(4, 6), EvenDimensionLogError);
  const FGSolution sol = fg_recursion(4, 6, 0.0, true);
  CHECK(sol.metric.A2.order() == 3);
  CHECK(max_coeff_gap(sol.metric.A2, ads_time_warp_sq(3)) < 1e-12);
  CHECK(max_coeff_gap(sol.metric.B2, ads_sphere_warp_sq(3)) < 1e-12);
  CHECK(sol.alpha == 0.0);
}

TEST_CASE("bad expansion configurations are refused") {
  CHECK_THROWS_AS(fg_recursion(2, 5), ConfigError);
  CHECK_THROWS_AS(fg_recursion(3, 2), ConfigError);
  CHECK_THROWS_AS(static_catalog_profile(3, 1.0, 2), ConfigError);

  TruncatedSeries tilted = static_catalog_profile(3, 1.0, 6);
  tilted.at(1) = 0.3;
  const TruncatedSeries pv = static_catalog_profile(3, 1.0, 6);
  CHECK_THROWS_AS(radial_fg_gauge(3, 6, tilted, pv), SolveError);
  CHECK_THROWS_AS(radial_fg_gauge(3, 6, pv, tilted), SolveError);
}

TEST_CASE("series field evaluates the polynomial with its jets") {
  const Chart c = fg_chart(3);
  TruncatedSeries t = TruncatedSeries::zero(5);
  t.at(0) = 1.0;
  t.at(2) = -0.7;
  t.at(5) = 0.31;
  const ScalarField f = series_field(c, 1, t);
  const ChartPoint p(c, {0.1, 0.62, 1.2, 0.8});
  const DJet j = f.eval(p, 3);
  const auto ref = t.evaluate_jet(0.62);
  CHECK(j.value() == doctest::Approx(ref[0]).epsilon(1e-14));
  CHECK(j.d1(1) == doctest::Approx(ref[1]).epsilon(1e-14));
  CHECK(j.d2(1, 1) == doctest::Approx(ref[2]).epsilon(1e-14));
  CHECK(j.d3(1, 1, 1) == doctest::Approx(ref[3]).epsilon(1e-14));
  CHECK(std::abs(j.d1(0)) == 0.0);
  CHECK(std::abs(j.d1(2)) == 0.0);
}

TEST_CASE("realized zero-data expansion is a vacuum metric pointwise") {
  WarpedSeriesMetric m;
  m.n = 3;
  m.A2 = ads_time_warp_sq(8);
  m.B2 = ads_sphere_warp_sq(8);
  const MetricField g = warped_series_metric_field(m);
  std::mt19937_64 rng(20260814);
  for (int i = 0; i < 6; ++i) {
    const ChartPoint p = sample_point(g.chart(), rng);
    CHECK(einstein_residual(g, p) < 1e-9);
  }
}

TEST_CASE("truncating a massive solution leaves a residual of the cut order") {
  const int N = 6;
  const TruncatedSeries pv = static_catalog_profile(3, 1.0, N);
  const RadialGauge rg = radial_fg_gauge(3, N, pv, pv);
  const MetricField g = warped_series_metric_field(rg.solution.metric);

  std::vector<double> ss = {0.1, 0.05, 0.025};
  std::vector<double> res;
  for (double s : ss) {
    const ChartPoint p(g.chart(), {0.2, s, 1.1, 0.7});
    res.push_back(einstein_residual(g, p));
  }
  CHECK(res[0] > 1e-12);
  // Least-squares slope of log(residual) against log(s).
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < ss.size(); ++i) {
    const double x = std::log(ss[i]), y = std::log(res[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double count = static_cast<double>(ss.size());
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  CHECK(slope >= N - 2);
}
