#include <doctest.h>

#include <cmath>
#include <random>

#include "adsgeo/catalog.hpp"
#include "adsgeo/curvature.hpp"
#include "adsgeo/obata.hpp"

using namespace adsgeo;

namespace {

ChartPoint seeded_point(const Chart& c, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_point(c, rng);
}

}  // namespace

TEST_CASE("the potential profile integrates to the hyperbolic cosine") {
  const ComparisonSamples phi = integrate_phi(3.0, 1e-10);
  REQUIRE(phi.s.size() == 121);
  CHECK(phi.value[0] == 1.0);
  CHECK(phi.slope[0] == 0.0);
  CHECK(phi.s[40] == 1.0);
  CHECK(std::abs(phi.value[40] - 1.5430806348152437) < 1e-9);
  CHECK(std::abs(phi.value[80] / phi.value[40] - std::cosh(2.0) / std::cosh(1.0)) < 1e-9);
  for (size_t i = 1; i < phi.value.size(); ++i) CHECK(phi.value[i] > phi.value[i - 1]);
}

TEST_CASE("energy is conserved along the potential profile") {
  const ComparisonSamples phi = integrate_phi(3.0, 1e-10);
  for (size_t i = 0; i < phi.s.size(); ++i)
    CHECK(std::abs(phi.value[i] * phi.value[i] - phi.slope[i] * phi.slope[i] - 1.0) < 1e-9);
}

TEST_CASE("the jacobi profile integrates to the hyperbolic sine") {
  const ComparisonSamples f = integrate_jacobi(3.0, 1e-10);
  CHECK(f.value[0] == 0.0);
  CHECK(f.slope[0] == 1.0);
  CHECK(std::abs(f.value[40] - 1.1752011936438014) < 1e-9);
  for (size_t i = 0; i < f.s.size(); ++i)
    CHECK(std::abs(f.slope[i] * f.slope[i] - f.value[i] * f.value[i] - 1.0) < 1e-9);
}

TEST_CASE("the spherical curvature hook gives the circular profile") {
  const double half_pi = 2.0 * std::atan(1.0);
  const ComparisonSamples f = integrate_jacobi(half_pi, 1e-10, 1.0);
  CHECK(std::abs(f.value.back() - 1.0) < 1e-9);
  CHECK(std::abs(f.slope.back()) < 1e-9);
  for (size_t i = 0; i < f.s.size(); ++i) {
    CHECK(std::abs(f.value[i] - std::sin(f.s[i])) < 1e-9);
    CHECK(std::abs(f.slope[i] * f.slope[i] + f.value[i] * f.value[i] - 1.0) < 1e-9);
  }
}

TEST_CASE("bad comparison configurations are refused") {
  CHECK_THROWS_AS(integrate_phi(0.0, 1e-10), ConfigError);
  CHECK_THROWS_AS(integrate_phi(-2.0, 1e-10), ConfigError);
  CHECK_THROWS_AS(integrate_jacobi(1.0, 0.0), ConfigError);
  CHECK_THROWS_AS(solve_obata(1, 3.0, 1e-10), ConfigError);
}

TEST_CASE("the reconstruction solves the rigidity equation") {
  for (int n : {3, 4}) {
    const ObataSolution sol = solve_obata(n, 3.0, 1e-10);
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const ChartPoint p = seeded_point(sol.reconstructed.chart(), 800 + seed);
      CHECK(verify_rigidity(sol, p) < 1e-9);
    }
  }
}

TEST_CASE("the reconstructed metric is hyperbolic") {
  for (int n : {3, 4}) {
    const ObataSolution sol = solve_obata(n, 3.0, 1e-10);
    for (uint64_t seed = 0; seed < 5; ++seed) {
      const ChartPoint p = seeded_point(sol.reconstructed.chart(), 60 + seed);
      const CurvatureBundle cb = curvature_bundle(sol.reconstructed, p);
      for (int a = 0; a < cb.dim; ++a)
        for (int b = 0; b < cb.dim; ++b)
          CHECK(std::abs(cb.ricci_at(a, b) + (n - 1.0) * cb.metric_at(a, b)) < 1e-8);
    }
  }
}

TEST_CASE("the radial curvature input is reproduced as an output") {
  const ObataSolution sol = solve_obata(3, 3.0, 1e-10);
  const int m = 2;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const ChartPoint p = seeded_point(sol.reconstructed.chart(), 330 + seed);
    const std::vector<double> fr = frame_curvature(sol, p);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        CHECK(std::abs(fr[static_cast<size_t>(i) * m + j] + (i == j ? 1.0 : 0.0)) < 1e-8);
  }
}

TEST_CASE("the integrated profiles land on the ball model") {
  const ObataSolution sol = solve_obata(3, 3.0, 1e-10);
  CHECK(ball_model_gap(sol) < 1e-10);

  // r = f(s) carries the reconstructed metric to the ball profile
  const MetricField ball = hyperbolic_radial_metric(3);
  const double f1 = sol.jacobi[40];
  const double fp1 = sol.jacobi_slope[40];
  std::vector<double> coords = {f1, 0.8, 2.1};
  const ChartPoint q(ball.chart(), coords);
  const ChartPoint ps(sol.reconstructed.chart(), {1.0, 0.8, 2.1});
  CHECK(ball.component(0, 0).value(q) * fp1 * fp1 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ball.component(1, 1).value(q) ==
        doctest::Approx(sol.reconstructed.component(1, 1).value(ps)).epsilon(1e-10));
}

TEST_CASE("pole-adjacent points are rejected by the chart") {
  const ObataSolution sol = solve_obata(3, 3.0, 1e-10);
  const Chart& c = sol.reconstructed.chart();
  CHECK_THROWS_AS(ChartPoint(c, {1.0, 0.0, 2.1}), ChartError);
  CHECK_THROWS_AS(ChartPoint(c, {0.0, 0.8, 2.1}), ChartError);
}
