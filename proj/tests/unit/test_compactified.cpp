#include <doctest.h>

#include <cmath>
#include <random>

#include "adsgeo/catalog.hpp"
#include "adsgeo/compactified.hpp"
#include "adsgeo/curvature.hpp"
#include "adsgeo/static_triple.hpp"

using namespace adsgeo;

namespace {

ChartPoint seeded_point(const Chart& c, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_point(c, rng);
}

// slice with the conformal factor doubled; the curvature engine must see the
// quarter scalar while the mass-aspect form stays put
CompactifiedSlice doubled_factor(const CompactifiedSlice& c) {
  const int d = c.base.chart.dim();
  std::vector<ScalarField> upper;
  upper.reserve(static_cast<size_t>(d * (d + 1) / 2));
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) upper.push_back(4.0 * c.gbar.component(a, b));
  MetricField g2(c.gbar.id() + "-doubled", c.base.chart, Signature::riemannian, std::move(upper));
  return CompactifiedSlice{c.base, 2.0 * c.u, std::move(g2)};
}

}  // namespace

TEST_CASE("the compactified pure slice is flat") {
  for (int n : {3, 4}) {
    const StaticTriple t = ads_triple(n);
    const CompactifiedSlice c = compactify(t);
    for (uint64_t seed = 0; seed < 6; ++seed) {
      const ChartPoint p = seeded_point(t.chart, 900 + seed);
      const CurvatureBundle cb = curvature_bundle(c.gbar, p);
      CHECK(sup_norm(cb.riemann_lo) < 1e-8);
    }
  }
}

TEST_CASE("the conformal factor closes off the slice") {
  const StaticTriple t = ads_triple(3);
  const CompactifiedSlice c = compactify(t);
  const ChartPoint near(t.chart, {0.5, 0.8, 2.1});
  const ChartPoint far(t.chart, {1e6, 0.8, 2.1});
  CHECK(c.u.value(near) > 0.1);
  CHECK(c.u.value(far) > 0.0);
  CHECK(c.u.value(far) < 2e-6);
}

TEST_CASE("the divergence identity holds on both exterior families") {
  const StaticTriple ads = ads_triple(3);
  for (uint64_t seed = 0; seed < 10; ++seed)
    CHECK(std::abs(bochner_residual(ads, seeded_point(ads.chart, 910 + seed))) < 1e-8);

  const StaticTriple sads = schwarzschild_triple(3, 1.0);
  const ScalarField w = mass_aspect_field(sads);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const ChartPoint p = seeded_point(sads.chart, 700 + seed);
    CHECK(std::abs(bochner_residual(sads, p)) < 1e-7);
    // every term of the identity is individually live here
    CHECK(mass_aspect(sads, p) < -0.3);
    CHECK(rigidity_check(sads, p) > 0.05);
    CHECK(std::abs(laplacian(sads.h, w, p)) > 0.1);
  }
}

TEST_CASE("off-shell profiles break the divergence identity") {
  RadialProfile v = [](const DJet& r) { return r * r + r * r * r * 0.1 + 1.0; };
  RadialProfile f = [](const DJet& r) { return r * r * 0.9 + 1.0; };
  const StaticTriple t = make_static_triple(3, v, f, "offshell", 0.0, 0.4, 2.6);
  CHECK(std::abs(bochner_residual(t, seeded_point(t.chart, 17))) > 1e-3);
}

TEST_CASE("a negative potential is refused") {
  RadialProfile v = [](const DJet& r) { return 1.0 - r * r; };
  RadialProfile f = [](const DJet& r) { return r * r + 1.0; };
  const StaticTriple t = make_static_triple(3, v, f, "negative", 0.0, 1.5, 2.5);
  CHECK_THROWS_AS(bochner_residual(t, seeded_point(t.chart, 3)), DegenerateMetricError);
}

TEST_CASE("three scalar curvature computations agree") {
  const StaticTriple triples[] = {ads_triple(3), schwarzschild_triple(3, 1.0),
                                  schwarzschild_triple(4, 0.7)};
  for (const StaticTriple& t : triples) {
    const CompactifiedSlice c = compactify(t);
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const ChartPoint p = seeded_point(t.chart, 500 + seed);
      const ConformalScalarCheck k = conformal_scalar_check(c, p);
      const double scale = std::max(1.0, std::abs(k.direct));
      CHECK(std::abs(k.direct - k.conformal_laplacian) < 1e-6 * scale);
      CHECK(std::abs(k.direct - k.mass_aspect_form) < 1e-6 * scale);
    }
  }
}

TEST_CASE("the compactified scalar matches the closed form at a pinned radius") {
  const StaticTriple t = schwarzschild_triple(3, 1.0);
  const CompactifiedSlice c = compactify(t);
  const ChartPoint p(t.chart, {2.0, 0.8, 2.1});
  const ConformalScalarCheck k = conformal_scalar_check(c, p);
  CHECK(k.mass_aspect_form == doctest::Approx(-6.09375).epsilon(1e-12));
  CHECK(std::abs(k.direct + 6.09375) < 1e-6);

  const StaticTriple ads = ads_triple(3);
  const CompactifiedSlice ca = compactify(ads);
  const ConformalScalarCheck ka = conformal_scalar_check(ca, seeded_point(ads.chart, 41));
  CHECK(std::abs(ka.direct) < 1e-8);
  CHECK(std::abs(ka.mass_aspect_form) < 1e-12);
}

TEST_CASE("doubling the conformal factor quarters only the curvature computations") {
  const StaticTriple t = schwarzschild_triple(3, 1.0);
  const CompactifiedSlice c = compactify(t);
  const CompactifiedSlice c2 = doubled_factor(c);
  const ChartPoint p(t.chart, {2.0, 0.8, 2.1});
  const ConformalScalarCheck k = conformal_scalar_check(c, p);
  const ConformalScalarCheck k2 = conformal_scalar_check(c2, p);
  CHECK(k2.direct == doctest::Approx(k.direct / 4.0).epsilon(1e-9));
  CHECK(k2.conformal_laplacian == doctest::Approx(k2.direct).epsilon(1e-8));
  CHECK(k2.mass_aspect_form == doctest::Approx(k.mass_aspect_form).epsilon(1e-12));
  CHECK(std::abs(k2.mass_aspect_form - k2.direct) > 4.0);
}

TEST_CASE("the conformal comparison needs at least three slice dimensions") {
  RadialProfile v = [](const DJet& r) { return r * r + 1.0; };
  const StaticTriple t = make_static_triple(2, v, v, "low", 0.0, 0.4, 2.6);
  const CompactifiedSlice c = compactify(t);
  CHECK_THROWS_AS(conformal_scalar_check(c, seeded_point(t.chart, 9)), ConfigError);
}

TEST_CASE("the hessian gap separates the pure slice from the massive one") {
  const StaticTriple ads = ads_triple(3);
  for (uint64_t seed = 0; seed < 10; ++seed)
    CHECK(rigidity_check(ads, seeded_point(ads.chart, 100 + seed)) < 1e-9);

  const StaticTriple sads = schwarzschild_triple(3, 1.0);
  for (uint64_t seed = 0; seed < 10; ++seed)
    CHECK(rigidity_check(sads, seeded_point(sads.chart, 100 + seed)) > 1e-2);
}

TEST_CASE("the hessian gap is homogeneous while the mass aspect is not") {
  const double c = 1.7;
  RadialProfile v = [c](const DJet& r) { return (r * r + 1.0) * (c * c); };
  RadialProfile f = [](const DJet& r) { return r * r + 1.0; };
  const StaticTriple t = make_static_triple(3, v, f, "scaled", 0.0, 0.4, 2.6);
  const ChartPoint p = seeded_point(t.chart, 5);
  CHECK(rigidity_check(t, p) < 1e-9);
  CHECK(mass_aspect(t, p) == doctest::Approx(c * c - 1.0).epsilon(1e-10));
}

TEST_CASE("the scalar scan clears the vacuum and flags the horizon region") {
  const ScalarScan vac = nonneg_scalar_scan(ads_triple(3), {0.5, 1.0, 2.0, 5.0});
  for (double v : vac.values) CHECK(std::abs(v) < 1e-10);

  std::vector<double> grid;
  for (int i = 0; i <= 200; ++i) grid.push_back(0.69 + (50.0 - 0.69) * i / 200.0);
  const ScalarScan scan = nonneg_scalar_scan(schwarzschild_triple(3, 1.0), grid);
  CHECK(scan.min_value < -20.0);
  CHECK(scan.r_at_min == doctest::Approx(0.69));
  CHECK(scan.values.back() > -0.5);

  const ScalarScan none = nonneg_scalar_scan(schwarzschild_triple(3, 0.0), {1.0, 2.0, 10.0});
  CHECK(std::abs(none.min_value) < 1e-10);
}

TEST_CASE("radial spheres are exactly umbilic and approach the round boundary") {
  const BoundaryGeometry bg = boundary_geometry(3, 0.0, {1e-1, 1e-2, 1e-3});
  REQUIRE(bg.rungs.size() == 3);
  for (const BoundaryRung& r : bg.rungs) {
    CHECK(r.umbilicity_defect < 1e-12);
    CHECK(std::abs(r.r * r.eps - 1.0) < 0.01);
    CHECK(std::abs(r.normal_component - 1.0) < 2.5 * r.eps);
  }
  CHECK(bg.rungs[2].round_gap < 3e-3);
  CHECK(bg.rungs[2].form_gap < 2e-3);
  CHECK(bg.rungs[0].round_gap > bg.rungs[1].round_gap);
  CHECK(bg.rungs[1].round_gap > bg.rungs[2].round_gap);
  CHECK(bg.fitted_rate > 0.95);
  CHECK(bg.fitted_rate < 1.15);
}

TEST_CASE("the massive boundary ladder decays at the expected rate") {
  const BoundaryGeometry bg = boundary_geometry(3, 1.0, {1e-1, 1e-2, 1e-3});
  for (const BoundaryRung& r : bg.rungs) {
    CHECK(r.umbilicity_defect < 1e-12);
    CHECK(std::abs(r.normal_component - 1.0) < 2.5 * r.eps);
  }
  CHECK(bg.rungs[0].form_gap > bg.rungs[1].form_gap);
  CHECK(bg.rungs[1].form_gap > bg.rungs[2].form_gap);
  CHECK(bg.fitted_rate >= 1.0);
  CHECK(bg.fitted_rate < 1.2);
}

TEST_CASE("halving the sphere parameter tracks the fitted power law") {
  const BoundaryGeometry bg = boundary_geometry(3, 1.0, {2e-2, 1e-2, 5e-3});
  REQUIRE(bg.rungs.size() == 3);
  const double predicted = std::pow(2.0, bg.fitted_rate);
  const double observed = bg.rungs[0].form_gap / bg.rungs[1].form_gap;
  CHECK(observed == doctest::Approx(predicted).epsilon(0.05));
}

TEST_CASE("sphere parameters outside the gauge domain are refused") {
  CHECK_THROWS_AS(boundary_geometry(3, 1.0, {0.6}), ConfigError);
  CHECK_THROWS_AS(boundary_geometry(3, 1.0, {0.0}), ConfigError);
  CHECK_THROWS_AS(boundary_geometry(3, 1.0, {-1e-2}), ConfigError);
}
