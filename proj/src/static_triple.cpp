#include "adsgeo/static_triple.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "adsgeo/fields.hpp"

namespace adsgeo {

namespace {

ScalarField profile_field(const Chart& chart, int slot, const RadialProfile& prof) {
  return ScalarField(chart.id(), chart.dim(), [slot, prof](const ChartPoint& p, int order) {
    return prof(jet_var(p, slot, order));
  });
}

// d/dr of a univariate jet, one order lower.
DJet univariate_derivative(const DJet& j, int order) {
  DJet d = DJet::constant(1, order, j.d1(0));
  if (order >= 1) d.d1(0) = j.d2(0, 0);
  if (order >= 2) d.d2(0, 0) = j.d3(0, 0, 0);
  return d;
}

}  // namespace

RadialProfile exterior_potential_profile(int n, double mass) {
  return [n, mass](const DJet& r) {
    DJet v = r * r + 1.0;
    if (mass != 0.0) v = v - jet_math::pow(r, static_cast<double>(n - 2)).reciprocal() * mass;
    return v;
  };
}

StaticTriple make_static_triple(int n, RadialProfile v_profile, RadialProfile f_profile,
                                const std::string& tag, double r_lo, double r_sample_lo,
                                double r_sample_hi) {
  Chart c = radial_chart(n, r_lo, 1e8, r_sample_lo, r_sample_hi);
  const ScalarField r = coordinate_field(c, 0);
  ScalarField vf = profile_field(c, 0, v_profile);
  ScalarField ff = profile_field(c, 0, f_profile);
  std::vector<ScalarField> diag;
  diag.push_back(field_math::reciprocal(ff));
  for (int k = 1; k < n; ++k) diag.push_back(r * r * sphere_factor(c, 1, k - 1));
  std::ostringstream id;
  id << "static-slice-" << n << "-" << tag;
  MetricField h =
      MetricField::diagonal(id.str(), c, Signature::riemannian, std::move(diag));
  ScalarField sv = field_math::sqrt(vf);
  return StaticTriple{n,  std::move(c),       std::move(h),        std::move(vf),
                      ff, std::move(sv),      std::move(v_profile), std::move(f_profile)};
}

StaticTriple ads_triple(int n) {
  RadialProfile v = exterior_potential_profile(n, 0.0);
  return make_static_triple(n, v, v, "ads", 0.0, 0.4, 2.6);
}

StaticTriple schwarzschild_triple(int n, double mass) {
  // nonpositive mass leaves the exterior family global, so the slice keeps
  // the full radial range
  const double rh = mass > 0.0 ? schwarzschild_horizon_radius(n, mass) : 0.0;
  RadialProfile v = exterior_potential_profile(n, mass);
  std::ostringstream tag;
  tag << "sads-M" << mass;
  return make_static_triple(n, v, v, tag.str(), rh, rh + 0.35, rh + 2.5);
}

double potential_residual(const StaticTriple& t, const ChartPoint& p) {
  const double u = t.sqrt_V.value(p);
  return std::abs(laplacian(t.h, t.sqrt_V, p) - t.n * u);
}

double slice_residual(const StaticTriple& t, const ChartPoint& p) {
  const int d = t.chart.dim();
  const CurvatureBundle cb = curvature_bundle(t.h, p);
  const std::vector<double> hess = hessian(t.h, t.sqrt_V, p);
  const double u = t.sqrt_V.value(p);
  double sup = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const double res =
          cb.ricci_at(a, b) + t.n * cb.metric_at(a, b) - hess[static_cast<size_t>(a) * d + b] / u;
      sup = std::max(sup, std::abs(res));
    }
  }
  return sup;
}

double mass_aspect(const StaticTriple& t, const ChartPoint& p) {
  return t.V.value(p) - grad_norm_sq(t.h, t.sqrt_V, p) - 1.0;
}

ScalarField mass_aspect_field(const StaticTriple& t) {
  RadialProfile v = t.v_profile;
  RadialProfile f = t.f_profile;
  return ScalarField(t.chart.id(), t.chart.dim(), [v, f](const ChartPoint& p, int order) {
    if (order > 2) throw OrderError("the mass aspect carries jets only to order 2");
    const DJet vj = v(DJet::variable(1, 3, p[0], 0));
    const DJet du = univariate_derivative(jet_math::sqrt(vj), order);
    const DJet w1 =
        vj.truncated(order) - f(DJet::variable(1, order, p[0], 0)) * du * du - 1.0;
    DJet w = DJet::constant(p.dim(), order, w1.value());
    if (order >= 1) w.d1(0) = w1.d1(0);
    if (order >= 2) w.d2(0, 0) = w1.d2(0, 0);
    return w;
  });
}

MetricField static_spacetime_metric(const StaticTriple& t) {
  const double r_lo = t.chart.domain(0).lo;
  Chart c = global_chart(t.n, r_lo, t.chart.sample_box(0).lo, t.chart.sample_box(0).hi);
  const ScalarField r = coordinate_field(c, 1);
  ScalarField vf = profile_field(c, 1, t.v_profile);
  ScalarField ff = profile_field(c, 1, t.f_profile);
  std::vector<ScalarField> diag;
  diag.push_back(0.0 - vf);
  diag.push_back(field_math::reciprocal(ff));
  for (int k = 2; k < t.n + 1; ++k) diag.push_back(r * r * sphere_factor(c, 2, k - 2));
  return MetricField::diagonal("static-exterior-" + t.chart.id(), std::move(c),
                               Signature::lorentzian, std::move(diag));
}

}  // namespace adsgeo
