#include "adsgeo/catalog.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace adsgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

void append_sphere_coords(int m, std::vector<std::string>& names, std::vector<Interval>& dom,
                          std::vector<Interval>& box) {
  if (m <= 0) return;
  for (int k = 1; k < m; ++k) {
    names.push_back("theta" + std::to_string(k));
    dom.push_back({0.0, kPi});
    box.push_back({0.45, kPi - 0.45});
  }
  // Azimuth runs over (-pi, pi) so phi = 0 is an interior point.
  names.push_back("phi");
  dom.push_back({-kPi, kPi});
  box.push_back({-kPi + 0.3, kPi - 0.3});
}

std::string dim_tag(const std::string& base, int d) {
  return base + "-" + std::to_string(d);
}

}  // namespace

Chart cartesian_chart(int d) {
  std::vector<std::string> names;
  std::vector<Interval> dom, box;
  for (int i = 0; i < d; ++i) {
    names.push_back("x" + std::to_string(i));
    dom.push_back({-50.0, 50.0});
    box.push_back({-1.5, 1.5});
  }
  return Chart(dim_tag("cartesian", d), std::move(names), std::move(dom), std::move(box));
}

Chart sphere_chart(int m) {
  std::vector<std::string> names;
  std::vector<Interval> dom, box;
  append_sphere_coords(m, names, dom, box);
  return Chart(dim_tag("sphere", m), std::move(names), std::move(dom), std::move(box));
}

Chart global_chart(int n, double r_lo, double r_sample_lo, double r_sample_hi) {
  std::vector<std::string> names = {"t", "r"};
  std::vector<Interval> dom = {{-50.0, 50.0}, {r_lo, 1e8}};
  std::vector<Interval> box = {{-1.2, 1.2}, {r_sample_lo, r_sample_hi}};
  append_sphere_coords(n - 1, names, dom, box);
  std::ostringstream id;
  id << "global-" << n + 1 << "-r" << r_lo;
  return Chart(id.str(), std::move(names), std::move(dom), std::move(box));
}

Chart fg_chart(int n, double s_hi) {
  std::vector<std::string> names = {"t", "s"};
  std::vector<Interval> dom = {{-50.0, 50.0}, {0.0, s_hi}};
  std::vector<Interval> box = {{-1.2, 1.2}, {0.05, std::min(1.2, 0.6 * s_hi)}};
  append_sphere_coords(n - 1, names, dom, box);
  return Chart(dim_tag("fg", n + 1), std::move(names), std::move(dom), std::move(box));
}

Chart radial_chart(int n, double r_lo, double r_hi, double r_sample_lo, double r_sample_hi) {
  std::vector<std::string> names = {"r"};
  std::vector<Interval> dom = {{r_lo, r_hi}};
  std::vector<Interval> box = {{r_sample_lo, r_sample_hi}};
  append_sphere_coords(n - 1, names, dom, box);
  std::ostringstream id;
  id << "radial-" << n << "-r" << r_lo;
  return Chart(id.str(), std::move(names), std::move(dom), std::move(box));
}

Chart polar_chart(int n, double s_hi) {
  std::vector<std::string> names = {"s"};
  std::vector<Interval> dom = {{0.0, s_hi}};
  std::vector<Interval> box = {{0.3, 2.5}};
  append_sphere_coords(n - 1, names, dom, box);
  return Chart(dim_tag("polar", n), std::move(names), std::move(dom), std::move(box));
}

ScalarField sphere_factor(const Chart& chart, int offset, int k) {
  if (k == 0) return constant_field(chart, 1.0);
  ScalarField f = constant_field(chart, 1.0);
  for (int j = 0; j < k; ++j) {
    const ScalarField s = field_math::sin(coordinate_field(chart, offset + j));
    f = f * (s * s);
  }
  return f;
}

MetricField euclidean_metric(int d) {
  Chart c = cartesian_chart(d);
  std::vector<ScalarField> diag(static_cast<size_t>(d), constant_field(c, 1.0));
  return MetricField::diagonal(dim_tag("euclidean", d), std::move(c), Signature::riemannian,
                               std::move(diag));
}

MetricField minkowski_metric(int d) {
  Chart c = cartesian_chart(d);
  std::vector<ScalarField> diag(static_cast<size_t>(d), constant_field(c, 1.0));
  diag[0] = constant_field(c, -1.0);
  return MetricField::diagonal(dim_tag("minkowski", d), std::move(c), Signature::lorentzian,
                               std::move(diag));
}

MetricField round_sphere_metric(int m) {
  Chart c = sphere_chart(m);
  std::vector<ScalarField> diag;
  diag.reserve(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) diag.push_back(sphere_factor(c, 0, k));
  return MetricField::diagonal(dim_tag("round-sphere", m), std::move(c), Signature::riemannian,
                               std::move(diag));
}

MetricField hyperbolic_radial_metric(int n) {
  Chart c = radial_chart(n, 0.0, 1e8, 0.4, 2.6);
  const ScalarField r = coordinate_field(c, 0);
  std::vector<ScalarField> diag;
  diag.push_back(field_math::reciprocal(r * r + 1.0));
  for (int k = 1; k < n; ++k) diag.push_back(r * r * sphere_factor(c, 1, k - 1));
  return MetricField::diagonal(dim_tag("hyperbolic-radial", n), std::move(c),
                               Signature::riemannian, std::move(diag));
}

MetricField hyperbolic_polar_metric(int n) {
  Chart c = polar_chart(n);
  const ScalarField sh = field_math::sinh(coordinate_field(c, 0));
  std::vector<ScalarField> diag;
  diag.push_back(constant_field(c, 1.0));
  for (int k = 1; k < n; ++k) diag.push_back(sh * sh * sphere_factor(c, 1, k - 1));
  return MetricField::diagonal(dim_tag("hyperbolic-polar", n), std::move(c),
                               Signature::riemannian, std::move(diag));
}

MetricField ads_global_metric(int n) {
  Chart c = global_chart(n, 0.0, 0.4, 2.6);
  const ScalarField r = coordinate_field(c, 1);
  const ScalarField V = r * r + 1.0;
  std::vector<ScalarField> diag;
  diag.push_back(0.0 - V);
  diag.push_back(field_math::reciprocal(V));
  for (int k = 1; k < n; ++k) diag.push_back(r * r * sphere_factor(c, 2, k - 1));
  return MetricField::diagonal(dim_tag("ads", n + 1), std::move(c), Signature::lorentzian,
                               std::move(diag));
}

double schwarzschild_horizon_radius(int n, double mass) {
  if (mass <= 0.0) throw ConfigError("horizon radius needs positive mass");
  auto h = [&](double r) { return std::pow(r, n - 2) * (1.0 + r * r) - mass; };
  double lo = 1e-9, hi = std::max(1.0, mass);
  while (h(hi) < 0.0) hi *= 2.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DJet static_potential_jet(int n, double mass, double r, int order) {
  DJet rj = DJet::variable(1, order, r, 0);
  DJet v = rj * rj + 1.0;
  if (mass != 0.0) v = v - jet_math::pow(rj, static_cast<double>(n - 2)).reciprocal() * mass;
  return v;
}

MetricField schwarzschild_ads_metric(int n, double mass) {
  const double rh = schwarzschild_horizon_radius(n, mass);
  Chart c = global_chart(n, rh, rh + 0.35, rh + 2.5);
  const ScalarField r = coordinate_field(c, 1);
  const ScalarField V =
      r * r + 1.0 - mass * field_math::pow(r, -static_cast<double>(n - 2));
  std::vector<ScalarField> diag;
  diag.push_back(0.0 - V);
  diag.push_back(field_math::reciprocal(V));
  for (int k = 1; k < n; ++k) diag.push_back(r * r * sphere_factor(c, 2, k - 1));
  std::ostringstream id;
  id << "schwarzschild-ads-" << n + 1 << "-M" << mass;
  return MetricField::diagonal(id.str(), std::move(c), Signature::lorentzian, std::move(diag));
}

MetricField ads_fg_metric(int n) {
  Chart c = fg_chart(n);
  const ScalarField s = coordinate_field(c, 1);
  const ScalarField inv_s2 = field_math::reciprocal(s * s);
  const ScalarField a = 0.25 * (s * s) + 1.0;
  const ScalarField b = 1.0 - 0.25 * (s * s);
  std::vector<ScalarField> diag;
  diag.push_back(0.0 - (a * a) * inv_s2);
  diag.push_back(inv_s2);
  for (int k = 1; k < n; ++k)
    diag.push_back((b * b) * inv_s2 * sphere_factor(c, 2, k - 1));
  return MetricField::diagonal(dim_tag("ads-fg", n + 1), std::move(c), Signature::lorentzian,
                               std::move(diag));
}

}  // namespace adsgeo
