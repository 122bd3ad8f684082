#include "adsgeo/killing.hpp"

#include <cmath>
#include <sstream>

#include "adsgeo/catalog.hpp"
#include "adsgeo/quadrature.hpp"

namespace adsgeo {

namespace {

VectorField time_plus_helix(const Chart& chart, double helix) {
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<size_t>(chart.dim()));
  for (int a = 0; a < chart.dim(); ++a) {
    double v = a == 0 ? 1.0 : 0.0;
    if (helix != 0.0 && a == chart.dim() - 1) v = helix;
    comps.push_back(constant_field(chart, v));
  }
  return VectorField(chart.id(), std::move(comps));
}

std::string helix_tag(const std::string& base, double helix) {
  if (helix == 0.0) return base + "-static";
  std::ostringstream os;
  os << base << "-helical" << helix;
  return os.str();
}

ScalarField checked_lapse_inverse(const StationaryData& d, int power) {
  const ScalarField V = lapse_squared(d);
  return ScalarField(V.chart_id(), V.dim(), [V, power](const ChartPoint& p, int order) {
    DJet v = V.eval(p, order);
    if (std::abs(v.value()) < 1e-10)
      throw VanishingDenominatorError("lapse squared below 1e-10; too close to a horizon");
    DJet r = v.reciprocal();
    DJet acc = r;
    for (int k = 1; k < power; ++k) acc = acc * r;
    return acc;
  });
}

}  // namespace

StationaryData stationary_ads(int n, double helix) {
  MetricField g = ads_global_metric(n);
  VectorField X = time_plus_helix(g.chart(), helix);
  return {std::move(g), std::move(X), helix_tag("ads-" + std::to_string(n + 1), helix)};
}

StationaryData stationary_schwarzschild_ads(int n, double mass) {
  MetricField g = schwarzschild_ads_metric(n, mass);
  VectorField X = time_plus_helix(g.chart(), 0.0);
  std::ostringstream id;
  id << "schwarzschild-ads-" << n + 1 << "-M" << mass << "-static";
  return {std::move(g), std::move(X), id.str()};
}

StationaryData stationary_ads_boundary_chart(int n, double helix) {
  MetricField g = ads_fg_metric(n);
  VectorField X = time_plus_helix(g.chart(), helix);
  return {std::move(g), std::move(X), helix_tag("ads-fg-" + std::to_string(n + 1), helix)};
}

StationaryData stationary_non_einstein_control(int n, double helix) {
  Chart c = global_chart(n, 0.0, 0.4, 2.6);
  const ScalarField r = coordinate_field(c, 1);
  std::vector<ScalarField> diag;
  diag.push_back(0.0 - (r * r + 1.0));
  diag.push_back(constant_field(c, 1.0));  // flat radial factor: not Einstein
  for (int k = 1; k < n; ++k) diag.push_back(r * r * sphere_factor(c, 2, k - 1));
  MetricField g = MetricField::diagonal("non-einstein-control-" + std::to_string(n + 1),
                                        std::move(c), Signature::lorentzian, std::move(diag));
  VectorField X = time_plus_helix(g.chart(), helix);
  return {std::move(g), std::move(X), helix_tag("control-" + std::to_string(n + 1), helix)};
}

std::vector<StationaryData> killing_catalog(int n, double lambda) {
  std::vector<StationaryData> out;
  out.push_back(stationary_ads(n, 0.0));
  {
    MetricField g = ads_global_metric(n);
    const Chart& c = g.chart();
    std::vector<ScalarField> comps;
    for (int a = 0; a < c.dim(); ++a)
      comps.push_back(constant_field(c, a == c.dim() - 1 ? 1.0 : 0.0));
    VectorField X(c.id(), std::move(comps));
    out.push_back({std::move(g), std::move(X), "ads-" + std::to_string(n + 1) + "-rotation"});
  }
  out.push_back(stationary_ads(n, lambda));
  return out;
}

std::vector<double> lie_derivative_metric(const StationaryData& d, const ChartPoint& p) {
  const int dim = d.g.dim();
  const MetricJets<double> mj = metric_jets(d.g, p, 1);
  const auto gamma = christoffel_jets(mj);
  const auto w = killing_one_form(d).eval(p, 1);
  std::vector<double> lie(static_cast<size_t>(dim) * dim, 0.0);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      double cov = w[static_cast<size_t>(b)].d1(a) + w[static_cast<size_t>(a)].d1(b);
      for (int c = 0; c < dim; ++c)
        cov -= 2.0 * gamma[(static_cast<size_t>(c) * dim + a) * dim + b].value() *
               w[static_cast<size_t>(c)].value();
      lie[static_cast<size_t>(a) * dim + b] = cov;
    }
  return lie;
}

double killing_residual(const StationaryData& d, const ChartPoint& p) {
  double sup = 0.0;
  for (double v : lie_derivative_metric(d, p)) sup = std::max(sup, std::abs(v));
  return sup;
}

ScalarField lapse_squared(const StationaryData& d) {
  const int dim = d.g.dim();
  ScalarField acc = constant_field(d.g.chart(), 0.0);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      acc = acc + d.g.component(a, b) * d.X.comp(a) * d.X.comp(b);
  return 0.0 - acc;
}

FormField killing_one_form(const StationaryData& d) { return metric_dual(d.g, d.X); }

FormField twist_form(const StationaryData& d) {
  const FormField w = killing_one_form(d);
  return wedge(w, exterior_derivative(w));
}

ScalarField over_lapse(const StationaryData& d, const ScalarField& f) {
  return f * checked_lapse_inverse(d, 1);
}

double lichnerowicz_residual(const StationaryData& d, const ChartPoint& p) {
  const FormField w = killing_one_form(d);
  const FormField theta = twist_form(d);
  const FormField lhs = scalar_times(checked_lapse_inverse(d, 2), interior_product(d.X, theta));
  const FormField rhs = exterior_derivative(scalar_times(checked_lapse_inverse(d, 1), w));
  return form_sup(lhs + rhs, p);
}

double twist_closure_residual(const StationaryData& d, const ChartPoint& p) {
  return form_sup(exterior_derivative(hodge_star(d.g, twist_form(d))), p);
}

double flux_identity_residual(const StationaryData& d, const ChartPoint& p) {
  const FormField theta = twist_form(d);
  const FormField star_theta = hodge_star(d.g, theta);
  const FormField lhs = exterior_derivative(
      wedge(scalar_times(checked_lapse_inverse(d, 1), killing_one_form(d)), star_theta));
  const FormField rhs = scalar_times(checked_lapse_inverse(d, 2),
                                     interior_product(d.X, wedge(theta, star_theta)));
  return form_sup(lhs + rhs, p);
}

FluxReport boundary_flux(const StationaryData& d, double where, double t0, int nodes,
                         double agree_tol) {
  const Chart& chart = d.g.chart();
  const int dim = chart.dim();
  if (dim < 3) throw ConfigError("flux needs at least one angular dimension");

  const FormField flux_form =
      wedge(scalar_times(checked_lapse_inverse(d, 1), killing_one_form(d)),
            hodge_star(d.g, twist_form(d)));

  std::vector<int> J;
  for (int a = 2; a < dim; ++a) J.push_back(a);
  const int rank = index_rank(dim, J);

  std::vector<Interval> box;
  for (int a = 2; a < dim; ++a) box.push_back(chart.domain(a));

  auto integrand = [&](const std::vector<double>& angles) {
    std::vector<double> x(static_cast<size_t>(dim));
    x[0] = t0;
    x[1] = where;
    for (int a = 2; a < dim; ++a) x[static_cast<size_t>(a)] = angles[static_cast<size_t>(a - 2)];
    const ChartPoint p(chart, std::move(x));
    return flux_form.eval(p, 0)[static_cast<size_t>(rank)].value();
  };

  FluxReport r;
  r.epsilon = where;
  r.nodes = nodes;
  r.value = integrate_box(box, nodes, integrand);
  r.refined_value = integrate_box(box, 2 * nodes, integrand);
  r.refined_agrees = std::abs(r.value - r.refined_value) <=
                     agree_tol * std::max(1.0, std::abs(r.refined_value));
  return r;
}

std::optional<double> flux_decay_fit(const std::vector<FluxReport>& ladder, double floor) {
  if (ladder.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(ladder.size());
  for (const auto& f : ladder) {
    if (std::abs(f.value) <= floor) return std::nullopt;
    const double x = std::log(f.epsilon);
    const double y = std::log(std::abs(f.value));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace adsgeo
