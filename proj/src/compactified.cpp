#include "adsgeo/compactified.hpp"

#include <algorithm>
#include <cmath>

#include "adsgeo/fg.hpp"

namespace adsgeo {

namespace {

// Gauss-Jordan inverse of a small symmetric positive block.
std::vector<double> invert_block(std::vector<double> a, int d) {
  std::vector<double> inv(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) inv[static_cast<size_t>(i) * d + i] = 1.0;
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(a[static_cast<size_t>(r) * d + col]) >
          std::abs(a[static_cast<size_t>(pivot) * d + col]))
        pivot = r;
    const double pv = a[static_cast<size_t>(pivot) * d + col];
    if (pv == 0.0) throw DegenerateMetricError("induced block is singular");
    for (int c = 0; c < d; ++c) {
      std::swap(a[static_cast<size_t>(col) * d + c], a[static_cast<size_t>(pivot) * d + c]);
      std::swap(inv[static_cast<size_t>(col) * d + c], inv[static_cast<size_t>(pivot) * d + c]);
    }
    const double s = 1.0 / a[static_cast<size_t>(col) * d + col];
    for (int c = 0; c < d; ++c) {
      a[static_cast<size_t>(col) * d + c] *= s;
      inv[static_cast<size_t>(col) * d + c] *= s;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = a[static_cast<size_t>(r) * d + col];
      if (f == 0.0) continue;
      for (int c = 0; c < d; ++c) {
        a[static_cast<size_t>(r) * d + c] -= f * a[static_cast<size_t>(col) * d + c];
        inv[static_cast<size_t>(r) * d + c] -= f * inv[static_cast<size_t>(col) * d + c];
      }
    }
  }
  return inv;
}

std::vector<double> box_mid_coords(const Chart& c, double r) {
  std::vector<double> coords(static_cast<size_t>(c.dim()));
  coords[0] = r;
  for (int i = 1; i < c.dim(); ++i)
    coords[static_cast<size_t>(i)] = 0.5 * (c.sample_box(i).lo + c.sample_box(i).hi);
  return coords;
}

}  // namespace

CompactifiedSlice compactify(const StaticTriple& t) {
  ScalarField u = field_math::reciprocal(t.sqrt_V + 1.0);
  const ScalarField u2 = u * u;
  const int d = t.chart.dim();
  std::vector<ScalarField> upper;
  upper.reserve(static_cast<size_t>(d * (d + 1) / 2));
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) upper.push_back(u2 * t.h.component(a, b));
  MetricField gbar(t.h.id() + "-compactified", t.chart, Signature::riemannian, std::move(upper));
  return CompactifiedSlice{t, std::move(u), std::move(gbar)};
}

double bochner_residual(const StaticTriple& t, const ChartPoint& p) {
  if (t.V.value(p) <= 0.0)
    throw DegenerateMetricError("compactification needs a positive potential");
  const int d = t.chart.dim();
  const ScalarField W = mass_aspect_field(t);
  const double lap_w = laplacian(t.h, W, p);
  const double u = t.sqrt_V.value(p);
  const std::vector<double> hess = hessian(t.h, t.sqrt_V, p);
  const MetricJets<double> mj = metric_jets(t.h, p, 0);
  std::vector<double> trace_free(static_cast<size_t>(d) * d);
  std::vector<double> up(static_cast<size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const size_t i = static_cast<size_t>(a) * d + b;
      trace_free[i] = hess[i] - u * mj.lo[i].value();
      up[i] = mj.up[i].value();
    }
  const double hess_gap = tensor2_norm(up, trace_free, d);
  const DJet uj = t.sqrt_V.eval(p, 1);
  const DJet wj = W.eval(p, 1);
  double dot = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      dot += up[static_cast<size_t>(a) * d + b] * uj.d1(a) * wj.d1(b);
  return lap_w + 2.0 * hess_gap * hess_gap - dot / u;
}

ConformalScalarCheck conformal_scalar_check(const CompactifiedSlice& c, const ChartPoint& p) {
  const int n = c.base.n;
  if (n < 3) throw ConfigError("conformal scalar comparison needs n >= 3");
  ConformalScalarCheck out{};
  out.direct = curvature_bundle(c.gbar, p).scalar;
  out.mass_aspect_form = n * (n - 1.0) * mass_aspect(c.base, p);
  const double ex = 0.5 * (n - 2.0);
  const ScalarField phi = field_math::pow(c.u, ex);
  const double lap_phi = laplacian(c.base.h, phi, p);
  const double scal_h = curvature_bundle(c.base.h, p).scalar;
  const double uv = c.u.value(p);
  out.conformal_laplacian = std::pow(uv, -0.5 * (n + 2.0)) *
                            (-(4.0 * (n - 1.0) / (n - 2.0)) * lap_phi +
                             scal_h * std::pow(uv, ex));
  return out;
}

double rigidity_check(const StaticTriple& t, const ChartPoint& p) {
  const int d = t.chart.dim();
  const std::vector<double> hess = hessian(t.h, t.sqrt_V, p);
  const double u = t.sqrt_V.value(p);
  const MetricJets<double> mj = metric_jets(t.h, p, 0);
  std::vector<double> gap(static_cast<size_t>(d) * d);
  std::vector<double> up(static_cast<size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const size_t i = static_cast<size_t>(a) * d + b;
      gap[i] = hess[i] - u * mj.lo[i].value();
      up[i] = mj.up[i].value();
    }
  return tensor2_norm(up, gap, d);
}

ScalarScan nonneg_scalar_scan(const StaticTriple& t, const std::vector<double>& r_grid) {
  ScalarScan scan;
  const double factor = t.n * (t.n - 1.0);
  for (double r : r_grid) {
    const ChartPoint p(t.chart, box_mid_coords(t.chart, r));
    const double val = factor * mass_aspect(t, p);
    scan.rs.push_back(r);
    scan.values.push_back(val);
    if (scan.values.size() == 1 || val < scan.min_value) {
      scan.min_value = val;
      scan.r_at_min = r;
    }
  }
  return scan;
}

BoundaryGeometry boundary_geometry(int n, double mass, const std::vector<double>& eps_list) {
  const int order = n + 6;
  const TruncatedSeries pv = static_catalog_profile(n, mass, order);
  const RadialGauge gauge = radial_fg_gauge(n, order, pv, pv);
  const TruncatedSeries dw = gauge.w_of_s.derivative();
  const StaticTriple t = mass == 0.0 ? ads_triple(n) : schwarzschild_triple(n, mass);
  const CompactifiedSlice slice = compactify(t);
  const int m = t.chart.dim() - 1;

  BoundaryGeometry out;
  for (double eps : eps_list) {
    if (!(eps > 0.0) || eps > 0.5)
      throw ConfigError("sphere parameter outside the radial gauge domain (0, 0.5]");
    BoundaryRung rung;
    rung.eps = eps;
    const double w = gauge.w_of_s.evaluate(eps);
    rung.r = 1.0 / w;
    const ChartPoint p(t.chart, box_mid_coords(t.chart, rung.r));
    const CurvatureBundle cb = curvature_bundle(slice.gbar, p);
    const double unit = std::sqrt(cb.metric_at(0, 0));
    rung.induced.resize(static_cast<size_t>(m) * m);
    rung.second_form.resize(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const size_t i = static_cast<size_t>(a) * m + b;
        rung.induced[i] = cb.metric_at(a + 1, b + 1);
        rung.second_form[i] = -cb.christoffel_at(0, a + 1, b + 1) * unit;
      }
    const std::vector<double> inv = invert_block(rung.induced, m);
    double trace = 0.0;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        trace += inv[static_cast<size_t>(a) * m + b] * rung.second_form[static_cast<size_t>(a) * m + b];
    std::vector<double> defect(static_cast<size_t>(m) * m);
    std::vector<double> round_diff(static_cast<size_t>(m) * m);
    std::vector<double> form_diff(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const size_t i = static_cast<size_t>(a) * m + b;
        const double sigma = (a == b) ? sphere_factor(t.chart, 1, a).value(p) : 0.0;
        defect[i] = rung.second_form[i] - (trace / m) * rung.induced[i];
        round_diff[i] = rung.induced[i] - sigma;
        form_diff[i] = rung.second_form[i] - sigma;
      }
    rung.umbilicity_defect = tensor2_norm(inv, defect, m);
    rung.round_gap = tensor2_norm(inv, round_diff, m);
    rung.form_gap = tensor2_norm(inv, form_diff, m);
    const double dr_ds = dw.evaluate(eps) / (w * w);
    rung.normal_component = cb.metric_at(0, 0) * dr_ds * dr_ds;
    out.rungs.push_back(std::move(rung));
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (const BoundaryRung& rung : out.rungs) {
    if (rung.form_gap < 1e-14) continue;
    const double x = std::log(rung.eps), y = std::log(rung.form_gap);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count >= 2) out.fitted_rate = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return out;
}

}  // namespace adsgeo
