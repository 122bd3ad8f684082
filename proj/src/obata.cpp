#include "adsgeo/obata.hpp"

#include <cmath>

#include "adsgeo/catalog.hpp"
#include "adsgeo/curvature.hpp"
#include "adsgeo/ode.hpp"

namespace adsgeo {

namespace {

// Marches y'' = accel * y segment by segment so the samples land on a
// uniform grid without dense output.
ComparisonSamples integrate_linear(double s_max, double tol, double accel, double y0,
                                   double y1) {
  if (!(s_max > 0.0)) throw ConfigError("comparison profiles need s_max > 0");
  if (!(tol > 0.0)) throw ConfigError("comparison profiles need tol > 0");
  OdeOptions opt;
  opt.atol = tol;
  opt.rtol = tol;
  const OdeRhs rhs = [accel](double, const std::vector<double>& y, std::vector<double>& dy) {
    dy[0] = y[1];
    dy[1] = accel * y[0];
  };
  const int segments = std::max(16, static_cast<int>(std::ceil(s_max / 0.025)));
  ComparisonSamples out;
  out.s.reserve(static_cast<size_t>(segments) + 1);
  out.value.reserve(static_cast<size_t>(segments) + 1);
  out.slope.reserve(static_cast<size_t>(segments) + 1);
  double s = 0.0;
  std::vector<double> y = {y0, y1};
  out.s.push_back(s);
  out.value.push_back(y[0]);
  out.slope.push_back(y[1]);
  for (int k = 1; k <= segments; ++k) {
    const double target = s_max * k / segments;
    const OdeResult step = integrate_ode(rhs, s, y, target, opt);
    if (step.status != OdeStatus::reached)
      throw SolveError("comparison profile integration stalled");
    s = step.x_end;
    y = step.y_end;
    out.s.push_back(s);
    out.value.push_back(y[0]);
    out.slope.push_back(y[1]);
  }
  return out;
}

}  // namespace

ComparisonSamples integrate_phi(double s_max, double tol) {
  return integrate_linear(s_max, tol, 1.0, 1.0, 0.0);
}

ComparisonSamples integrate_jacobi(double s_max, double tol, double radial_curvature) {
  return integrate_linear(s_max, tol, -radial_curvature, 0.0, 1.0);
}

ObataSolution solve_obata(int n, double s_max, double tol) {
  if (n < 2) throw ConfigError("the warped reconstruction needs n >= 2");
  ComparisonSamples phi = integrate_phi(s_max, tol);
  ComparisonSamples jac = integrate_jacobi(s_max, tol);
  ObataSolution sol{n,
                    std::move(phi.s),
                    std::move(phi.value),
                    std::move(phi.slope),
                    std::move(jac.value),
                    std::move(jac.slope),
                    hyperbolic_polar_metric(n)};
  return sol;
}

double verify_rigidity(const ObataSolution& sol, const ChartPoint& p) {
  const MetricField& g = sol.reconstructed;
  const ScalarField phi = field_math::cosh(coordinate_field(g.chart(), 0));
  const std::vector<double> hess = hessian(g, phi, p);
  const double value = phi.value(p);
  const MetricJets<double> mj = metric_jets(g, p, 0);
  const int d = g.dim();
  std::vector<double> gap(static_cast<size_t>(d) * d);
  std::vector<double> up(static_cast<size_t>(d) * d);
  for (size_t i = 0; i < gap.size(); ++i) {
    gap[i] = hess[i] - value * mj.lo[i].value();
    up[i] = mj.up[i].value();
  }
  return tensor2_norm(up, gap, d);
}

double ball_model_gap(const ObataSolution& sol) {
  double sup = 0.0;
  for (size_t i = 0; i < sol.s_grid.size(); ++i) {
    const double r = sol.jacobi[i];
    sup = std::max(sup, std::abs(sol.phi[i] - std::sqrt(1.0 + r * r)));
  }
  return sup;
}

std::vector<double> frame_curvature(const ObataSolution& sol, const ChartPoint& p) {
  const CurvatureBundle cb = curvature_bundle(sol.reconstructed, p);
  const int m = cb.dim - 1;
  std::vector<double> frame(static_cast<size_t>(m) * m);
  const double g00 = cb.metric_at(0, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double denom = g00 * std::sqrt(cb.metric_at(i + 1, i + 1) * cb.metric_at(j + 1, j + 1));
      frame[static_cast<size_t>(i) * m + j] = cb.riemann_lo_at(0, i + 1, 0, j + 1) / denom;
    }
  return frame;
}

}  // namespace adsgeo
