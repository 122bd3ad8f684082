#include "adsgeo/shooting.hpp"

#include <cmath>
#include <limits>

#include "adsgeo/catalog.hpp"
#include "adsgeo/errors.hpp"

namespace adsgeo {

namespace {

constexpr double kHorizonThreshold = 1e-9;

ShootResult pack(const OdeResult& ode) {
  ShootResult out;
  out.steps = ode.steps;
  out.rs = ode.xs;
  out.states.reserve(ode.ys.size());
  double gap = 0.0;
  for (const auto& y : ode.ys) {
    out.states.push_back({y[0], y[1], y[2]});
    gap = std::max(gap, std::abs(y[2] - y[0]));
  }
  out.max_fv_gap = gap;
  out.r_end = ode.x_end;
  out.v_end = ode.y_end.empty() ? 0.0 : ode.y_end[0];
  out.horizon_estimate = std::numeric_limits<double>::quiet_NaN();
  switch (ode.status) {
    case OdeStatus::event:
      out.outcome = ShootOutcome::horizon;
      out.horizon_estimate = ode.x_end - ode.y_end[0] / ode.y_end[1];
      break;
    case OdeStatus::reached:
      out.outcome = ShootOutcome::global;
      break;
    case OdeStatus::stalled:
      out.outcome = ShootOutcome::blowup;
      break;
  }
  return out;
}

}  // namespace

void static_reduced_rhs(int n, double r, const std::vector<double>& y, std::vector<double>& dy) {
  const double m = n - 1.0;
  const double v = y[0];
  const double u = y[1];
  const double f = y[2];
  const double fp = (2.0 / r) * ((m - 1.0) * (1.0 - f) + n * r * r) - f * u / v;
  dy.resize(3);
  dy[0] = u;
  dy[1] = u * u / (2.0 * v) + 2.0 * v * (n / f - m * fp / (2.0 * r * f)) - fp * u / (2.0 * f);
  dy[2] = fp;
}

std::array<double, 3> reduced_equation_residuals(int n, double r, double v, double vp, double vpp,
                                                 double f, double fp) {
  const double m = n - 1.0;
  const double u = std::sqrt(v);
  const double up = vp / (2.0 * u);
  const double upp = vpp / (2.0 * u) - vp * vp / (4.0 * v * u);
  const double scalar = f * upp + 0.5 * fp * up + m * f * up / r - n * u;
  const double rr = -m * fp / (2.0 * r * f) + n / f - (upp + fp * up / (2.0 * f)) / u;
  const double angular = (m - 1.0) * (1.0 - f) - 0.5 * r * fp + n * r * r - f * r * up / u;
  return {scalar, rr, angular};
}

double reduced_constraint(int n, double r, const std::vector<double>& y) {
  std::vector<double> dy;
  static_reduced_rhs(n, r, y, dy);
  return reduced_equation_residuals(n, r, y[0], y[1], dy[1], y[2], dy[2])[0];
}

std::array<double, 3> regular_center_state(double v0, double r0) {
  return {v0 * (1.0 + r0 * r0), 2.0 * v0 * r0, 1.0 + r0 * r0};
}

OdeOptions exterior_options() {
  OdeOptions opt;
  opt.atol = 1e-12;
  opt.rtol = 1e-12;
  opt.h_init = 1e-3;
  opt.h_max = 50.0;
  return opt;
}

ShootResult shoot_outward(int n, double v0, double r_max, const OdeOptions& opt) {
  if (n < 2) throw ConfigError("shooting needs slice dimension at least 2");
  if (v0 <= 0.0) throw ConfigError("regular center needs positive potential");
  const double r0 = 1e-3;
  const auto y0 = regular_center_state(v0, r0);
  auto rhs = [n](double r, const std::vector<double>& y, std::vector<double>& dy) {
    static_reduced_rhs(n, r, y, dy);
  };
  const OdeResult ode = integrate_ode(rhs, r0, {y0[0], y0[1], y0[2]}, r_max, opt);
  return pack(ode);
}

ShootResult shoot_inward(int n, double mass, double r_start, double r_min,
                         const OdeOptions& opt) {
  if (n < 2) throw ConfigError("shooting needs slice dimension at least 2");
  if (r_min <= 0.0 || r_min >= r_start) throw ConfigError("inward range must satisfy 0 < r_min < r_start");
  const DJet vj = static_potential_jet(n, mass, r_start, 1);
  if (vj.value() <= 0.0) throw ConfigError("inward start must lie outside the horizon");
  auto rhs = [n](double r, const std::vector<double>& y, std::vector<double>& dy) {
    static_reduced_rhs(n, r, y, dy);
  };
  auto event = [](double, const std::vector<double>& y) { return y[0] - kHorizonThreshold; };
  const OdeResult ode =
      integrate_ode(rhs, r_start, {vj.value(), vj.d1(0), vj.value()}, r_min, opt, event);
  return pack(ode);
}

ShootResult shoot_exterior(int n, double mass, double r_start, double r_far,
                           const OdeOptions& opt) {
  if (n < 2) throw ConfigError("shooting needs slice dimension at least 2");
  if (r_far <= r_start) throw ConfigError("exterior march needs r_far above r_start");
  const DJet vj = static_potential_jet(n, mass, r_start, 1);
  if (vj.value() <= 0.0) throw ConfigError("exterior start must lie outside the horizon");
  auto rhs = [n](double r, const std::vector<double>& y, std::vector<double>& dy) {
    static_reduced_rhs(n, r, y, dy);
  };
  const OdeResult ode = integrate_ode(rhs, r_start, {vj.value(), vj.d1(0), vj.value()}, r_far, opt);
  return pack(ode);
}

double mass_aspect_state(const std::array<double, 3>& y) {
  return y[0] - y[2] * y[1] * y[1] / (4.0 * y[0]) - 1.0;
}

}  // namespace adsgeo
