#include "adsgeo/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace adsgeo {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,       0.0,        500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,     0.0,          7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

double sup_abs(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

struct StepOut {
  std::vector<double> y5;
  double err = 0.0;  // scaled error norm; infinite when a stage went non-finite
};

StepOut try_step(const OdeRhs& rhs, double x, const std::vector<double>& y, double h,
                 const OdeOptions& opt) {
  const std::size_t dim = y.size();
  std::vector<std::vector<double>> k(7, std::vector<double>(dim));
  std::vector<double> stage(dim);
  StepOut out;
  for (int s = 0; s < 7; ++s) {
    for (std::size_t i = 0; i < dim; ++i) {
      double acc = y[i];
      for (int j = 0; j < s; ++j) acc += h * kA[s][j] * k[j][i];
      stage[i] = acc;
    }
    if (!all_finite(stage)) {
      out.err = std::numeric_limits<double>::infinity();
      return out;
    }
    rhs(x + kC[s] * h, stage, k[s]);
    if (!all_finite(k[s])) {
      out.err = std::numeric_limits<double>::infinity();
      return out;
    }
  }
  out.y5.resize(dim);
  double acc_err = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    double y5 = y[i];
    double y4 = y[i];
    for (int s = 0; s < 7; ++s) {
      y5 += h * kB5[s] * k[s][i];
      y4 += h * kB4[s] * k[s][i];
    }
    out.y5[i] = y5;
    const double scale = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y5));
    const double e = (y5 - y4) / scale;
    acc_err += e * e;
  }
  out.err = std::sqrt(acc_err / static_cast<double>(dim));
  if (!std::isfinite(out.err) || !all_finite(out.y5)) {
    out.err = std::numeric_limits<double>::infinity();
    out.y5.clear();
  }
  return out;
}

// Integrate from (x, y) to xt without event handling; false on stall.
bool advance_to(const OdeRhs& rhs, double& x, std::vector<double>& y, double xt,
                const OdeOptions& opt, double h_start) {
  const double dir = (xt >= x) ? 1.0 : -1.0;
  if (x == xt) return true;
  double h = dir * std::min(std::abs(h_start), opt.h_max);
  if (h == 0.0) h = dir * opt.h_min * 100.0;
  for (int step = 0; step < opt.max_steps; ++step) {
    if ((x + h - xt) * dir > 0.0) h = xt - x;
    const StepOut s = try_step(rhs, x, y, h, opt);
    if (s.err <= 1.0) {
      x += h;
      y = s.y5;
      if ((xt - x) * dir <= 0.0) return true;
      const double grow = std::clamp(0.9 * std::pow(std::max(s.err, 1e-12), -0.2), 0.2, 5.0);
      h *= grow;
      if (std::abs(h) > opt.h_max) h = dir * opt.h_max;
    } else {
      const double shrink =
          std::isfinite(s.err) ? std::clamp(0.9 * std::pow(s.err, -0.2), 0.1, 0.9) : 0.25;
      h *= shrink;
      if (std::abs(h) < opt.h_min) return false;
    }
  }
  return false;
}

}  // namespace

OdeResult integrate_ode(const OdeRhs& rhs, double x0, std::vector<double> y0, double x1,
                        const OdeOptions& opt, const OdeEvent& event) {
  OdeResult res;
  double x = x0;
  std::vector<double> y = std::move(y0);
  res.xs.push_back(x);
  res.ys.push_back(y);

  const double dir = (x1 >= x0) ? 1.0 : -1.0;
  double g_prev = event ? event(x, y) : 0.0;
  double h = dir * std::min(opt.h_init, opt.h_max);
  if (h == 0.0) h = dir * 1e-6;

  auto finish = [&](OdeStatus st) {
    res.status = st;
    res.x_end = x;
    res.y_end = y;
    return res;
  };

  if (x0 == x1) return finish(OdeStatus::reached);

  for (res.steps = 0; res.steps < opt.max_steps; ++res.steps) {
    if ((x + h - x1) * dir > 0.0) h = x1 - x;
    const StepOut s = try_step(rhs, x, y, h, opt);
    if (s.err > 1.0) {
      const double shrink =
          std::isfinite(s.err) ? std::clamp(0.9 * std::pow(s.err, -0.2), 0.1, 0.9) : 0.25;
      h *= shrink;
      if (std::abs(h) < opt.h_min) return finish(OdeStatus::stalled);
      continue;
    }

    const double x_new = x + h;
    if (event) {
      const double g_new = event(x_new, s.y5);
      if ((g_prev > 0.0 && g_new <= 0.0) || (g_prev < 0.0 && g_new >= 0.0)) {
        // Bisect within [x, x_new], re-integrating from the clean bracket end.
        double lo = x;
        std::vector<double> y_lo = y;
        double hi = x_new;
        double h_loc = h;
        for (int it = 0; it < 200 && std::abs(hi - lo) > opt.event_tol * std::max(1.0, std::abs(hi));
             ++it) {
          const double mid = 0.5 * (lo + hi);
          double xm = lo;
          std::vector<double> ym = y_lo;
          if (!advance_to(rhs, xm, ym, mid, opt, h_loc)) break;
          const double gm = event(xm, ym);
          if ((g_prev > 0.0 && gm <= 0.0) || (g_prev < 0.0 && gm >= 0.0)) {
            hi = mid;
          } else {
            lo = mid;
            y_lo = ym;
          }
          h_loc = 0.5 * std::abs(hi - lo) * dir;
        }
        double xf = lo;
        std::vector<double> yf = y_lo;
        if (advance_to(rhs, xf, yf, hi, opt, h_loc)) {
          x = hi;
          y = yf;
        } else {
          // stalled inside the bracket; report its clean end
          x = lo;
          y = y_lo;
        }
        res.xs.push_back(x);
        res.ys.push_back(y);
        return finish(OdeStatus::event);
      }
      g_prev = g_new;
    }

    x = x_new;
    y = s.y5;
    res.xs.push_back(x);
    res.ys.push_back(y);
    if (sup_abs(y) > opt.y_cap) return finish(OdeStatus::stalled);
    if ((x1 - x) * dir <= 0.0) return finish(OdeStatus::reached);
    const double grow = std::clamp(0.9 * std::pow(std::max(s.err, 1e-12), -0.2), 0.2, 5.0);
    h *= grow;
    if (std::abs(h) > opt.h_max) h = dir * opt.h_max;
  }
  return finish(OdeStatus::stalled);
}

}  // namespace adsgeo
