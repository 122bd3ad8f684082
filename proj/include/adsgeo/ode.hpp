#pragma once

#include <functional>
#include <vector>

namespace adsgeo {

/// rhs(x, y, dy) fills dy with y'(x).
using OdeRhs = std::function<void(double, const std::vector<double>&, std::vector<double>&)>;
/// Scalar event function; integration stops where its sign first flips.
using OdeEvent = std::function<double(double, const std::vector<double>&)>;

struct OdeOptions {
  double atol = 1e-10;
  double rtol = 1e-10;
  double h_init = 1e-3;
  double h_min = 1e-14;
  double h_max = 10.0;
  /// Component magnitude beyond which the run counts as left the trust region.
  double y_cap = 1e12;
  int max_steps = 400000;
  /// Width of the event bracket in x after bisection.
  double event_tol = 1e-12;
};

enum class OdeStatus {
  reached,  // integrated to x1
  event,    // stopped at a localized sign change of the event function
  stalled,  // step collapse, component blow-up, or step budget exhausted
};

struct OdeResult {
  OdeStatus status = OdeStatus::stalled;
  std::vector<double> xs;               // accepted abscissas, including x0
  std::vector<std::vector<double>> ys;  // states at xs
  double x_end = 0.0;
  std::vector<double> y_end;
  int steps = 0;
};

/// Adaptive embedded 5(4) Runge-Kutta pair. Integrates toward x1 in either
/// direction. When an event is given, the first accepted step bracketing a
/// sign change is refined by bisection with re-integration to opt.event_tol.
OdeResult integrate_ode(const OdeRhs& rhs, double x0, std::vector<double> y0, double x1,
                        const OdeOptions& opt = {}, const OdeEvent& event = {});

}  // namespace adsgeo
