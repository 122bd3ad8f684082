#pragma once

#include "adsgeo/metric.hpp"
#include "adsgeo/series.hpp"

namespace adsgeo {

/// Warped normal-form expansion data near the conformal boundary:
/// g = s^-2 (ds^2 - A(s)^2 dt^2 + B(s)^2 dsigma_0), stored as A^2 and B^2.
struct WarpedSeriesMetric {
  int n = 3;           // boundary dimension; the spacetime has dim n + 1
  TruncatedSeries A2;  // time warp squared
  TruncatedSeries B2;  // sphere warp squared
};

/// Output of the order-by-order vacuum recursion or of the radial gauge
/// transform. Coefficients below order n are forced; at order n only the
/// trace part is forced and the sphere coefficient parametrizes the rest.
struct FGSolution {
  WarpedSeriesMetric metric;
  double tau00 = 0.0;       // order-n coefficient of the (t,t) slot of g_s
  double tau_sphere = 0.0;  // order-n coefficient of B^2
  double alpha = 0.0;       // -(n-1) * tau_sphere (sphere-trace of the free term)
  /// Residual of the equations not used to fix the free order (should vanish:
  /// the recursion only determines the trace there).
  double trace_residual = 0.0;
  /// Largest nonlinearity seen by the order probes (affine solve sanity).
  double max_affine_defect = 0.0;
  /// Largest odd-order coefficient below n (must vanish).
  double max_odd_below_n = 0.0;
  /// Largest defect of the equations rows not used in an order's 2x2 solve.
  double cross_residual = 0.0;
};

/// Exact closed-form warp series (1 + s^2/4)^2 and (1 - s^2/4)^2.
TruncatedSeries ads_time_warp_sq(int order);
TruncatedSeries ads_sphere_warp_sq(int order);

/// Solves the vacuum equations order-by-order for the warped ansatz with
/// boundary representative -dt^2 + dsigma_0. `seed` sets the free sphere
/// coefficient at order n. For even n the expansion stops below order n
/// (where a log term would enter) and requires allow_even_truncation.
FGSolution fg_recursion(int n, int N, double seed = 0.0, bool allow_even_truncation = false);

/// Polynomial w = 1/r profile of the static catalog: V = r^2 (1 + w^2 - M w^n).
TruncatedSeries static_catalog_profile(int n, double mass, int order);

struct RadialGauge {
  FGSolution solution;
  TruncatedSeries s_of_w;  // normal-form coordinate as a series in w = 1/r
  TruncatedSeries w_of_s;  // reverted map
  /// Sup coefficient defect of f * (ds/dw)^2 = (s/w)^2, the defining property
  /// of the gauge coordinate.
  double identity_residual = 0.0;
};

/// Rewrites -V dt^2 + f^-1 dr^2 + r^2 dsigma_0 in the warped normal form.
/// pv, pf are exact polynomials in w = 1/r with V = r^2 pv(1/r) and
/// f = r^2 pf(1/r); both need value 1 and vanishing slope at w = 0.
RadialGauge radial_fg_gauge(int n, int N, const TruncatedSeries& pv, const TruncatedSeries& pf);

/// Evaluates a stored series as a field of the chart coordinate in `slot`.
ScalarField series_field(const Chart& chart, int slot, TruncatedSeries t);

/// Realizes the truncated expansion as a MetricField on its boundary chart.
MetricField warped_series_metric_field(const WarpedSeriesMetric& m, double s_hi = 1.8);

}  // namespace adsgeo
