#pragma once

#include <string>

#include "adsgeo/metric.hpp"

namespace adsgeo {

// Standard charts. Sphere angles are theta_1..theta_{m-1} in (0, pi) and
// phi in (0, 2 pi); sample boxes keep clear of the poles where the iterated
// polar frame degenerates.

Chart cartesian_chart(int d);
Chart sphere_chart(int m);
/// (t, r, angles) for the eternal static exterior, r above `r_lo`.
Chart global_chart(int n, double r_lo, double r_sample_lo, double r_sample_hi);
/// (t, s, angles) near the conformal boundary s = 0, s < s_hi.
Chart fg_chart(int n, double s_hi = 2.0);
/// (r, angles) spatial slice.
Chart radial_chart(int n, double r_lo, double r_hi, double r_sample_lo, double r_sample_hi);
/// (s, angles) geodesic polar coordinates around a center.
Chart polar_chart(int n, double s_hi = 40.0);

/// Product of sin^2 over the sphere angles ahead of angle index k; the
/// iterated polar factor multiplying (dx^{offset+k})^2. Angles start at
/// coordinate `offset` of the chart.
ScalarField sphere_factor(const Chart& chart, int offset, int k);

MetricField euclidean_metric(int d);
MetricField minkowski_metric(int d);
MetricField round_sphere_metric(int m);
/// dr^2/(1+r^2) + r^2 dsigma on a radial chart: hyperbolic space as the
/// static slice profile.
MetricField hyperbolic_radial_metric(int n);
/// ds^2 + sinh^2(s) dsigma in geodesic polar coordinates.
MetricField hyperbolic_polar_metric(int n);

/// -(1+r^2) dt^2 + dr^2/(1+r^2) + r^2 dsigma, dimension n+1.
MetricField ads_global_metric(int n);
/// Same with V = 1 + r^2 - M / r^{n-2}, exterior of the horizon.
MetricField schwarzschild_ads_metric(int n, double mass);
/// s^{-2}(-A^2 dt^2 + ds^2 + B^2 dsigma) with A = 1 + s^2/4, B = 1 - s^2/4.
MetricField ads_fg_metric(int n);

/// Largest root of r^{n-2}(1 + r^2) = M: the horizon radius.
double schwarzschild_horizon_radius(int n, double mass);

/// The static potential of the exterior family: V = 1 + r^2 - M / r^{n-2}
/// (M = 0 gives the pure case) as a univariate callable jet in r.
DJet static_potential_jet(int n, double mass, double r, int order);

}  // namespace adsgeo
