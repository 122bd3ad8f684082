#pragma once

#include <array>
#include <functional>
#include <string>

#include "adsgeo/catalog.hpp"
#include "adsgeo/curvature.hpp"
#include "adsgeo/metric.hpp"

namespace adsgeo {

/// Univariate radial profile evaluated as a jet in r.
using RadialProfile = std::function<DJet(const DJet&)>;

/// V = 1 + r^2 - M r^{2-n}; M = 0 gives the pure profile usable down to r = 0.
RadialProfile exterior_potential_profile(int n, double mass);

/// Static slice data (h, V) on a radial chart, h = dr^2/f + r^2 dsigma.
/// The vacuum conditions are Lap sqrt(V) = n sqrt(V) together with
/// Ric(h) + n h = Hess sqrt(V) / sqrt(V); f is carried as its own profile so
/// the two can be compared off shell.
struct StaticTriple {
  int n;
  Chart chart;
  MetricField h;
  ScalarField V;
  ScalarField f;
  ScalarField sqrt_V;
  RadialProfile v_profile;
  RadialProfile f_profile;
};

StaticTriple make_static_triple(int n, RadialProfile v_profile, RadialProfile f_profile,
                                const std::string& tag, double r_lo, double r_sample_lo,
                                double r_sample_hi);

StaticTriple ads_triple(int n);
StaticTriple schwarzschild_triple(int n, double mass);

/// |Lap sqrt(V) - n sqrt(V)| at p.
double potential_residual(const StaticTriple& t, const ChartPoint& p);

/// sup_ab |Ric_ab + n h_ab - (Hess sqrt(V))_ab / sqrt(V)| at p.
double slice_residual(const StaticTriple& t, const ChartPoint& p);

/// W = V - |grad sqrt(V)|^2 - 1, the mass aspect of the slice.
double mass_aspect(const StaticTriple& t, const ChartPoint& p);

/// The mass aspect as a field. Its jets stop at order 2: one radial
/// derivative is already spent inside |grad sqrt(V)|^2.
ScalarField mass_aspect_field(const StaticTriple& t);

/// -V dt^2 + dr^2/f + r^2 dsigma on a global chart, dimension n+1.
MetricField static_spacetime_metric(const StaticTriple& t);

}  // namespace adsgeo
