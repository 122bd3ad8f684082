#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adsgeo/forms.hpp"

namespace adsgeo {

/// A metric together with a distinguished stationary vector field X.
struct StationaryData {
  MetricField g;
  VectorField X;
  std::string id;
};

/// X = d/dt (+ helix * d/dphi) on the closed-form backgrounds.
StationaryData stationary_ads(int n, double helix = 0.0);
StationaryData stationary_schwarzschild_ads(int n, double mass);
StationaryData stationary_ads_boundary_chart(int n, double helix = 0.0);
/// Static but non-Einstein control: wrong radial factor, X still Killing.
StationaryData stationary_non_einstein_control(int n, double helix = 0.0);
/// The fields the quantified identities range over: d/dt, d/dphi, d/dt + lambda d/dphi.
std::vector<StationaryData> killing_catalog(int n, double lambda = 0.3);

/// (L_X g)_ab = nabla_a omega_b + nabla_b omega_a at p, row-major dim x dim.
std::vector<double> lie_derivative_metric(const StationaryData& d, const ChartPoint& p);

/// sup |(L_X g)_ab| at p; zero iff X is Killing there.
double killing_residual(const StationaryData& d, const ChartPoint& p);

/// V = -g(X, X).
ScalarField lapse_squared(const StationaryData& d);

/// omega = g(X, .).
FormField killing_one_form(const StationaryData& d);

/// theta = omega ^ d omega.
FormField twist_form(const StationaryData& d);

/// sup norm of i_X theta / V^2 + d(omega / V) at p. Refuses |V| < 1e-10.
double lichnerowicz_residual(const StationaryData& d, const ChartPoint& p);

/// sup norm of d(* theta) at p; vanishes when g solves the vacuum equations.
double twist_closure_residual(const StationaryData& d, const ChartPoint& p);

/// sup norm of d((omega/V) ^ *theta) + i_X(theta ^ *theta) / V^2 at p.
/// Holds for any Killing X on a vacuum background, twisting or not.
double flux_identity_residual(const StationaryData& d, const ChartPoint& p);

/// Divides f by V, refusing points where |V| < 1e-10.
ScalarField over_lapse(const StationaryData& d, const ScalarField& f);

struct FluxReport {
  double epsilon = 0.0;       // surface coordinate (s or 1/r)
  double value = 0.0;         // integral of (omega/V) ^ *theta over the sphere
  double refined_value = 0.0; // same with doubled nodes per dimension
  int nodes = 0;
  bool refined_agrees = false;
};

/// Integrates (omega/V) ^ *theta over the sphere {radial coord = where},
/// t fixed, with `nodes` Gauss-Legendre nodes per angular dimension.
/// refined_agrees flags relative disagreement beyond agree_tol under node
/// doubling; disagreement is reported, never fatal.
FluxReport boundary_flux(const StationaryData& d, double where, double t0, int nodes,
                         double agree_tol = 1e-6);

/// Least-squares slope of log|value| against log(epsilon). Returns nothing
/// if any |value| is below `floor` (slope of noise is meaningless).
std::optional<double> flux_decay_fit(const std::vector<FluxReport>& ladder, double floor);

}  // namespace adsgeo
