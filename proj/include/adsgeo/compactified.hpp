#pragma once

#include <vector>

#include "adsgeo/static_triple.hpp"

namespace adsgeo {

/// Slice compactified by the global defining function u = 1/(sqrt(V)+1):
/// gbar = u^2 h extends to the conformal boundary u = 0.
struct CompactifiedSlice {
  StaticTriple base;
  ScalarField u;
  MetricField gbar;
};

CompactifiedSlice compactify(const StaticTriple& t);

/// Residual of the divergence identity for the mass aspect,
///   Lap W + 2 |Hess sqrt(V) - sqrt(V) h|^2 - (grad sqrt(V)/sqrt(V)) . grad W,
/// which vanishes on every solution of the slice conditions.
double bochner_residual(const StaticTriple& t, const ChartPoint& p);

/// Scalar curvature of gbar computed three independent ways: the tensor
/// pipeline on gbar, the conformal-Laplacian transformation law, and the
/// closed pointwise form n(n-1) W.
struct ConformalScalarCheck {
  double direct;
  double conformal_laplacian;
  double mass_aspect_form;
};
ConformalScalarCheck conformal_scalar_check(const CompactifiedSlice& c, const ChartPoint& p);

/// ||Hess sqrt(V) - sqrt(V) h|| at p; zero everywhere is the hypothesis under
/// which the warped reconstruction applies.
double rigidity_check(const StaticTriple& t, const ChartPoint& p);

/// n(n-1) W over a radius grid with the minimizer, the sign evidence for the
/// scalar curvature of gbar.
struct ScalarScan {
  std::vector<double> rs;
  std::vector<double> values;
  double min_value = 0.0;
  double r_at_min = 0.0;
};
ScalarScan nonneg_scalar_scan(const StaticTriple& t, const std::vector<double>& r_grid);

/// Geometry of the sphere s = eps in (slice, gbar), where s is the normal-form
/// coordinate of the radial gauge. `induced` and `second_form` are the
/// tangential (n-1)x(n-1) blocks, row-major.
struct BoundaryRung {
  double eps = 0.0;
  double r = 0.0;
  std::vector<double> induced;
  std::vector<double> second_form;
  /// || II - (tr II/(n-1)) g_induced || in gbar; zero exactly when the sphere
  /// is umbilic.
  double umbilicity_defect = 0.0;
  /// || induced - sigma0 || and || II - sigma0 || in the induced metric: the
  /// approach to the round boundary values.
  double round_gap = 0.0;
  double form_gap = 0.0;
  /// gbar(normal, normal) in the s coordinate; tends to 1 at the boundary.
  double normal_component = 0.0;
};
struct BoundaryGeometry {
  std::vector<BoundaryRung> rungs;
  /// Least-squares power of eps fitted to form_gap over the ladder.
  double fitted_rate = 0.0;
};
BoundaryGeometry boundary_geometry(int n, double mass, const std::vector<double>& eps_list);

}  // namespace adsgeo
