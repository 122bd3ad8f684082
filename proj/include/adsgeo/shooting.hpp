#pragma once

#include <array>
#include <vector>

#include "adsgeo/ode.hpp"

namespace adsgeo {

/// First-order reduction of the static vacuum conditions for the radially
/// symmetric slice h = dr^2/f + r^2 dsigma with potential V. State is
/// y = (V, V', f); the rr and angular conditions give the derivatives while
/// the scalar condition is kept aside as a constraint (see
/// reduced_constraint). With m = n - 1:
///   f' = (2/r) ((m-1)(1-f) + n r^2) - f V'/V
///   V'' = V'^2/(2V) + 2V (n/f - m f'/(2 r f)) - f' V'/(2f)
void static_reduced_rhs(int n, double r, const std::vector<double>& y, std::vector<double>& dy);

/// The three pointwise vacuum conditions evaluated on an arbitrary 2-jet of V
/// and 1-jet of f: {scalar, rr, angular}. All vanish on solutions; the rhs
/// above is exactly the solve of the last two for (V'', f').
///   scalar : f u'' + (f'/2) u' + (m f / r) u' - n u,  u = sqrt(V)
///   rr     : -m f'/(2 r f) + n/f - (u'' + f' u'/(2f)) / u
///   angular: (m-1)(1-f) - r f'/2 + n r^2 - f r u'/u
std::array<double, 3> reduced_equation_residuals(int n, double r, double v, double vp, double vpp,
                                                 double f, double fp);

/// Scalar constraint evaluated along an integrated state, using the rhs to
/// supply V''.
double reduced_constraint(int n, double r, const std::vector<double>& y);

/// Degree-4 center expansion at r0 for a regular center with V(0) = v0:
/// V = v0 (1 + r^2), f = 1 + r^2, both quartic coefficients vanishing
/// identically, so the truncation error is O(r^6).
std::array<double, 3> regular_center_state(double v0, double r0);

enum class ShootOutcome { global, horizon, blowup };

struct ShootResult {
  ShootOutcome outcome = ShootOutcome::blowup;
  std::vector<double> rs;
  std::vector<std::array<double, 3>> states;  // (V, V', f)
  double r_end = 0.0;
  double v_end = 0.0;
  /// One Newton step past the event: r - V/V'. NaN unless a horizon was hit.
  double horizon_estimate = 0.0;
  double max_fv_gap = 0.0;
  int steps = 0;
};

/// March the reduced system outward from a regular center at r0 = 1e-3.
ShootResult shoot_outward(int n, double v0, double r_max, const OdeOptions& opt = {});

/// Stricter tolerances for marches on the exterior family. Inward the f = V
/// locus repels nearby data as V drops, amplifying early error by V(start)/V;
/// outward the states grow like r^2 while the mass aspect stays O(1/r), so
/// relative control must reach far below the defaults for W to survive.
OdeOptions exterior_options();

/// March inward from exact exterior data of mass `mass` at r_start, stopping
/// at r_min or at the horizon event V = 1e-9.
ShootResult shoot_inward(int n, double mass, double r_start, double r_min,
                         const OdeOptions& opt = exterior_options());

/// March outward from exact exterior data at r_start to r_far.
ShootResult shoot_exterior(int n, double mass, double r_start, double r_far,
                           const OdeOptions& opt = exterior_options());

/// W evaluated on a reduced state: V - f V'^2/(4V) - 1.
double mass_aspect_state(const std::array<double, 3>& y);

}  // namespace adsgeo
