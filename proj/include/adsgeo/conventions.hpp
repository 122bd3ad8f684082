#pragma once

namespace adsgeo {

// Sign conventions used everywhere in this library.
//
//   signature       (-,+,...,+) for Lorentzian metrics
//   Riemann         R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} + Gamma Gamma
//   Ricci           Ric_{bd} = R^a_{bad}
//
// Fixed so that the round unit sphere has scalar curvature m(m-1) > 0 and
// the (n+1)-dimensional anti-de Sitter metric satisfies Ric = -n g with
// scalar curvature -n(n+1).

/// Cosmological constant normalized so AdS_{n+1} solves
/// Ric - (R/2) g + Lambda g = 0. `n` is the boundary dimension.
inline constexpr double einstein_lambda(int n) {
  return -0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
}

/// Same constant addressed by total metric dimension d = n + 1.
inline constexpr double einstein_lambda_for_dim(int d) {
  return einstein_lambda(d - 1);
}

/// Ricci eigenvalue of AdS_{n+1}: Ric = ricci_scale(n) * g.
inline constexpr double ricci_scale(int n) { return -static_cast<double>(n); }

}  // namespace adsgeo
