#pragma once

#include <vector>

#include "adsgeo/metric.hpp"

namespace adsgeo {

/// Uniform-grid samples of a comparison profile and its slope.
struct ComparisonSamples {
  std::vector<double> s;
  std::vector<double> value;
  std::vector<double> slope;
};

/// phi'' = phi with phi(0) = 1, phi'(0) = 0 on [0, s_max]; equals cosh s.
ComparisonSamples integrate_phi(double s_max, double tol);

/// Jacobi profile f'' = -K f for radial curvature R_{0i0j} = K delta_ij,
/// f(0) = 0, f'(0) = 1. The default K = -1 gives sinh s; K = +1 gives sin s.
ComparisonSamples integrate_jacobi(double s_max, double tol, double radial_curvature = -1.0);

/// Output of the warped reconstruction: the two comparison profiles on one
/// grid and the metric ds^2 + sinh^2(s) dsigma0 they rebuild.
struct ObataSolution {
  int n = 0;
  std::vector<double> s_grid;
  std::vector<double> phi;
  std::vector<double> phi_slope;
  std::vector<double> jacobi;
  std::vector<double> jacobi_slope;
  MetricField reconstructed;
};

ObataSolution solve_obata(int n, double s_max, double tol);

/// || Hess(cosh s) - cosh s * g || at p on the reconstructed metric.
double verify_rigidity(const ObataSolution& sol, const ChartPoint& p);

/// sup over the grid of |phi - sqrt(1 + f^2)|: under r = f(s) the potential
/// must land on the ball-model profile sqrt(1 + r^2).
double ball_model_gap(const ObataSolution& sol);

/// Orthonormal-frame radial curvature R_{0i0j} of the reconstructed metric,
/// (n-1) x (n-1) row-major; closes the loop on the Jacobi input K = -1.
std::vector<double> frame_curvature(const ObataSolution& sol, const ChartPoint& p);

}  // namespace adsgeo
