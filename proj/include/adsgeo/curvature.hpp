#pragma once

#include <vector>

#include "adsgeo/conventions.hpp"
#include "adsgeo/curvature_impl.hpp"
#include "adsgeo/metric.hpp"

namespace adsgeo {

/// Pointwise curvature data of a metric, all in the chart coordinate frame.
struct CurvatureBundle {
  int dim = 0;
  std::vector<double> metric;       // d*d
  std::vector<double> inverse;      // d*d
  std::vector<double> christoffel;  // d*d*d, [a][b][c] = Gamma^a_{bc}
  std::vector<double> riemann_up;   // d^4, [a][b][c][d] = R^a_{bcd}
  std::vector<double> riemann_lo;   // d^4, R_{abcd}
  std::vector<double> ricci;        // d*d
  double scalar = 0.0;

  double ricci_at(int a, int b) const { return ricci[static_cast<size_t>(a) * dim + b]; }
  double metric_at(int a, int b) const { return metric[static_cast<size_t>(a) * dim + b]; }
  double inverse_at(int a, int b) const { return inverse[static_cast<size_t>(a) * dim + b]; }
  double riemann_lo_at(int a, int b, int c, int d) const {
    return riemann_lo[((static_cast<size_t>(a) * dim + b) * dim + c) * dim + d];
  }
  double christoffel_at(int a, int b, int c) const {
    return christoffel[(static_cast<size_t>(a) * dim + b) * dim + c];
  }
};

MetricJets<double> metric_jets(const MetricField& g, const ChartPoint& p, int order);

CurvatureBundle curvature_bundle(const MetricField& g, const ChartPoint& p);

/// E_ab = Ric_ab - (R/2) g_ab + Lambda g_ab at p, row-major.
std::vector<double> einstein_tensor(const MetricField& g, const ChartPoint& p, double lambda);

/// Sup norm over components of the Einstein tensor. Lambda defaults to the
/// negative constant that the (dim-1)-sphere-at-infinity normalization fixes.
double einstein_residual(const MetricField& g, const ChartPoint& p, double lambda);
double einstein_residual(const MetricField& g, const ChartPoint& p);

/// Contracted-Bianchi residual vector div(E)_d = g^{ab} (nabla_a E)_{bd}.
/// Needs order-3 metric jets.
std::vector<double> einstein_divergence(const MetricField& g, const ChartPoint& p,
                                        double lambda);

/// Covariant Hessian (nabla^2 f)_ab, row-major d*d.
std::vector<double> hessian(const MetricField& g, const ScalarField& f, const ChartPoint& p);

/// Hessian of f as jets (order = f order - 2 limited by metric order - 1).
std::vector<DJet> hessian_jets(const MetricField& g, const ScalarField& f, const ChartPoint& p,
                               int order);

double laplacian(const MetricField& g, const ScalarField& f, const ChartPoint& p);

/// |grad f|^2 = g^{ab} d_a f d_b f.
double grad_norm_sq(const MetricField& g, const ScalarField& f, const ChartPoint& p);

/// sqrt(sum_{abcd} |g^{ac} g^{bd} T_ab T_cd|) for a covariant 2-tensor.
double tensor2_norm(const std::vector<double>& g_up, const std::vector<double>& t_lo, int d);

/// Max |T_ab| over components.
double sup_norm(const std::vector<double>& t);

}  // namespace adsgeo
