#include "adsgeo/curvature.hpp"

#include <cmath>

namespace adsgeo {

namespace {

std::vector<double> jet_values(const std::vector<DJet>& jets) {
  std::vector<double> v(jets.size());
  for (size_t i = 0; i < jets.size(); ++i) v[i] = jets[i].value();
  return v;
}

}  // namespace

MetricJets<double> metric_jets(const MetricField& g, const ChartPoint& p, int order) {
  return make_metric_jets(g.eval(p, order), g.dim());
}

CurvatureBundle curvature_bundle(const MetricField& g, const ChartPoint& p) {
  const int d = g.dim();
  const MetricJets<double> mj = metric_jets(g, p, 2);
  const auto gamma = christoffel_jets(mj);
  const auto rup = riemann_up_jets(gamma, d);
  const auto rlo = riemann_lo_jets(mj, rup);
  const auto ric = ricci_jets(rup, d);
  const DJet rs = scalar_curvature_jet(mj, ric);

  CurvatureBundle b;
  b.dim = d;
  b.metric = jet_values(mj.lo);
  b.inverse = jet_values(mj.up);
  b.christoffel = jet_values(gamma);
  b.riemann_up = jet_values(rup);
  b.riemann_lo = jet_values(rlo);
  b.ricci = jet_values(ric);
  b.scalar = rs.value();
  return b;
}

std::vector<double> einstein_tensor(const MetricField& g, const ChartPoint& p, double lambda) {
  const int d = g.dim();
  const MetricJets<double> mj = metric_jets(g, p, 2);
  const auto gamma = christoffel_jets(mj);
  const auto rup = riemann_up_jets(gamma, d);
  const auto ric = ricci_jets(rup, d);
  const DJet rs = scalar_curvature_jet(mj, ric);
  return jet_values(einstein_jets(mj, ric, rs, lambda));
}

double einstein_residual(const MetricField& g, const ChartPoint& p, double lambda) {
  return sup_norm(einstein_tensor(g, p, lambda));
}

double einstein_residual(const MetricField& g, const ChartPoint& p) {
  return einstein_residual(g, p, einstein_lambda_for_dim(g.dim()));
}

std::vector<double> einstein_divergence(const MetricField& g, const ChartPoint& p,
                                        double lambda) {
  const int d = g.dim();
  const MetricJets<double> mj = metric_jets(g, p, 3);
  const auto gamma = christoffel_jets(mj);
  const auto rup = riemann_up_jets(gamma, d);
  const auto ric = ricci_jets(rup, d);
  const DJet rs = scalar_curvature_jet(mj, ric);
  const auto ein = einstein_jets(mj, ric, rs, lambda);  // order 1 jets

  auto E = [&](int a, int b) -> const DJet& { return ein[static_cast<size_t>(a) * d + b]; };
  auto G = [&](int a, int b, int c) {
    return gamma[(static_cast<size_t>(a) * d + b) * d + c].value();
  };

  std::vector<double> div(static_cast<size_t>(d), 0.0);
  for (int dd = 0; dd < d; ++dd) {
    double acc = 0.0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        double cov = E(b, dd).d1(a);
        for (int e = 0; e < d; ++e) cov -= G(e, a, b) * E(e, dd).value() + G(e, a, dd) * E(b, e).value();
        acc += mj.up[static_cast<size_t>(a) * d + b].value() * cov;
      }
    div[static_cast<size_t>(dd)] = acc;
  }
  return div;
}

std::vector<DJet> hessian_jets(const MetricField& g, const ScalarField& f, const ChartPoint& p,
                               int order) {
  if (order < 0 || order + 2 > kMaxJetOrder)
    throw OrderError("hessian jets limited to order 1 by the underlying order-3 jets");
  const int d = g.dim();
  const MetricJets<double> mj = metric_jets(g, p, order + 1);
  const auto gamma = christoffel_jets(mj);
  const DJet fj = f.eval(p, order + 2);
  std::vector<DJet> h(static_cast<size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      DJet acc = fj.partial(a).partial(b);
      for (int c = 0; c < d; ++c)
        acc = acc - gamma[(static_cast<size_t>(c) * d + a) * d + b] * fj.partial(c);
      h[static_cast<size_t>(a) * d + b] = acc;
      if (a != b) h[static_cast<size_t>(b) * d + a] = std::move(acc);
    }
  return h;
}

std::vector<double> hessian(const MetricField& g, const ScalarField& f, const ChartPoint& p) {
  return jet_values(hessian_jets(g, f, p, 0));
}

double laplacian(const MetricField& g, const ScalarField& f, const ChartPoint& p) {
  const int d = g.dim();
  const auto h = hessian(g, f, p);
  const MetricJets<double> mj = metric_jets(g, p, 0);
  double acc = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      acc += mj.up[static_cast<size_t>(a) * d + b].value() * h[static_cast<size_t>(a) * d + b];
  return acc;
}

double grad_norm_sq(const MetricField& g, const ScalarField& f, const ChartPoint& p) {
  const int d = g.dim();
  const DJet fj = f.eval(p, 1);
  const MetricJets<double> mj = metric_jets(g, p, 0);
  double acc = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      acc += mj.up[static_cast<size_t>(a) * d + b].value() * fj.d1(a) * fj.d1(b);
  return acc;
}

double tensor2_norm(const std::vector<double>& g_up, const std::vector<double>& t_lo, int d) {
  double acc = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e)
          acc += g_up[static_cast<size_t>(a) * d + c] * g_up[static_cast<size_t>(b) * d + e] *
                 t_lo[static_cast<size_t>(a) * d + b] * t_lo[static_cast<size_t>(c) * d + e];
  return std::sqrt(std::abs(acc));
}

double sup_norm(const std::vector<double>& t) {
  double m = 0.0;
  for (double x : t) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace adsgeo
