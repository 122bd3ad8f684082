#pragma once

// Curvature pipeline templated over the scalar ring, so the same code runs
// on plain doubles (pointwise geometry) and on truncated Laurent series
// (order-by-order boundary expansions). Only ring operations and
// reciprocals are used; no branches on scalar values except pivoting.

#include <vector>

#include "adsgeo/jet.hpp"

namespace adsgeo {

template <typename S>
struct MetricJets {
  int dim = 0;
  std::vector<Jet<S>> lo;  // g_ab, row-major
  std::vector<Jet<S>> up;  // g^ab
};

/// Gauss-Jordan inverse with value-level pivoting.
template <typename S>
std::vector<Jet<S>> invert_jet_matrix(std::vector<Jet<S>> a, int d) {
  if (d <= 0 || static_cast<int>(a.size()) != d * d)
    throw OrderError("bad matrix extent in jet inversion");
  const int dim = a[0].dim();
  const int order = a[0].order();
  std::vector<Jet<S>> inv(static_cast<size_t>(d) * d,
                          Jet<S>::constant(dim, order, ScalarOps<S>::zero()));
  for (int i = 0; i < d; ++i)
    inv[static_cast<size_t>(i) * d + i] = Jet<S>::constant(dim, order, ScalarOps<S>::one());

  auto at = [d](std::vector<Jet<S>>& m, int r, int c) -> Jet<S>& {
    return m[static_cast<size_t>(r) * d + c];
  };

  for (int col = 0; col < d; ++col) {
    int pivot = col;
    double best = ScalarOps<S>::pivot_weight(at(a, col, col).value());
    for (int r = col + 1; r < d; ++r) {
      const double w = ScalarOps<S>::pivot_weight(at(a, r, col).value());
      if (w > best) {
        best = w;
        pivot = r;
      }
    }
    if (best == 0.0) throw DegenerateMetricError("metric not invertible at this point");
    if (pivot != col)
      for (int c = 0; c < d; ++c) {
        std::swap(at(a, pivot, c), at(a, col, c));
        std::swap(at(inv, pivot, c), at(inv, col, c));
      }
    const Jet<S> scale = at(a, col, col).reciprocal();
    for (int c = 0; c < d; ++c) {
      at(a, col, c) = at(a, col, c) * scale;
      at(inv, col, c) = at(inv, col, c) * scale;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const Jet<S> f = at(a, r, col);
      for (int c = 0; c < d; ++c) {
        at(a, r, c) = at(a, r, c) - f * at(a, col, c);
        at(inv, r, c) = at(inv, r, c) - f * at(inv, col, c);
      }
    }
  }
  return inv;
}

/// Determinant by Gaussian elimination with value-level pivoting.
template <typename S>
Jet<S> jet_det(std::vector<Jet<S>> a, int d) {
  if (d <= 0 || static_cast<int>(a.size()) != d * d)
    throw OrderError("bad matrix extent in jet determinant");
  auto at = [d, &a](int r, int c) -> Jet<S>& { return a[static_cast<size_t>(r) * d + c]; };
  double sign = 1.0;
  Jet<S> det = Jet<S>::constant(a[0].dim(), a[0].order(), ScalarOps<S>::one());
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    double best = ScalarOps<S>::pivot_weight(at(col, col).value());
    for (int r = col + 1; r < d; ++r) {
      const double w = ScalarOps<S>::pivot_weight(at(r, col).value());
      if (w > best) {
        best = w;
        pivot = r;
      }
    }
    if (best == 0.0) return det * ScalarOps<S>::zero();
    if (pivot != col) {
      sign = -sign;
      for (int c = col; c < d; ++c) std::swap(at(pivot, c), at(col, c));
    }
    det = det * at(col, col);
    const Jet<S> inv_p = at(col, col).reciprocal();
    for (int r = col + 1; r < d; ++r) {
      const Jet<S> f = at(r, col) * inv_p;
      for (int c = col; c < d; ++c) at(r, c) = at(r, c) - f * at(col, c);
    }
  }
  return det * ScalarOps<S>::from_double(sign);
}

template <typename S>
MetricJets<S> make_metric_jets(std::vector<Jet<S>> lo, int d) {
  MetricJets<S> mj;
  mj.dim = d;
  mj.up = invert_jet_matrix(lo, d);
  mj.lo = std::move(lo);
  return mj;
}

/// Gamma^a_{bc}, flattened [a][b][c]; one jet order below the metric.
template <typename S>
std::vector<Jet<S>> christoffel_jets(const MetricJets<S>& m) {
  const int d = m.dim;
  const S half = ScalarOps<S>::from_double(0.5);
  auto lo = [&](int a, int b) -> const Jet<S>& { return m.lo[static_cast<size_t>(a) * d + b]; };
  auto up = [&](int a, int b) -> const Jet<S>& { return m.up[static_cast<size_t>(a) * d + b]; };

  std::vector<Jet<S>> dg(static_cast<size_t>(d) * d * d);  // [c][a][b] = d_c g_ab
  for (int c = 0; c < d; ++c)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        dg[(static_cast<size_t>(c) * d + a) * d + b] = lo(a, b).partial(c);

  auto dgat = [&](int c, int a, int b) -> const Jet<S>& {
    return dg[(static_cast<size_t>(c) * d + a) * d + b];
  };

  std::vector<Jet<S>> gamma(static_cast<size_t>(d) * d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = b; c < d; ++c) {
        Jet<S> acc;
        bool first = true;
        for (int e = 0; e < d; ++e) {
          const Jet<S> term =
              up(a, e) * (dgat(b, e, c) + dgat(c, e, b) - dgat(e, b, c));
          acc = first ? term : acc + term;
          first = false;
        }
        acc = acc * half;
        gamma[(static_cast<size_t>(a) * d + b) * d + c] = acc;
        if (b != c) gamma[(static_cast<size_t>(a) * d + c) * d + b] = std::move(acc);
      }
  return gamma;
}

/// R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} + Gamma^a_{ce} Gamma^e_{db}
///           - Gamma^a_{de} Gamma^e_{cb}; flattened [a][b][c][d].
template <typename S>
std::vector<Jet<S>> riemann_up_jets(const std::vector<Jet<S>>& gamma, int d) {
  auto G = [&](int a, int b, int c) -> const Jet<S>& {
    return gamma[(static_cast<size_t>(a) * d + b) * d + c];
  };
  std::vector<Jet<S>> r(static_cast<size_t>(d) * d * d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          Jet<S> acc = G(a, e, b).partial(c) - G(a, c, b).partial(e);
          for (int f = 0; f < d; ++f)
            acc = acc + G(a, c, f) * G(f, e, b) - G(a, e, f) * G(f, c, b);
          r[((static_cast<size_t>(a) * d + b) * d + c) * d + e] = std::move(acc);
        }
  return r;
}

/// Fully lowered R_{abcd}.
template <typename S>
std::vector<Jet<S>> riemann_lo_jets(const MetricJets<S>& m,
                                    const std::vector<Jet<S>>& riem_up) {
  const int d = m.dim;
  std::vector<Jet<S>> r(static_cast<size_t>(d) * d * d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          Jet<S> acc;
          bool first = true;
          for (int f = 0; f < d; ++f) {
            const Jet<S> term = m.lo[static_cast<size_t>(a) * d + f] *
                                riem_up[((static_cast<size_t>(f) * d + b) * d + c) * d + e];
            acc = first ? term : acc + term;
            first = false;
          }
          r[((static_cast<size_t>(a) * d + b) * d + c) * d + e] = std::move(acc);
        }
  return r;
}

/// Ric_{bd} = R^a_{bad}.
template <typename S>
std::vector<Jet<S>> ricci_jets(const std::vector<Jet<S>>& riem_up, int d) {
  std::vector<Jet<S>> ric(static_cast<size_t>(d) * d);
  for (int b = 0; b < d; ++b)
    for (int e = 0; e < d; ++e) {
      Jet<S> acc;
      bool first = true;
      for (int a = 0; a < d; ++a) {
        const Jet<S>& term = riem_up[((static_cast<size_t>(a) * d + b) * d + a) * d + e];
        acc = first ? term : acc + term;
        first = false;
      }
      ric[static_cast<size_t>(b) * d + e] = std::move(acc);
    }
  return ric;
}

template <typename S>
Jet<S> scalar_curvature_jet(const MetricJets<S>& m, const std::vector<Jet<S>>& ric) {
  const int d = m.dim;
  Jet<S> acc;
  bool first = true;
  for (int b = 0; b < d; ++b)
    for (int e = 0; e < d; ++e) {
      const Jet<S> term =
          m.up[static_cast<size_t>(b) * d + e] * ric[static_cast<size_t>(b) * d + e];
      acc = first ? term : acc + term;
      first = false;
    }
  return acc;
}

/// E_{ab} = Ric_{ab} - (R/2) g_{ab} + Lambda g_{ab}.
template <typename S>
std::vector<Jet<S>> einstein_jets(const MetricJets<S>& m, const std::vector<Jet<S>>& ric,
                                  const Jet<S>& scalar, double lambda) {
  const int d = m.dim;
  const S half = ScalarOps<S>::from_double(-0.5);
  const S lam = ScalarOps<S>::from_double(lambda);
  std::vector<Jet<S>> e(static_cast<size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Jet<S>& g = m.lo[static_cast<size_t>(a) * d + b];
      e[static_cast<size_t>(a) * d + b] =
          ric[static_cast<size_t>(a) * d + b] + (scalar * g) * half + g * lam;
    }
  return e;
}

}  // namespace adsgeo
