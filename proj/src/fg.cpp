#include "adsgeo/fg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "adsgeo/catalog.hpp"
#include "adsgeo/conventions.hpp"
#include "adsgeo/curvature_impl.hpp"
#include "adsgeo/fields.hpp"

namespace adsgeo {

namespace {

constexpr int kSSlot = 1;

/// Lifts a radial profile f(s) times an s-independent angular jet into a jet
/// whose scalar ring is the series: slot 1 derivatives act on the series,
/// every other slot differentiates the angular factor.
Jet<LaurentSeries> profile_jet(const LaurentSeries& f, const DJet& ang, int order) {
  const int dim = ang.dim();
  std::array<LaurentSeries, 4> ds;
  ds[0] = f;
  for (int k = 1; k <= order; ++k) ds[static_cast<size_t>(k)] = ds[static_cast<size_t>(k - 1)].derivative();

  Jet<LaurentSeries> j = Jet<LaurentSeries>::constant(dim, order, ds[0] * ang.value());
  if (order >= 1)
    for (int a = 0; a < dim; ++a)
      j.d1(a) = a == kSSlot ? ds[1] * ang.value() : ds[0] * ang.d1(a);
  if (order >= 2)
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        const int c = (a == kSSlot) + (b == kSSlot);
        if (c == 2)
          j.d2(a, b) = ds[2] * ang.value();
        else if (c == 1)
          j.d2(a, b) = ds[1] * ang.d1(a == kSSlot ? b : a);
        else
          j.d2(a, b) = ds[0] * ang.d2(a, b);
      }
  if (order >= 3)
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        for (int c = 0; c < dim; ++c) {
          std::array<int, 3> rest{};
          int cnt = 0, m = 0;
          for (int x : {a, b, c}) {
            if (x == kSSlot)
              ++cnt;
            else
              rest[static_cast<size_t>(m++)] = x;
          }
          if (cnt == 3)
            j.d3(a, b, c) = ds[3] * ang.value();
          else if (cnt == 2)
            j.d3(a, b, c) = ds[2] * ang.d1(rest[0]);
          else if (cnt == 1)
            j.d3(a, b, c) = ds[1] * ang.d2(rest[0], rest[1]);
          else
            j.d3(a, b, c) = ds[0] * ang.d3(a, b, c);
        }
  return j;
}

/// Diagonal vacuum-equation rows (tt, ss, first sphere slot) of the warped
/// ansatz, as series in s at a generic angular probe point.
std::array<LaurentSeries, 3> einstein_rows(int n, const TruncatedSeries& A2,
                                           const TruncatedSeries& B2) {
  const int dim = n + 1;
  const int order = 2;

  std::vector<DJet> fac(static_cast<size_t>(n - 1), DJet::constant(dim, order, 1.0));
  for (int k = 1; k < n - 1; ++k) {
    DJet th = DJet::variable(dim, order, 0.9 + 0.15 * k, 2 + k - 1);
    const DJet sn = jet_math::sin(th);
    fac[static_cast<size_t>(k)] = fac[static_cast<size_t>(k - 1)] * (sn * sn);
  }

  const LaurentSeries inv_s2 = LaurentSeries::monomial(1.0, -2);
  const LaurentSeries a2 = LaurentSeries::from_taylor(A2) * inv_s2;
  const LaurentSeries b2 = LaurentSeries::from_taylor(B2) * inv_s2;
  const DJet unit = DJet::constant(dim, order, 1.0);

  std::vector<Jet<LaurentSeries>> lo(static_cast<size_t>(dim) * dim,
                                     Jet<LaurentSeries>::constant(dim, order, LaurentSeries()));
  lo[0] = profile_jet(-a2, unit, order);
  lo[static_cast<size_t>(kSSlot) * dim + kSSlot] = profile_jet(inv_s2, unit, order);
  for (int k = 0; k < n - 1; ++k)
    lo[(static_cast<size_t>(2 + k)) * dim + (2 + k)] =
        profile_jet(b2, fac[static_cast<size_t>(k)], order);

  const MetricJets<LaurentSeries> mj = make_metric_jets(std::move(lo), dim);
  const auto gamma = christoffel_jets(mj);
  const auto rup = riemann_up_jets(gamma, dim);
  const auto ric = ricci_jets(rup, dim);
  const Jet<LaurentSeries> scalar = scalar_curvature_jet(mj, ric);
  const auto e = einstein_jets(mj, ric, scalar, einstein_lambda(n));
  return {e[0].value(), e[static_cast<size_t>(kSSlot) * dim + kSSlot].value(),
          e[static_cast<size_t>(2) * dim + 2].value()};
}

/// Coefficient read that treats exponents below the stored lead as exact
/// zeros and refuses to read past the trust window.
double coeff_or_zero(const LaurentSeries& l, int k) {
  if (l.is_zero() || k < l.lead()) return 0.0;
  if (k > l.cap()) throw SolveError("expansion exhausted its series trust window");
  return l.coeff(k);
}

struct AffineRow {
  double c0 = 0.0, ca = 0.0, cb = 0.0;
  bool active = false;
};

}  // namespace

TruncatedSeries ads_time_warp_sq(int order) {
  TruncatedSeries t = TruncatedSeries::zero(order);
  t.at(0) = 1.0;
  if (order >= 2) t.at(2) = 0.5;
  if (order >= 4) t.at(4) = 1.0 / 16.0;
  return t;
}

TruncatedSeries ads_sphere_warp_sq(int order) {
  TruncatedSeries t = ads_time_warp_sq(order);
  if (order >= 2) t.at(2) = -0.5;
  return t;
}

FGSolution fg_recursion(int n, int N, double seed, bool allow_even_truncation) {
  if (n < 3) throw ConfigError("boundary dimension must be at least 3");
  if (N < n) throw ConfigError("expansion order must reach the free order n");
  const bool even_gated = n % 2 == 0;
  if (even_gated && !allow_even_truncation)
    throw EvenDimensionLogError(
        "even boundary dimension develops a log term at the free order; "
        "pass allow_even_truncation to stop below it");
  const int solve_to = even_gated ? n - 1 : N;
  const int work = N + 8;

  TruncatedSeries A2 = TruncatedSeries::zero(work);
  A2.at(0) = 1.0;
  TruncatedSeries B2 = A2;

  FGSolution out;

  for (int k = 1; k <= solve_to; ++k) {
    auto rows_for = [&](double av, double bv) {
      TruncatedSeries a = A2, b = B2;
      a.at(k) = av;
      b.at(k) = bv;
      return einstein_rows(n, a, b);
    };
    const auto e0 = rows_for(0.0, 0.0);
    const auto ea = rows_for(1.0, 0.0);
    const auto eb = rows_for(0.0, 1.0);
    const auto eab = rows_for(1.0, 1.0);

    // Order-k data responds at exponent k - 2 in every row; higher orders
    // respond strictly above it, so the coefficient there is exactly affine
    // in (a_k, b_k). At the free order k = n the time and sphere rows lose
    // their response entries and only the trace constraint survives.
    const int ell = k - 2;
    double scale = 1.0;
    for (size_t r = 0; r < 3; ++r)
      scale = std::max({scale, e0[r].max_abs_coeff(), ea[r].max_abs_coeff(),
                        eb[r].max_abs_coeff()});
    const double noise = 1e-9 * scale;

    std::array<AffineRow, 3> rows;
    for (size_t r = 0; r < 3; ++r) {
      const LaurentSeries la = ea[r] - e0[r];
      const LaurentSeries lb = eb[r] - e0[r];
      AffineRow row;
      row.c0 = coeff_or_zero(e0[r], ell);
      row.ca = coeff_or_zero(la, ell);
      row.cb = coeff_or_zero(lb, ell);
      if (std::abs(row.c0) < noise) row.c0 = 0.0;
      if (std::abs(row.ca) < noise) row.ca = 0.0;
      if (std::abs(row.cb) < noise) row.cb = 0.0;
      row.active = row.ca != 0.0 || row.cb != 0.0;
      if (row.active) {
        const double m = std::max({std::abs(row.c0), std::abs(row.ca), std::abs(row.cb)});
        row.c0 /= m;
        row.ca /= m;
        row.cb /= m;
        const LaurentSeries cross = eab[r] - e0[r] - la - lb;
        out.max_affine_defect =
            std::max(out.max_affine_defect, std::abs(coeff_or_zero(cross, ell)) / m);
      }
      rows[r] = row;
    }

    int i = -1, jj = -1;
    double best = 0.0;
    for (int r = 0; r < 3; ++r)
      for (int s = r + 1; s < 3; ++s) {
        if (!rows[static_cast<size_t>(r)].active || !rows[static_cast<size_t>(s)].active) continue;
        const double det = rows[static_cast<size_t>(r)].ca * rows[static_cast<size_t>(s)].cb -
                           rows[static_cast<size_t>(s)].ca * rows[static_cast<size_t>(r)].cb;
        if (std::abs(det) > std::abs(best)) {
          best = det;
          i = r;
          jj = s;
        }
      }

    double ak = 0.0, bk = 0.0;
    if (k != n) {
      if (i < 0 || std::abs(best) < 1e-6)
        throw SolveError("order " + std::to_string(k) + " does not determine both warp factors");
      const AffineRow& r1 = rows[static_cast<size_t>(i)];
      const AffineRow& r2 = rows[static_cast<size_t>(jj)];
      ak = (-r1.c0 * r2.cb + r2.c0 * r1.cb) / best;
      bk = (-r2.c0 * r1.ca + r1.c0 * r2.ca) / best;
      for (int r = 0; r < 3; ++r) {
        const AffineRow& row = rows[static_cast<size_t>(r)];
        if (row.active && (r == i || r == jj)) continue;
        const double defect = row.active ? std::abs(row.c0 + row.ca * ak + row.cb * bk)
                                         : std::abs(row.c0) / scale;
        out.cross_residual = std::max(out.cross_residual, defect);
      }
    } else {
      if (std::abs(best) > 1e-6)
        throw SolveError("the free order is unexpectedly fully determined");
      bk = seed;
      int pick = -1;
      double amp = 0.0;
      for (int r = 0; r < 3; ++r)
        if (rows[static_cast<size_t>(r)].active &&
            std::abs(rows[static_cast<size_t>(r)].ca) > amp) {
          amp = std::abs(rows[static_cast<size_t>(r)].ca);
          pick = r;
        }
      if (pick < 0 || amp < 1e-6)
        throw SolveError("the trace equation is missing at the free order");
      const AffineRow& rp = rows[static_cast<size_t>(pick)];
      ak = -(rp.c0 + rp.cb * bk) / rp.ca;
      for (int r = 0; r < 3; ++r) {
        if (r == pick) continue;
        const AffineRow& row = rows[static_cast<size_t>(r)];
        const double defect = row.active ? std::abs(row.c0 + row.ca * ak + row.cb * bk)
                                         : std::abs(row.c0) / scale;
        out.trace_residual = std::max(out.trace_residual, defect);
      }
    }

    A2.at(k) = ak;
    B2.at(k) = bk;
    if (k < n && k % 2 == 1)
      out.max_odd_below_n = std::max({out.max_odd_below_n, std::abs(ak), std::abs(bk)});
  }

  const int keep = even_gated ? n - 1 : N;
  out.metric.n = n;
  out.metric.A2 = A2.truncated(keep);
  out.metric.B2 = B2.truncated(keep);
  if (!even_gated) {
    out.tau_sphere = B2.coeff(n);
    out.tau00 = -A2.coeff(n);
    out.alpha = -(n - 1) * out.tau_sphere;
  }
  return out;
}

TruncatedSeries static_catalog_profile(int n, double mass, int order) {
  if (order < n) throw ConfigError("profile order must reach the mass term");
  TruncatedSeries t = TruncatedSeries::zero(order);
  t.at(0) = 1.0;
  t.at(2) = 1.0;
  t.at(n) -= mass;
  return t;
}

namespace {

TruncatedSeries padded(const TruncatedSeries& t, int order) {
  TruncatedSeries out = TruncatedSeries::zero(order);
  for (int k = 0; k <= std::min(order, t.order()); ++k) out.at(k) = t.coeff(k);
  return out;
}

}  // namespace

RadialGauge radial_fg_gauge(int n, int N, const TruncatedSeries& pv,
                            const TruncatedSeries& pf) {
  if (n < 3) throw ConfigError("boundary dimension must be at least 3");
  if (N < n) throw ConfigError("expansion order must reach the free order n");
  if (std::abs(pv.coeff(0) - 1.0) > 1e-12 || std::abs(pf.coeff(0) - 1.0) > 1e-12 ||
      (pv.order() >= 1 && std::abs(pv.coeff(1)) > 1e-12) ||
      (pf.order() >= 1 && std::abs(pf.coeff(1)) > 1e-12))
    throw SolveError("radial profiles must tend to the unit-curvature form r^2 + 1 + lower order");

  const int work = N + 6;
  const TruncatedSeries PV = padded(pv, work);
  const TruncatedSeries PF = padded(pf, work);

  // ds/s = -dr/sqrt(f) becomes d(log s) = (1/w) pf^{-1/2} dw in w = 1/r.
  const TruncatedSeries q = PF.sqrt().inverse();
  TruncatedSeries z = TruncatedSeries::zero(work);
  for (int k = 1; k <= work; ++k) z.at(k) = q.coeff(k) / k;
  const TruncatedSeries g = z.exp();

  TruncatedSeries s_of_w = TruncatedSeries::zero(work);
  for (int k = 0; k < work; ++k) s_of_w.at(k + 1) = g.coeff(k);
  const TruncatedSeries w_of_s = revert(s_of_w);

  TruncatedSeries h = TruncatedSeries::zero(work - 1);
  for (int k = 0; k < work; ++k)
    if (k + 1 <= w_of_s.order() && k <= h.order()) h.at(k) = w_of_s.coeff(k + 1);

  const TruncatedSeries B2full = (h * h).inverse();
  const TruncatedSeries A2full = compose(PV, w_of_s) * B2full;

  RadialGauge out;
  out.s_of_w = s_of_w;
  out.w_of_s = w_of_s;

  const TruncatedSeries ident = PF * (s_of_w.derivative() * s_of_w.derivative()) - g * g;
  for (int k = 0; k <= ident.order(); ++k)
    out.identity_residual = std::max(out.identity_residual, std::abs(ident.coeff(k)));

  FGSolution& sol = out.solution;
  sol.metric.n = n;
  sol.metric.A2 = A2full.truncated(N);
  sol.metric.B2 = B2full.truncated(N);
  sol.tau_sphere = B2full.coeff(n);
  sol.tau00 = -A2full.coeff(n);
  sol.alpha = -(n - 1) * sol.tau_sphere;
  sol.trace_residual = std::abs(A2full.coeff(n) + (n - 1) * B2full.coeff(n));
  for (int k = 1; k < n; k += 2)
    sol.max_odd_below_n =
        std::max({sol.max_odd_below_n, std::abs(A2full.coeff(k)), std::abs(B2full.coeff(k))});
  return out;
}

ScalarField series_field(const Chart& chart, int slot, TruncatedSeries t) {
  return ScalarField(chart.id(), chart.dim(),
                     [slot, t = std::move(t)](const ChartPoint& p, int order) {
                       const DJet s = jet_var(p, slot, order);
                       DJet acc = DJet::constant(s.dim(), order, t.coeff(t.order()));
                       for (int k = t.order() - 1; k >= 0; --k) acc = acc * s + t.coeff(k);
                       return acc;
                     });
}

MetricField warped_series_metric_field(const WarpedSeriesMetric& m, double s_hi) {
  Chart c = fg_chart(m.n, s_hi);
  const ScalarField a2 = series_field(c, 1, m.A2);
  const ScalarField b2 = series_field(c, 1, m.B2);
  const ScalarField s = coordinate_field(c, 1);
  const ScalarField inv_s2 = field_math::reciprocal(s * s);
  std::vector<ScalarField> diag;
  diag.push_back(0.0 - a2 * inv_s2);
  diag.push_back(inv_s2);
  for (int k = 1; k < m.n; ++k) diag.push_back(b2 * inv_s2 * sphere_factor(c, 2, k - 1));
  std::ostringstream id;
  id << "fg-series-" << m.n + 1 << "-N" << m.A2.order();
  return MetricField::diagonal(id.str(), std::move(c), Signature::lorentzian, std::move(diag));
}

}  // namespace adsgeo
