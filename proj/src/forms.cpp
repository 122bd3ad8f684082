#include "adsgeo/forms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace adsgeo {

const std::vector<std::vector<int>>& increasing_indices(int dim, int k) {
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(dim, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
  } else if (k <= dim) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      out.push_back(idx);
      int t = k - 1;
      while (t >= 0 && idx[static_cast<size_t>(t)] == dim - k + t) --t;
      if (t < 0) break;
      ++idx[static_cast<size_t>(t)];
      for (int j = t + 1; j < k; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  const size_t n = idx.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = 0; j + 1 < n - i; ++j) {
      if (idx[j] == idx[j + 1]) return 0;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  return sign;
}

int index_rank(int dim, const std::vector<int>& sorted_idx) {
  const auto& list = increasing_indices(dim, static_cast<int>(sorted_idx.size()));
  for (size_t r = 0; r < list.size(); ++r)
    if (list[r] == sorted_idx) return static_cast<int>(r);
  throw OrderError("multi-index out of range");
}

FormField::FormField(std::string chart_id, int dim, int degree, Evaluator ev)
    : chart_id_(std::move(chart_id)), dim_(dim), degree_(degree), ev_(std::move(ev)) {
  if (degree_ < 0) throw OrderError("negative form degree");
}

int FormField::coeff_count() const {
  return static_cast<int>(increasing_indices(dim_, degree_).size());
}

std::vector<DJet> FormField::eval(const ChartPoint& p, int order) const {
  if (!ev_) throw ChartError("evaluating an empty form field");
  require_chart(chart_id_, dim_, p);
  if (order < 0 || order > kMaxJetOrder) throw OrderError("form jet order out of range");
  return ev_(p, order);
}

DJet FormField::component(const std::vector<DJet>& coeffs, int dim, int degree,
                          std::vector<int> idx) {
  if (static_cast<int>(idx.size()) != degree) throw OrderError("component index arity mismatch");
  const int sign = sort_with_sign(idx);
  if (coeffs.empty()) throw OrderError("component of an empty coefficient set");
  if (sign == 0) {
    DJet z = coeffs[0];
    return z * 0.0;
  }
  const DJet& c = coeffs[static_cast<size_t>(index_rank(dim, idx))];
  return sign > 0 ? c : -c;
}

FormField zero_form(const Chart& chart, int degree) {
  const int dim = chart.dim();
  return FormField(chart.id(), dim, degree, [dim, degree](const ChartPoint& p, int order) {
    const size_t cnt = increasing_indices(dim, degree).size();
    return std::vector<DJet>(cnt, DJet::constant(p.dim(), order, 0.0));
  });
}

FormField metric_dual(const MetricField& g, const VectorField& X) {
  if (g.chart().id() != X.chart_id()) throw ChartError("vector and metric on different charts");
  const int d = g.dim();
  return FormField(g.chart().id(), d, 1, [g, X, d](const ChartPoint& p, int order) {
    const auto gj = g.eval(p, order);
    const auto xj = X.eval(p, order);
    std::vector<DJet> w;
    w.reserve(static_cast<size_t>(d));
    for (int a = 0; a < d; ++a) {
      DJet acc = gj[static_cast<size_t>(a) * d] * xj[0];
      for (int b = 1; b < d; ++b) acc = acc + gj[static_cast<size_t>(a) * d + b] * xj[static_cast<size_t>(b)];
      w.push_back(std::move(acc));
    }
    return w;
  });
}

FormField exterior_derivative(const FormField& a) {
  const int d = a.dim();
  const int k = a.degree();
  return FormField(a.chart_id(), d, k + 1, [a, d, k](const ChartPoint& p, int order) {
    if (order + 1 > kMaxJetOrder)
      throw OrderError("exterior derivative exhausts the order-3 jet budget");
    const auto inner = a.eval(p, order + 1);
    const auto& outs = increasing_indices(d, k + 1);
    std::vector<DJet> out;
    out.reserve(outs.size());
    for (const auto& J : outs) {
      DJet acc = DJet::constant(p.dim(), order, 0.0);
      std::vector<int> sub(static_cast<size_t>(k));
      for (int t = 0; t <= k; ++t) {
        for (int u = 0, w = 0; u <= k; ++u)
          if (u != t) sub[static_cast<size_t>(w++)] = J[static_cast<size_t>(u)];
        const DJet term = inner[static_cast<size_t>(index_rank(d, sub))].partial(J[static_cast<size_t>(t)]);
        acc = (t % 2 == 0) ? acc + term : acc - term;
      }
      out.push_back(std::move(acc));
    }
    return out;
  });
}

FormField wedge(const FormField& a, const FormField& b) {
  if (a.chart_id() != b.chart_id()) throw ChartError("wedge of forms on different charts");
  const int d = a.dim();
  const int ka = a.degree(), kb = b.degree();
  return FormField(a.chart_id(), d, ka + kb, [a, b, d, ka, kb](const ChartPoint& p, int order) {
    const auto ac = a.eval(p, order);
    const auto bc = b.eval(p, order);
    const auto& outs = increasing_indices(d, ka + kb);
    const auto& selectors = increasing_indices(ka + kb, ka);
    std::vector<DJet> out;
    out.reserve(outs.size());
    for (const auto& S : outs) {
      DJet acc = DJet::constant(p.dim(), order, 0.0);
      for (const auto& sel : selectors) {
        std::vector<int> ia, ib, perm;
        perm.reserve(S.size());
        size_t si = 0;
        for (int pos : sel) {
          ia.push_back(S[static_cast<size_t>(pos)]);
          perm.push_back(pos);
        }
        for (int pos = 0; pos < ka + kb; ++pos) {
          if (si < sel.size() && sel[si] == pos) {
            ++si;
            continue;
          }
          ib.push_back(S[static_cast<size_t>(pos)]);
          perm.push_back(pos);
        }
        const int sign = sort_with_sign(perm);
        const DJet term = ac[static_cast<size_t>(index_rank(d, ia))] *
                          bc[static_cast<size_t>(index_rank(d, ib))];
        acc = sign > 0 ? acc + term : acc - term;
      }
      out.push_back(std::move(acc));
    }
    return out;
  });
}

FormField interior_product(const VectorField& X, const FormField& a) {
  if (a.chart_id() != X.chart_id())
    throw ChartError("interior product of objects on different charts");
  const int d = a.dim();
  const int k = a.degree();
  if (k < 1) throw OrderError("interior product needs degree >= 1");
  return FormField(a.chart_id(), d, k - 1, [X, a, d, k](const ChartPoint& p, int order) {
    const auto ac = a.eval(p, order);
    const auto xj = X.eval(p, order);
    const auto& outs = increasing_indices(d, k - 1);
    std::vector<DJet> out;
    out.reserve(outs.size());
    for (const auto& J : outs) {
      DJet acc = DJet::constant(p.dim(), order, 0.0);
      std::vector<int> full(static_cast<size_t>(k));
      for (int v = 0; v < d; ++v) {
        full[0] = v;
        for (size_t t = 0; t < J.size(); ++t) full[t + 1] = J[t];
        acc = acc + xj[static_cast<size_t>(v)] * FormField::component(ac, d, k, full);
      }
      out.push_back(std::move(acc));
    }
    return out;
  });
}

FormField hodge_star(const MetricField& g, const FormField& a) {
  if (g.chart().id() != a.chart_id()) throw ChartError("hodge star on the wrong chart");
  const int d = g.dim();
  const int k = a.degree();
  if (k > d) throw OrderError("form degree exceeds dimension");
  return FormField(a.chart_id(), d, d - k, [g, a, d, k](const ChartPoint& p, int order) {
    const MetricJets<double> mj = make_metric_jets(g.eval(p, order), d);
    const auto ac = a.eval(p, order);

    // Fully raise the coefficient array, one slot at a time.
    size_t total = 1;
    for (int t = 0; t < k; ++t) total *= static_cast<size_t>(d);
    std::vector<DJet> A(total, DJet::constant(p.dim(), order, 0.0));
    std::vector<int> idx(static_cast<size_t>(k));
    for (size_t flat = 0; flat < total; ++flat) {
      size_t rest = flat;
      for (int t = k - 1; t >= 0; --t) {
        idx[static_cast<size_t>(t)] = static_cast<int>(rest % static_cast<size_t>(d));
        rest /= static_cast<size_t>(d);
      }
      A[flat] = FormField::component(ac, d, k, idx);
    }
    for (int slot = 0; slot < k; ++slot) {
      std::vector<DJet> B(total, DJet::constant(p.dim(), order, 0.0));
      size_t stride = 1;
      for (int t = slot + 1; t < k; ++t) stride *= static_cast<size_t>(d);
      for (size_t flat = 0; flat < total; ++flat) {
        const int i = static_cast<int>((flat / stride) % static_cast<size_t>(d));
        DJet acc = DJet::constant(p.dim(), order, 0.0);
        const size_t base = flat - static_cast<size_t>(i) * stride;
        for (int j = 0; j < d; ++j)
          acc = acc + mj.up[static_cast<size_t>(i) * d + j] * A[base + static_cast<size_t>(j) * stride];
        B[flat] = std::move(acc);
      }
      A = std::move(B);
    }

    const DJet det = jet_det(mj.lo, d);
    const DJet vol = det.value() >= 0.0 ? jet_math::sqrt(det) : jet_math::sqrt(-det);

    const auto& outs = increasing_indices(d, d - k);
    std::vector<DJet> out;
    out.reserve(outs.size());
    std::vector<char> inJ(static_cast<size_t>(d));
    for (const auto& J : outs) {
      std::fill(inJ.begin(), inJ.end(), 0);
      for (int j : J) inJ[static_cast<size_t>(j)] = 1;
      std::vector<int> comp;
      comp.reserve(static_cast<size_t>(k));
      for (int i = 0; i < d; ++i)
        if (!inJ[static_cast<size_t>(i)]) comp.push_back(i);
      std::vector<int> perm = comp;
      perm.insert(perm.end(), J.begin(), J.end());
      const int sign = sort_with_sign(perm);
      size_t flat = 0;
      for (int i : comp) flat = flat * static_cast<size_t>(d) + static_cast<size_t>(i);
      DJet val = vol * A[flat];
      out.push_back(sign >= 0 ? std::move(val) : -val);
    }
    return out;
  });
}

FormField scalar_times(const ScalarField& f, const FormField& a) {
  if (f.chart_id() != a.chart_id()) throw ChartError("scaling a form on the wrong chart");
  return FormField(a.chart_id(), a.dim(), a.degree(), [f, a](const ChartPoint& p, int order) {
    const DJet fj = f.eval(p, order);
    auto c = a.eval(p, order);
    for (auto& x : c) x = x * fj;
    return c;
  });
}

FormField operator+(const FormField& a, const FormField& b) {
  if (a.chart_id() != b.chart_id() || a.degree() != b.degree())
    throw ChartError("adding incompatible forms");
  return FormField(a.chart_id(), a.dim(), a.degree(), [a, b](const ChartPoint& p, int order) {
    auto ca = a.eval(p, order);
    const auto cb = b.eval(p, order);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] = ca[i] + cb[i];
    return ca;
  });
}

FormField operator-(const FormField& a, const FormField& b) {
  if (a.chart_id() != b.chart_id() || a.degree() != b.degree())
    throw ChartError("subtracting incompatible forms");
  return FormField(a.chart_id(), a.dim(), a.degree(), [a, b](const ChartPoint& p, int order) {
    auto ca = a.eval(p, order);
    const auto cb = b.eval(p, order);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] = ca[i] - cb[i];
    return ca;
  });
}

double form_norm_sq(const MetricField& g, const FormField& a, const ChartPoint& p) {
  const int d = g.dim();
  const int k = a.degree();
  const MetricJets<double> mj = make_metric_jets(g.eval(p, 0), d);
  const auto ac = a.eval(p, 0);
  const auto& idxs = increasing_indices(d, k);
  double acc = 0.0;
  std::vector<int> jdx(static_cast<size_t>(k));
  for (size_t r = 0; r < idxs.size(); ++r) {
    // alpha^I: raise every slot of I
    double raised = 0.0;
    const auto& I = idxs[r];
    std::function<void(int, double)> rec = [&](int slot, double prod) {
      if (slot == k) {
        std::vector<int> jj = jdx;
        const int sign = sort_with_sign(jj);
        if (sign == 0) return;
        const double av = ac[static_cast<size_t>(index_rank(d, jj))].value();
        raised += prod * sign * av;
        return;
      }
      for (int j = 0; j < d; ++j) {
        jdx[static_cast<size_t>(slot)] = j;
        rec(slot + 1,
            prod * mj.up[static_cast<size_t>(I[static_cast<size_t>(slot)]) * d + j].value());
      }
    };
    rec(0, 1.0);
    acc += ac[r].value() * raised;
  }
  return acc;
}

double form_sup(const FormField& a, const ChartPoint& p) {
  const auto c = a.eval(p, 0);
  double m = 0.0;
  for (const auto& j : c) m = std::max(m, std::abs(j.value()));
  return m;
}

}  // namespace adsgeo
