#include "adsgeo/metric.hpp"

namespace adsgeo {

MetricField::MetricField(std::string id, Chart chart, Signature sig,
                         std::vector<ScalarField> upper)
    : id_(std::move(id)), chart_(std::move(chart)), sig_(sig), upper_(std::move(upper)) {
  const size_t d = static_cast<size_t>(chart_.dim());
  if (upper_.size() != d * (d + 1) / 2)
    throw ChartError("metric '" + id_ + "': wrong number of upper-triangle components");
  for (const auto& c : upper_)
    if (c && c.chart_id() != chart_.id())
      throw ChartError("metric '" + id_ + "': component on the wrong chart");
}

MetricField MetricField::diagonal(std::string id, Chart chart, Signature sig,
                                  std::vector<ScalarField> diag) {
  const int d = chart.dim();
  if (static_cast<int>(diag.size()) != d)
    throw ChartError("metric '" + id + "': wrong number of diagonal components");
  std::vector<ScalarField> upper;
  upper.reserve(static_cast<size_t>(d * (d + 1) / 2));
  const ScalarField zero = constant_field(chart, 0.0);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b)
      upper.push_back(a == b ? diag[static_cast<size_t>(a)] : zero);
  return MetricField(std::move(id), std::move(chart), sig, std::move(upper));
}

size_t MetricField::upper_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  const int d = dim();
  return static_cast<size_t>(a * d - a * (a - 1) / 2 + (b - a));
}

const ScalarField& MetricField::component(int a, int b) const {
  return upper_[upper_index(a, b)];
}

std::vector<DJet> MetricField::eval(const ChartPoint& p, int order) const {
  require_chart(chart_, p);
  const int d = dim();
  std::vector<DJet> m(static_cast<size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      DJet j = upper_[upper_index(a, b)].eval(p, order);
      m[static_cast<size_t>(a) * d + b] = j;
      if (a != b) m[static_cast<size_t>(b) * d + a] = std::move(j);
    }
  return m;
}

std::vector<double> MetricField::values(const ChartPoint& p) const {
  const auto jets = eval(p, 0);
  std::vector<double> v(jets.size());
  for (size_t i = 0; i < jets.size(); ++i) v[i] = jets[i].value();
  return v;
}

}  // namespace adsgeo
