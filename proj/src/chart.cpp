#include "adsgeo/chart.hpp"

#include <sstream>

namespace adsgeo {

Chart::Chart(std::string id, std::vector<std::string> coord_names, std::vector<Interval> domain,
             std::vector<Interval> sample_box)
    : id_(std::move(id)),
      names_(std::move(coord_names)),
      domain_(std::move(domain)),
      sample_(std::move(sample_box)) {
  if (domain_.empty() || domain_.size() != names_.size() || domain_.size() != sample_.size())
    throw ChartError("chart '" + id_ + "': inconsistent coordinate metadata");
  for (size_t i = 0; i < domain_.size(); ++i) {
    if (!(domain_[i].lo < domain_[i].hi))
      throw ChartError("chart '" + id_ + "': empty domain interval");
    if (!(domain_[i].lo <= sample_[i].lo && sample_[i].hi <= domain_[i].hi &&
          sample_[i].lo < sample_[i].hi))
      throw ChartError("chart '" + id_ + "': sample box not inside domain");
  }
}

ChartPoint::ChartPoint(const Chart& chart, std::vector<double> coords)
    : chart_id_(chart.id()), x_(std::move(coords)) {
  if (static_cast<int>(x_.size()) != chart.dim()) {
    std::ostringstream os;
    os << "point has " << x_.size() << " coords but chart '" << chart.id() << "' has dimension "
       << chart.dim();
    throw ChartError(os.str());
  }
  for (int i = 0; i < chart.dim(); ++i) {
    const Interval& d = chart.domain(i);
    if (!(d.lo < x_[static_cast<size_t>(i)] && x_[static_cast<size_t>(i)] < d.hi)) {
      std::ostringstream os;
      os << "coordinate " << chart.coord_names()[static_cast<size_t>(i)] << " = "
         << x_[static_cast<size_t>(i)] << " outside open domain (" << d.lo << ", " << d.hi
         << ") of chart '" << chart.id() << "'";
      throw ChartError(os.str());
    }
  }
}

void require_chart(const Chart& chart, const ChartPoint& p) {
  require_chart(chart.id(), chart.dim(), p);
}

void require_chart(const std::string& chart_id, int dim, const ChartPoint& p) {
  if (p.chart_id() != chart_id)
    throw ChartError("point from chart '" + p.chart_id() + "' used with chart '" + chart_id +
                     "'");
  if (p.dim() != dim) throw ChartError("point dimension mismatch in chart '" + chart_id + "'");
}

ChartPoint sample_point(const Chart& chart, std::mt19937_64& rng) {
  std::vector<double> x(static_cast<size_t>(chart.dim()));
  for (int i = 0; i < chart.dim(); ++i) {
    const Interval& b = chart.sample_box(i);
    x[static_cast<size_t>(i)] = b.lo + uniform01(rng) * (b.hi - b.lo);
  }
  return ChartPoint(chart, std::move(x));
}

}  // namespace adsgeo
