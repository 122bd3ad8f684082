#pragma once

#include <random>
#include <string>
#include <vector>

#include "adsgeo/errors.hpp"

namespace adsgeo {

struct Interval {
  double lo;
  double hi;
};

/// Open-box coordinate chart. `domain` bounds where evaluation is defined.
/// `sample_box` is a strictly smaller closed region used for seeded random
/// points; it stays away from coordinate degeneracies (sphere poles,
/// horizons, the conformal boundary).
class Chart {
 public:
  Chart(std::string id, std::vector<std::string> coord_names, std::vector<Interval> domain,
        std::vector<Interval> sample_box);

  const std::string& id() const { return id_; }
  int dim() const { return static_cast<int>(domain_.size()); }
  const std::vector<std::string>& coord_names() const { return names_; }
  const Interval& domain(int i) const { return domain_.at(static_cast<size_t>(i)); }
  const Interval& sample_box(int i) const { return sample_.at(static_cast<size_t>(i)); }

 private:
  std::string id_;
  std::vector<std::string> names_;
  std::vector<Interval> domain_;
  std::vector<Interval> sample_;
};

/// A coordinate tuple tagged with the chart it belongs to. Construction
/// validates dimension and the open-domain bounds.
class ChartPoint {
 public:
  ChartPoint(const Chart& chart, std::vector<double> coords);

  const std::string& chart_id() const { return chart_id_; }
  int dim() const { return static_cast<int>(x_.size()); }
  double operator[](int i) const { return x_.at(static_cast<size_t>(i)); }
  const std::vector<double>& coords() const { return x_; }

 private:
  std::string chart_id_;
  std::vector<double> x_;
};

/// ChartError unless `p` was built in this chart.
void require_chart(const Chart& chart, const ChartPoint& p);
void require_chart(const std::string& chart_id, int dim, const ChartPoint& p);

/// Fixed 64 -> 53 bit mapping, so sampled streams are identical across
/// platforms for a given seed.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Deterministic point inside the chart's sample box.
ChartPoint sample_point(const Chart& chart, std::mt19937_64& rng);

}  // namespace adsgeo
