#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "adsgeo/chart.hpp"
#include "adsgeo/jet.hpp"

namespace adsgeo {

/// Coordinate jet of x^slot at p.
inline DJet jet_var(const ChartPoint& p, int slot, int order) {
  return DJet::variable(p.dim(), order, p[slot], slot);
}

/// Smooth scalar function on one chart, evaluated as an order-<=3 jet.
class ScalarField {
 public:
  using Evaluator = std::function<DJet(const ChartPoint&, int)>;

  ScalarField() = default;
  ScalarField(std::string chart_id, int dim, Evaluator ev)
      : chart_id_(std::move(chart_id)), dim_(dim), ev_(std::move(ev)) {}

  explicit operator bool() const { return static_cast<bool>(ev_); }
  const std::string& chart_id() const { return chart_id_; }
  int dim() const { return dim_; }

  DJet eval(const ChartPoint& p, int order) const {
    if (!ev_) throw ChartError("evaluating an empty scalar field");
    require_chart(chart_id_, dim_, p);
    if (order < 0 || order > kMaxJetOrder) throw OrderError("field jet order out of range");
    return ev_(p, order);
  }

  double value(const ChartPoint& p) const { return eval(p, 0).value(); }

 private:
  std::string chart_id_;
  int dim_ = 0;
  Evaluator ev_;
};

ScalarField coordinate_field(const Chart& chart, int slot);
ScalarField constant_field(const Chart& chart, double c);

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator/(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double c, const ScalarField& a);
ScalarField operator*(const ScalarField& a, double c);
ScalarField operator+(const ScalarField& a, double c);
ScalarField operator+(double c, const ScalarField& a);
ScalarField operator-(const ScalarField& a, double c);
ScalarField operator-(double c, const ScalarField& a);

namespace field_math {
ScalarField sqrt(const ScalarField& f);
ScalarField sin(const ScalarField& f);
ScalarField cos(const ScalarField& f);
ScalarField sinh(const ScalarField& f);
ScalarField cosh(const ScalarField& f);
ScalarField exp(const ScalarField& f);
ScalarField pow(const ScalarField& f, double p);
ScalarField reciprocal(const ScalarField& f);
}  // namespace field_math

/// Vector field as per-coordinate components X^a on one chart.
class VectorField {
 public:
  VectorField() = default;
  VectorField(std::string chart_id, std::vector<ScalarField> comps)
      : chart_id_(std::move(chart_id)), comps_(std::move(comps)) {}

  const std::string& chart_id() const { return chart_id_; }
  int dim() const { return static_cast<int>(comps_.size()); }
  const ScalarField& comp(int a) const { return comps_.at(static_cast<size_t>(a)); }

  std::vector<DJet> eval(const ChartPoint& p, int order) const {
    std::vector<DJet> v;
    v.reserve(comps_.size());
    for (const auto& c : comps_) v.push_back(c.eval(p, order));
    return v;
  }

 private:
  std::string chart_id_;
  std::vector<ScalarField> comps_;
};

/// Coordinate basis vector d/dx^slot, optionally scaled.
VectorField basis_vector(const Chart& chart, int slot, double scale = 1.0);

}  // namespace adsgeo
