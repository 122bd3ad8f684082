#include "adsgeo/fields.hpp"

namespace adsgeo {

namespace {

ScalarField lift2(const ScalarField& a, const ScalarField& b,
                  std::function<DJet(const DJet&, const DJet&)> op) {
  if (a.chart_id() != b.chart_id() || a.dim() != b.dim())
    throw ChartError("combining scalar fields from different charts");
  return ScalarField(a.chart_id(), a.dim(),
                     [a, b, op](const ChartPoint& p, int order) {
                       return op(a.eval(p, order), b.eval(p, order));
                     });
}

ScalarField lift1(const ScalarField& a, std::function<DJet(const DJet&)> op) {
  return ScalarField(a.chart_id(), a.dim(), [a, op](const ChartPoint& p, int order) {
    return op(a.eval(p, order));
  });
}

}  // namespace

ScalarField coordinate_field(const Chart& chart, int slot) {
  if (slot < 0 || slot >= chart.dim()) throw ChartError("coordinate slot out of range");
  return ScalarField(chart.id(), chart.dim(), [slot](const ChartPoint& p, int order) {
    return jet_var(p, slot, order);
  });
}

ScalarField constant_field(const Chart& chart, double c) {
  return ScalarField(chart.id(), chart.dim(), [c](const ChartPoint& p, int order) {
    return DJet::constant(p.dim(), order, c);
  });
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return lift2(a, b, [](const DJet& x, const DJet& y) { return x + y; });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return lift2(a, b, [](const DJet& x, const DJet& y) { return x - y; });
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return lift2(a, b, [](const DJet& x, const DJet& y) { return x * y; });
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  return lift2(a, b, [](const DJet& x, const DJet& y) { return x / y; });
}

ScalarField operator*(double c, const ScalarField& a) {
  return lift1(a, [c](const DJet& x) { return x * c; });
}

ScalarField operator*(const ScalarField& a, double c) { return c * a; }

ScalarField operator+(const ScalarField& a, double c) {
  return lift1(a, [c](const DJet& x) { return x + c; });
}

ScalarField operator+(double c, const ScalarField& a) { return a + c; }

ScalarField operator-(const ScalarField& a, double c) { return a + (-c); }

ScalarField operator-(double c, const ScalarField& a) {
  return lift1(a, [c](const DJet& x) { return c - x; });
}

namespace field_math {

ScalarField sqrt(const ScalarField& f) {
  return lift1(f, [](const DJet& x) { return jet_math::sqrt(x); });
}
ScalarField sin(const ScalarField& f) {
  return lift1(f, [](const DJet& x) { return jet_math::sin(x); });
}
ScalarField cos(const ScalarField& f) {
  return lift1(f, [](const DJet& x) { return jet_math::cos(x); });
}
ScalarField sinh(const ScalarField& f) {
  return lift1(f, [](const DJet& x) { return jet_math::sinh(x); });
}
ScalarField cosh(const ScalarField& f) {
  return lift1(f, [](const DJet& x) { return jet_math::cosh(x); });
}
ScalarField exp(const ScalarField& f) {
  return lift1(f, [](const DJet& x) { return jet_math::exp(x); });
}
ScalarField pow(const ScalarField& f, double p) {
  return lift1(f, [p](const DJet& x) { return jet_math::pow(x, p); });
}
ScalarField reciprocal(const ScalarField& f) {
  return lift1(f, [](const DJet& x) { return x.reciprocal(); });
}

}  // namespace field_math

VectorField basis_vector(const Chart& chart, int slot, double scale) {
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<size_t>(chart.dim()));
  for (int a = 0; a < chart.dim(); ++a)
    comps.push_back(constant_field(chart, a == slot ? scale : 0.0));
  return VectorField(chart.id(), std::move(comps));
}

}  // namespace adsgeo
