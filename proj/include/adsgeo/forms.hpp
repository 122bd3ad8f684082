#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adsgeo/curvature.hpp"
#include "adsgeo/metric.hpp"

namespace adsgeo {

/// All strictly increasing k-element index tuples in {0..dim-1}, ordered
/// lexicographically. Cached.
const std::vector<std::vector<int>>& increasing_indices(int dim, int k);

/// Sorts in place, returns the permutation sign; 0 if an index repeats.
int sort_with_sign(std::vector<int>& idx);

/// Position of a sorted tuple inside increasing_indices(dim, k).
int index_rank(int dim, const std::vector<int>& sorted_idx);

/// Differential k-form on one chart. Coefficients are stored for strictly
/// increasing multi-indices in the order of increasing_indices(dim, k); the
/// evaluator returns them as jets of the requested order.
class FormField {
 public:
  using Evaluator = std::function<std::vector<DJet>(const ChartPoint&, int)>;

  FormField() = default;
  FormField(std::string chart_id, int dim, int degree, Evaluator ev);

  const std::string& chart_id() const { return chart_id_; }
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int coeff_count() const;

  std::vector<DJet> eval(const ChartPoint& p, int order) const;

  /// Component for an arbitrary index tuple, antisymmetrized sign applied.
  static DJet component(const std::vector<DJet>& coeffs, int dim, int degree,
                        std::vector<int> idx);

 private:
  std::string chart_id_;
  int dim_ = 0;
  int degree_ = 0;
  Evaluator ev_;
};

FormField zero_form(const Chart& chart, int degree);

/// omega = g(X, .), the metric dual of a vector field.
FormField metric_dual(const MetricField& g, const VectorField& X);

/// d alpha. Coefficient jets lose one order; requesting order 3 of the
/// result is an OrderError.
FormField exterior_derivative(const FormField& a);

FormField wedge(const FormField& a, const FormField& b);

FormField interior_product(const VectorField& X, const FormField& a);

/// Hodge star with the metric volume form sqrt(|det g|) dx^0 ^ ... in chart
/// coordinate order.
FormField hodge_star(const MetricField& g, const FormField& a);

FormField scalar_times(const ScalarField& f, const FormField& a);
FormField operator+(const FormField& a, const FormField& b);
FormField operator-(const FormField& a, const FormField& b);

/// <a, a> under the metric pairing; indefinite in Lorentzian signature.
double form_norm_sq(const MetricField& g, const FormField& a, const ChartPoint& p);

/// Sup norm of coefficient values at p.
double form_sup(const FormField& a, const ChartPoint& p);

}  // namespace adsgeo
