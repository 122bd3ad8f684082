#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adsgeo/chart.hpp"
#include "adsgeo/fields.hpp"

namespace adsgeo {

enum class Signature { riemannian, lorentzian };

/// Pseudo-Riemannian metric on a chart: symmetric component fields g_ab.
/// Lorentzian metrics use signature (-,+,...,+).
class MetricField {
 public:
  /// `upper` lists g_ab for a <= b, row-major.
  MetricField(std::string id, Chart chart, Signature sig, std::vector<ScalarField> upper);

  static MetricField diagonal(std::string id, Chart chart, Signature sig,
                              std::vector<ScalarField> diag);

  const std::string& id() const { return id_; }
  const Chart& chart() const { return chart_; }
  int dim() const { return chart_.dim(); }
  Signature signature() const { return sig_; }

  /// Full dim x dim component matrix as jets, row-major, symmetric by
  /// construction.
  std::vector<DJet> eval(const ChartPoint& p, int order) const;

  /// Component values only.
  std::vector<double> values(const ChartPoint& p) const;

  const ScalarField& component(int a, int b) const;

 private:
  size_t upper_index(int a, int b) const;

  std::string id_;
  Chart chart_;
  Signature sig_;
  std::vector<ScalarField> upper_;
};

}  // namespace adsgeo
