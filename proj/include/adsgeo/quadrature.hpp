#pragma once

#include <functional>
#include <vector>

#include "adsgeo/chart.hpp"

namespace adsgeo {

struct GaussLegendre {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

/// Nodes/weights by Newton iteration on the Legendre polynomial; cached.
const GaussLegendre& gauss_legendre(int n);

/// Tensor-product Gauss-Legendre integral of f over a box.
double integrate_box(const std::vector<Interval>& box, int nodes_per_dim,
                     const std::function<double(const std::vector<double>&)>& f);

}  // namespace adsgeo
