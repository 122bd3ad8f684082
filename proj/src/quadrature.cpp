#include "adsgeo/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace adsgeo {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  if (n < 1) throw ConfigError("quadrature needs at least one node");
  GaussLegendre gl;
  gl.nodes.resize(static_cast<size_t>(n));
  gl.weights.resize(static_cast<size_t>(n));
  constexpr double kPi = 3.14159265358979323846;
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[static_cast<size_t>(i)] = x;
    gl.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  static std::map<int, GaussLegendre> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

double integrate_box(const std::vector<Interval>& box, int nodes_per_dim,
                     const std::function<double(const std::vector<double>&)>& f) {
  const GaussLegendre gl = gauss_legendre(nodes_per_dim);
  const int d = static_cast<int>(box.size());
  std::vector<double> x(static_cast<size_t>(d));
  double total = 0.0;

  std::function<void(int, double)> walk = [&](int depth, double w) {
    if (depth == d) {
      total += w * f(x);
      return;
    }
    const Interval& b = box[static_cast<size_t>(depth)];
    const double mid = 0.5 * (b.lo + b.hi);
    const double half = 0.5 * (b.hi - b.lo);
    for (int i = 0; i < nodes_per_dim; ++i) {
      x[static_cast<size_t>(depth)] = mid + half * gl.nodes[static_cast<size_t>(i)];
      walk(depth + 1, w * half * gl.weights[static_cast<size_t>(i)]);
    }
  };
  walk(0, 1.0);
  return total;
}

}  // namespace adsgeo
