#pragma once

// Central finite differences. Test oracle only; production code never
// differentiates numerically.

#include <functional>
#include <vector>

namespace testsupport {

using Fn = std::function<double(const std::vector<double>&)>;

inline double fd1(const Fn& f, std::vector<double> x, int a, double h = 1e-5) {
  x[a] += h;
  const double up = f(x);
  x[a] -= 2.0 * h;
  const double dn = f(x);
  return (up - dn) / (2.0 * h);
}

inline double fd2(const Fn& f, const std::vector<double>& x, int a, int b, double h = 1e-4) {
  Fn g = [&f, a, h](const std::vector<double>& y) { return fd1(f, y, a, h); };
  return fd1(g, x, b, h);
}

inline double fd3(const Fn& f, const std::vector<double>& x, int a, int b, int c,
                  double h = 8e-4) {
  Fn g = [&f, a, b, h](const std::vector<double>& y) { return fd2(f, y, a, b, h); };
  return fd1(g, x, c, h);
}

}  // namespace testsupport
