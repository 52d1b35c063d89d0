#pragma once

#include <cmath>
#include <vector>

namespace eigc {

// Chebyshev interpolant on [lo, hi] built from values at Chebyshev-Lobatto
// nodes.  Used to cache numerically integrated basis solutions (Mathieu)
// so that later point evaluation is cheap and derivative-capable.
class Chebyshev {
 public:
  Chebyshev() = default;
  Chebyshev(double lo, double hi, std::vector<double> node_values);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  // Lobatto nodes in ascending order for an interpolant of degree n.
  static std::vector<double> nodes(double lo, double hi, int n);

  double value(double x) const;
  double derivative(double x) const;

 private:
  double lo_ = -1.0, hi_ = 1.0;
  std::vector<double> coef_;   // Chebyshev coefficients
  std::vector<double> dcoef_;  // coefficients of the derivative
  double clenshaw(const std::vector<double>& c, double x) const;
};

}  // namespace eigc
