#include "eigencomplete/numerics/chebyshev.hpp"

#include <stdexcept>

namespace eigc {

std::vector<double> Chebyshev::nodes(double lo, double hi, int n) {
  std::vector<double> xs(n + 1);
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  for (int j = 0; j <= n; ++j)
    xs[j] = c - h * std::cos(M_PI * j / n);  // ascending
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

Chebyshev::Chebyshev(double lo, double hi, std::vector<double> node_values)
    : lo_(lo), hi_(hi) {
  const int n = static_cast<int>(node_values.size()) - 1;
  if (n < 2) throw std::invalid_argument("Chebyshev: too few nodes");
  // node_values are at ascending Lobatto nodes; re-index to the standard
  // descending cos(pi j / n) ordering for the DCT-I coefficient sum.
  coef_.assign(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double vj = node_values[n - j];
      const double term = vj * std::cos(M_PI * k * j / n);
      s += (j == 0 || j == n) ? 0.5 * term : term;
    }
    coef_[k] = 2.0 * s / n;
    if (k == 0 || k == n) coef_[k] *= 0.5;
  }
  // Derivative coefficients (standard backward recurrence), scaled to x.
  dcoef_.assign(n + 1, 0.0);
  const double scale = 2.0 / (hi_ - lo_);
  if (n >= 1) {
    std::vector<double> d(n + 2, 0.0);
    for (int k = n - 1; k >= 0; --k)
      d[k] = d[k + 2] + 2.0 * (k + 1) * coef_[k + 1];
    d[0] *= 0.5;
    for (int k = 0; k <= n; ++k) dcoef_[k] = d[k] * scale;
  }
}

double Chebyshev::clenshaw(const std::vector<double>& c, double x) const {
  const double t = (2.0 * x - lo_ - hi_) / (hi_ - lo_);
  double b1 = 0.0, b2 = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
    const double b0 = 2.0 * t * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

double Chebyshev::value(double x) const { return clenshaw(coef_, x); }

double Chebyshev::derivative(double x) const { return clenshaw(dcoef_, x); }

}  // namespace eigc
