#include "eigencomplete/numerics/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eigc {

Bracket make_bracket(const std::function<double(double)>& f, double lo,
                     double hi) {
  Bracket b{lo, hi, f(lo), f(hi)};
  if (!(b.lo < b.hi)) throw NoSignChange("bracket endpoints not ordered");
  if (b.f_lo * b.f_hi > 0.0)
    throw NoSignChange("no sign change enclosed in bracket");
  return b;
}

double find_root(const std::function<double(double)>& f,
                 const Bracket& bracket, double tol) {
  if (!bracket.valid()) throw NoSignChange("invalid bracket");
  double a = bracket.lo, b = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;

  double c = a, fc = fa;
  double d = b - a, e = d;
  const int max_iter = 200;
  for (int iter = 0; iter < max_iter; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // inverse quadratic / secant step
      double s = fb / fa, p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  throw MaxIterations("find_root: tolerance not reached in 200 iterations");
}

std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo, double hi, double points_per_unit,
                               double tol) {
  std::vector<double> roots;
  if (!(hi > lo)) return roots;
  const long n = std::max<long>(8, std::lround((hi - lo) * points_per_unit));
  double x_prev = lo;
  double f_prev = f(x_prev);
  for (long i = 1; i <= n; ++i) {
    double x = lo + (hi - lo) * static_cast<double>(i) / n;
    double fx = f(x);
    if (std::isfinite(f_prev) && std::isfinite(fx)) {
      if (f_prev == 0.0) {
        roots.push_back(x_prev);
      } else if (f_prev * fx < 0.0) {
        Bracket b{x_prev, x, f_prev, fx};
        roots.push_back(find_root(f, b, tol));
      }
    }
    x_prev = x;
    f_prev = fx;
  }
  if (std::isfinite(f_prev) && f_prev == 0.0) roots.push_back(x_prev);
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [tol](double a, double b) {
                            return std::abs(a - b) <= 4.0 * tol;
                          }),
              roots.end());
  return roots;
}

}  // namespace eigc
