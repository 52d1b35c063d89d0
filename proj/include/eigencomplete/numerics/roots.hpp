#pragma once

#include <functional>
#include <vector>

#include "eigencomplete/errors.hpp"

namespace eigc {

// A sign-change enclosure for a 1-D root.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;

  bool valid() const { return lo < hi && f_lo * f_hi <= 0.0; }
};

// Makes a Bracket by evaluating f at both ends; throws NoSignChange if the
// enclosure is invalid.
Bracket make_bracket(const std::function<double(double)>& f, double lo,
                     double hi);

// Brent's method on a validated bracket.  Deterministic; the returned root
// is enclosed to width <= tol.
double find_root(const std::function<double(double)>& f,
                 const Bracket& bracket, double tol);

// Uniform scan of [lo, hi] for sign changes followed by Brent refinement.
// `points_per_unit` controls the scan density (points per unit interval);
// non-finite samples are skipped.  Returns roots in ascending order.
std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo, double hi, double points_per_unit,
                               double tol = 1e-12);

}  // namespace eigc
