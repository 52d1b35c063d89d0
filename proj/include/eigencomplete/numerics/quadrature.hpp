#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "eigencomplete/errors.hpp"

namespace eigc {

using cplx = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ExcludedPoint {
  double location = 0.0;
  double margin = 1e-6;
};

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 20;
  std::vector<ExcludedPoint> excluded_points;

  // Semi-infinite policy: integrate to cutoff_start and keep doubling the
  // cutoff until the tail estimate drops below abs_tol/10.
  double cutoff_start = 64.0;
  int max_doublings = 18;
};

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;
  // Final upper cutoff used when b = +inf; NaN for finite intervals.
  double cutoff = std::numeric_limits<double>::quiet_NaN();
};

struct IntegralResultC {
  cplx value{0.0, 0.0};
  double error = 0.0;
  double cutoff = std::numeric_limits<double>::quiet_NaN();
};

// Adaptive Gauss-Kronrod (15-point) integration of f over [a, b], b may be
// +inf.  Excluded points inside the interval are approached symmetrically
// with geometrically shrinking margins and Aitken stabilization of the
// partial sums.  Throws NonConvergence (with the best estimate attached)
// when neither tolerance can be met.
IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureSpec& spec = {});

IntegralResultC integrate(const std::function<cplx(double)>& f, double a,
                          double b, const QuadratureSpec& spec = {});

// Plain adaptive pass over a finite interval without exclusion handling.
// Building block used by integrate(); exposed because several modules need
// a bare panel integrator.
IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b, double abs_tol,
                                  double rel_tol, int max_depth);

// Fixed-order Gauss-Legendre rule on [a, b]; `n` currently supports 16/32.
struct GaussLegendre {
  explicit GaussLegendre(int n);
  // Nodes/weights mapped onto [a, b].
  void map(double a, double b, std::vector<double>& xs,
           std::vector<double>& ws) const;
  int order() const { return static_cast<int>(nodes_.size()); }

 private:
  std::vector<double> nodes_;    // on (-1, 1)
  std::vector<double> weights_;
};

}  // namespace eigc
