#include "eigencomplete/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace eigc {

namespace {

// QUADPACK dqk15 nodes and weights.
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Gk15Out {
  T value;
  double error;
  double resabs;
};

template <typename T>
Gk15Out<T> gk15(const std::function<T(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fc = f(c);
  T resk = kWgk[7] * fc;
  T resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  T fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    fv1[j] = f(c - dx);
    fv2[j] = f(c + dx);
    T fsum = fv1[j] + fv2[j];
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;  // j = 1,3,5 -> Gauss nodes
  }
  T reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  resasc *= std::abs(h);
  resabs *= std::abs(h);
  double err = std::abs(resk - resg) * std::abs(h) * 200.0;
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(err, 50.0 * eps * resabs);
  return {resk * h, err, resabs};
}

template <typename T>
struct Piece {
  double a, b;
  T value;
  double error;
  int depth;
};

template <typename T>
struct PieceCmp {
  bool operator()(const Piece<T>& x, const Piece<T>& y) const {
    return x.error < y.error;
  }
};

// Adaptive subdivision on a finite interval.
template <typename T>
void adaptive(const std::function<T(double)>& f, double a, double b,
              double abs_tol, double rel_tol, int max_depth, T& value,
              double& error) {
  auto first = gk15<T>(f, a, b);
  std::priority_queue<Piece<T>, std::vector<Piece<T>>, PieceCmp<T>> heap;
  heap.push({a, b, first.value, first.error, 0});
  T total = first.value;
  double err_total = first.error;
  auto tol = [&](void) {
    return std::max(abs_tol, rel_tol * std::abs(total));
  };
  while (err_total > tol()) {
    Piece<T> worst = heap.top();
    if (worst.depth >= max_depth) break;
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted
      worst.depth = max_depth;
      heap.push(worst);
      continue;
    }
    auto left = gk15<T>(f, worst.a, mid);
    auto right = gk15<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err_total += left.error + right.error - worst.error;
    heap.push({worst.a, mid, left.value, left.error, worst.depth + 1});
    heap.push({mid, worst.b, right.value, right.error, worst.depth + 1});
  }
  value = total;
  error = err_total;
}

// Aitken extrapolation of a sequence of partial sums approaching a limit
// with roughly geometric corrections (the margin-halving sequence).
template <typename T>
bool aitken_stable(const std::vector<T>& s, double tol, T& limit) {
  const size_t n = s.size();
  if (n < 3) return false;
  T d1 = s[n - 1] - s[n - 2];
  T d2 = s[n - 2] - s[n - 3];
  if (std::abs(d2) == 0.0) {
    limit = s[n - 1];
    return std::abs(d1) <= tol;
  }
  T r = d1 / d2;
  if (std::abs(r) < 0.99) {
    T corr = d1 * r / (1.0 - r);
    limit = s[n - 1] + corr;
    return std::abs(corr) <= tol && std::abs(d1) <= 8.0 * tol;
  }
  limit = s[n - 1];
  return std::abs(d1) <= tol;
}

template <typename T>
struct GenericResult {
  T value;
  double error;
  double cutoff;
};

template <typename T>
GenericResult<T> integrate_impl(const std::function<T(double)>& f, double a,
                                double b, const QuadratureSpec& spec) {
  if (!(a < b)) throw BadParams("integrate: requires a < b");

  const bool semi_infinite = std::isinf(b);

  // Collect breakpoints from excluded points lying inside the interval.
  std::vector<ExcludedPoint> excl;
  for (const auto& p : spec.excluded_points) {
    if (p.location > a && (semi_infinite || p.location < b) &&
        p.margin > 0.0) {
      excl.push_back(p);
    }
  }
  std::sort(excl.begin(), excl.end(),
            [](const ExcludedPoint& x, const ExcludedPoint& y) {
              return x.location < y.location;
            });

  auto segment = [&](double lo, double hi, double seg_abs_tol) -> GenericResult<T> {
    T v{};
    double e = 0.0;
    if (hi > lo)
      adaptive<T>(f, lo, hi, seg_abs_tol, spec.rel_tol, spec.max_depth, v, e);
    return {v, e, 0.0};
  };

  // One pass over [lo, hi] with given margins around the excluded points.
  auto pass = [&](double hi, double shrink) -> GenericResult<T> {
    T v{};
    double e = 0.0;
    double cursor = a;
    const double seg_tol = spec.abs_tol / (2.0 * (excl.size() + 1));
    for (const auto& p : excl) {
      const double m = p.margin * shrink;
      if (p.location - m > cursor && p.location < hi) {
        auto r = segment(cursor, p.location - m, seg_tol);
        v += r.value;
        e += r.error;
        cursor = std::min(hi, p.location + m);
      }
    }
    if (hi > cursor) {
      auto r = segment(cursor, hi, seg_tol);
      v += r.value;
      e += r.error;
    }
    return {v, e, hi};
  };

  auto with_exclusions = [&](double hi) -> GenericResult<T> {
    if (excl.empty()) return pass(hi, 1.0);
    std::vector<T> sums;
    double last_err = 0.0;
    T limit{};
    double shrink = 1.0;
    for (int it = 0; it < 40; ++it, shrink *= 0.5) {
      auto r = pass(hi, shrink);
      sums.push_back(r.value);
      last_err = r.error;
      if (aitken_stable<T>(sums, spec.abs_tol, limit))
        return {limit, std::max(last_err, spec.abs_tol), hi};
    }
    throw NonConvergence("integrate: excluded-point limit did not stabilize",
                         std::abs(sums.back()), std::abs(sums.back() - limit));
  };

  if (!semi_infinite) {
    auto r = with_exclusions(b);
    return {r.value, r.error, std::numeric_limits<double>::quiet_NaN()};
  }

  // Cutoff-doubling policy for b = +inf.
  double cut = std::max(spec.cutoff_start, a + 1.0);
  auto acc = with_exclusions(cut);
  for (int d = 0; d < spec.max_doublings; ++d) {
    const double next = cut * 2.0;
    T tail{};
    double tail_err = 0.0;
    adaptive<T>(f, cut, next, spec.abs_tol / 10.0, spec.rel_tol,
                spec.max_depth, tail, tail_err);
    acc.value += tail;
    acc.error += tail_err;
    cut = next;
    if (std::abs(tail) < spec.abs_tol / 10.0)
      return {acc.value, acc.error, cut};
  }
  throw NonConvergence("integrate: semi-infinite tail did not converge",
                       std::abs(acc.value), acc.error);
}

}  // namespace

IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureSpec& spec) {
  auto r = integrate_impl<double>(f, a, b, spec);
  return {r.value, r.error, r.cutoff};
}

IntegralResultC integrate(const std::function<cplx(double)>& f, double a,
                          double b, const QuadratureSpec& spec) {
  auto r = integrate_impl<cplx>(f, a, b, spec);
  return {r.value, r.error, r.cutoff};
}

IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b, double abs_tol,
                                  double rel_tol, int max_depth) {
  double v = 0.0, e = 0.0;
  adaptive<double>(f, a, b, abs_tol, rel_tol, max_depth, v, e);
  return {v, e, std::numeric_limits<double>::quiet_NaN()};
}

GaussLegendre::GaussLegendre(int n) {
  nodes_.resize(n);
  weights_.resize(n);
  // Newton iteration on P_n; standard construction.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
}

void GaussLegendre::map(double a, double b, std::vector<double>& xs,
                        std::vector<double>& ws) const {
  const int n = order();
  xs.resize(n);
  ws.resize(n);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    xs[i] = c + h * nodes_[i];
    ws[i] = h * weights_[i];
  }
}

}  // namespace eigc
