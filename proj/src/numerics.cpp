#include "plap/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace plap::num {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double integrate(const Fn& f, double a, double b, double rel_tol,
                 double abs_floor) {
  if (a == b) return 0.0;
  double error = 0.0;
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  double value = GK::integrate(f, a, b, 22, rel_tol, &error);
  if (!std::isfinite(value))
    throw NumericError("quadrature produced a non-finite value");
  // rel_tol is the subdivision target; reject only clear failures. The
  // returned estimate is conservative for cliff-shaped integrands and is
  // floored at ~2^-28 for tiny-valued ones, so both gates are needed.
  if (error > 1e-6 * std::max(std::abs(value), abs_floor) && error > 1e-8)
    throw NumericError("quadrature failed to converge");
  return value;
}

double integrate_to_infinity(const Fn& f, double a, double rel_tol) {
  // Dyadic segments [a, a+1], [a+1, a+2], [a+2, a+4], ...
  double total = integrate(f, a, a + 1.0, rel_tol);
  double left = a + 1.0;
  double width = 1.0;
  double prev_seg = kInf;
  int flat_count = 0;
  for (int k = 0; k < 1000; ++k) {
    const double right = left + width;
    const double seg = integrate(f, left, right, rel_tol);
    total += seg;
    const double ratio = (prev_seg > 0.0) ? seg / prev_seg : 0.0;
    if (seg <= rel_tol * std::max(total, 1e-300)) {
      if (ratio < 1.0 && ratio > 0.0)
        total += seg * ratio / (1.0 - ratio);  // geometric tail
      return total;
    }
    if (ratio >= 0.98) {
      if (++flat_count >= 3) return kInf;  // not decaying: divergent
    } else {
      flat_count = 0;
    }
    if (total > 1e100) return kInf;
    prev_seg = seg;
    left = right;
    width *= 2.0;
    if (left > 1e300) {
      // Integrand still contributing at the cap: assume geometric decay if
      // the ratio says so, otherwise report divergence.
      if (ratio < 1.0 && ratio > 0.0) return total + seg * ratio / (1.0 - ratio);
      return kInf;
    }
  }
  return kInf;
}

Extremum maximize(const Fn& f, double lo, double hi, int scan_points,
                  double arg_rel_tol) {
  if (!(hi > lo)) throw std::invalid_argument("maximize: empty interval");
  scan_points = std::max(scan_points, 5);
  std::vector<double> xs(scan_points), vs(scan_points);
  for (int i = 0; i < scan_points; ++i) {
    xs[i] = lo + (hi - lo) * i / (scan_points - 1);
    vs[i] = f(xs[i]);
  }
  int best = int(std::max_element(vs.begin(), vs.end()) - vs.begin());
  Extremum out{xs[best], vs[best]};
  const int a = std::max(best - 1, 0);
  const int b = std::min(best + 1, scan_points - 1);
  if (b > a) {
    const auto neg = [&f](double x) { return -f(x); };
    // Brent needs ~half the significand; more digits are wasted effort.
    int bits = std::min(52, int(-std::log2(std::max(arg_rel_tol, 1e-15))));
    std::uintmax_t iters = 200;
    auto r = boost::math::tools::brent_find_minima(neg, xs[a], xs[b], bits,
                                                   iters);
    if (-r.second > out.value) out = {r.first, -r.second};
  }
  return out;
}

LogAxisMax maximize_log_axis(const Fn& f, double t_lo, double t_hi,
                             double t_cap, int scan_points_per_decade) {
  LogAxisMax out;
  const auto g = [&f](double x) { return f(std::exp(x)); };
  double x_lo = std::log(t_lo), x_hi = std::log(t_hi);
  const double x_cap = std::log(t_cap);
  for (;;) {
    const int n =
        std::max(33, int((x_hi - x_lo) / std::log(10.0) *
                         scan_points_per_decade));
    Extremum e = maximize(g, x_lo, x_hi, n);
    // If the max presses against the right edge, expand and retry.
    if (e.arg > x_hi - 2.0 * (x_hi - x_lo) / n && x_hi < x_cap) {
      x_hi = std::min(x_hi + 0.5 * (x_hi - x_lo) + 5.0, x_cap);
      continue;
    }
    out.best = {std::exp(e.arg), e.value};
    if (e.arg >= x_cap - 1.0) {
      // The max sits at the expansion cap: a flat tail means the sup is a
      // finite limit, continued growth means it is unbounded.
      const double back = g(x_cap - 5.0);
      out.unbounded = !(e.value <= back * (1.0 + 1e-9) + 1e-300);
    }
    return out;
  }
}

double find_root(const Fn& f, double lo, double hi, double rel_tol) {
  const double f_lo = f(lo), f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0))
    throw NumericError("find_root: endpoints do not bracket a root");
  auto tol = [rel_tol](double a, double b) {
    return std::abs(b - a) <=
           rel_tol * std::max({std::abs(a), std::abs(b), 1e-300});
  };
  std::uintmax_t iters = 200;
  auto r = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iters);
  return 0.5 * (r.first + r.second);
}

Extremum golden_max(const Fn& f, double lo, double hi, double arg_tol_abs) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > arg_tol_abs) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  if (fm >= f1 && fm >= f2) return {xm, fm};
  return f1 > f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

}  // namespace plap::num
