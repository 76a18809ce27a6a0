#pragma once

#include <functional>
#include <stdexcept>

// Small numerical toolbox shared by the bound and oracle modules:
// adaptive quadrature, 1-d maximization, bracketed root finding.

namespace plap::num {

using Fn = std::function<double(double)>;

// Thrown when an iterative scheme fails to reach its tolerance.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod integral of f over [a, b].
double integrate(const Fn& f, double a, double b, double rel_tol = 1e-10,
                 double abs_floor = 1e-14);

// Improper integral of a nonnegative integrand over [a, inf), summed over
// dyadic segments with a geometric tail estimate. Returns +inf when the
// segment contributions fail to decay.
double integrate_to_infinity(const Fn& f, double a, double rel_tol = 1e-10);

struct Extremum {
  double arg = 0.0;
  double value = 0.0;
};

// Maximum of f on [lo, hi]: coarse scan followed by Brent refinement around
// the best node. Endpoints are included as candidates.
Extremum maximize(const Fn& f, double lo, double hi, int scan_points = 129,
                  double arg_rel_tol = 1e-10);

// Maximum of f(t) for t in (0, t_hi_start..), scanning on the log axis and
// expanding the right edge while the maximum sits there. Sets `unbounded`
// when the function is still rising at the expansion cap.
struct LogAxisMax {
  Extremum best;
  bool unbounded = false;
};
LogAxisMax maximize_log_axis(const Fn& f, double t_lo = 1e-18,
                             double t_hi = 1e6, double t_cap = 1e60,
                             int scan_points_per_decade = 8);

// Root of f in [lo, hi] (f(lo), f(hi) of opposite sign) via TOMS 748.
double find_root(const Fn& f, double lo, double hi, double rel_tol = 1e-12);

// Golden-section maximization of a unimodal f on [lo, hi].
Extremum golden_max(const Fn& f, double lo, double hi,
                    double arg_tol_abs = 1e-12);

}  // namespace plap::num
