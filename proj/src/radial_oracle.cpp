#include "plap/radial_oracle.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "plap/numerics.hpp"

namespace plap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using State = std::array<double, 2>;  // (u, v), v the radial flux

double sign_pow(double w, double e) {
  if (w == 0.0) return 0.0;
  return w > 0.0 ? std::pow(w, e) : -std::pow(-w, e);
}

struct RadialSystem {
  const PSetting& ps;
  const RadialRhs& rhs;
  double lambda;

  void operator()(const State& y, State& dydr, double r) const {
    const double rn = std::pow(r, ps.dim - 1);
    const double w = y[1] / rn;
    dydr[0] = sign_pow(w, 1.0 / ps.pm1());
    dydr[1] = -lambda * rn * std::pow(r, rhs.weight_alpha) * rhs.g(y[0]);
  }
};

struct SeriesStart {
  double r0;
  State y0;
};

// Two-term series u = u0 - c1 r^kappa near the origin; the truncation error
// is O(r^(2 kappa)) so r0 is picked to keep it at round-off size. r0 is also
// floored so r^(N-1) cannot underflow during the first steps.
SeriesStart series_start(const PSetting& ps, const RadialRhs& rhs,
                         double lambda, double u0, double r_scale) {
  const double a = rhs.weight_alpha;
  const double kappa = (a + ps.p) / ps.pm1();
  const double g0 = rhs.g(u0);
  const double gp0 = rhs.g_prime(u0);
  const double c1 = (ps.pm1() / (a + ps.p)) *
                    std::pow(lambda * g0 / (ps.dim + a), 1.0 / ps.pm1());
  double r0 = 1e-6 * r_scale;
  if (c1 > 0.0) {
    const double r_series =
        std::pow(1e-9 * std::max(u0, 1.0) / c1, 1.0 / kappa);
    r0 = std::min(r0, r_series);
  }
  r0 = std::max(r0, std::pow(10.0, -250.0 / std::max(ps.dim - 1, 1)));
  r0 = std::min(r0, 0.5 * r_scale);

  SeriesStart s;
  s.r0 = r0;
  s.y0[0] = u0 - c1 * std::pow(r0, kappa);
  // v(r0) = -lambda r0^(N+a) [ g0/(N+a) - g'(u0) c1 r0^kappa/(N+a+kappa) ];
  // multiplications interleaved so r0^(N+a) cannot underflow before the
  // magnitude of g0 is folded in.
  const double half = std::pow(r0, 0.5 * (ps.dim + a));
  const double bracket =
      g0 / (ps.dim + a) - gp0 * c1 * std::pow(r0, kappa) / (ps.dim + a + kappa);
  s.y0[1] = -lambda * half * (half * bracket);
  return s;
}

double du_from_state(const PSetting& ps, const State& y, double r) {
  const double w = y[1] / std::pow(r, ps.dim - 1);
  return sign_pow(w, 1.0 / ps.pm1());
}

}  // namespace

double RadialSolution::interpolate(double r) const {
  if (samples.size() < 2)
    throw std::logic_error("RadialSolution::interpolate: no samples stored");
  if (r <= samples.front().r) return samples.front().u;
  if (r >= samples.back().r) return samples.back().u;
  auto it = std::upper_bound(
      samples.begin(), samples.end(), r,
      [](double x, const RadialSample& s) { return x < s.r; });
  const RadialSample& b = *it;
  const RadialSample& a = *(it - 1);
  const double h = b.r - a.r;
  const double t = (r - a.r) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * a.u + (t3 - 2 * t2 + t) * h * a.du +
         (-2 * t3 + 3 * t2) * b.u + (t3 - t2) * h * b.du;
}

RadialRhs RadialRhs::torsion(double weight_alpha) {
  RadialRhs rhs;
  rhs.g = [](double) { return 1.0; };
  rhs.g_prime = [](double) { return 0.0; };
  rhs.weight_alpha = weight_alpha;
  return rhs;
}

RadialRhs RadialRhs::from_nonlinearity(const Nonlinearity& nl) {
  RadialRhs rhs;
  const double a_f = nl.domain_end();
  const double cap = std::isfinite(a_f) ? a_f * (1.0 - 1e-12) : kInf;
  // Trial stage values may poke slightly outside [0, a_f); clamp them.
  rhs.g = [nl, cap](double u) {
    return nl.value(std::clamp(u, 0.0, cap));
  };
  rhs.g_prime = [nl, cap](double u) {
    return nl.derivative(std::clamp(u, 0.0, cap));
  };
  rhs.domain_end = a_f;
  return rhs;
}

RadialRhs RadialRhs::eigenmode(const PSetting& ps) {
  RadialRhs rhs;
  const double e = ps.p - 2.0;
  rhs.g = [e](double u) { return sign_pow(u, e + 1.0); };
  rhs.g_prime = [e, p = ps.p](double u) {
    return u == 0.0 ? 0.0 : (p - 1.0) * std::pow(std::abs(u), e);
  };
  return rhs;
}

RadialSolution shoot(const PSetting& ps, const RadialRhs& rhs, double lambda,
                     double u0, double R, const ShootOptions& opts) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("shoot: requires lambda >= 0");
  if (!(u0 > 0.0) || u0 >= rhs.domain_end)
    throw std::invalid_argument("shoot: requires 0 < u0 < a_f");
  if (!(R > 0.0)) throw std::invalid_argument("shoot: requires R > 0");

  RadialSolution sol;
  sol.lambda = lambda;
  sol.u0 = u0;

  std::vector<double> wanted;
  if (opts.n_samples > 1) {
    wanted.resize(opts.n_samples);
    for (int i = 0; i < opts.n_samples; ++i)
      wanted[i] = R * i / (opts.n_samples - 1);
  } else {
    wanted = {0.0, R};
  }
  size_t next = 0;
  auto emit = [&](double r, double u, double du) {
    sol.samples.push_back({r, u, du});
  };

  if (lambda == 0.0 || rhs.g(u0) == 0.0) {
    for (double r : wanted) emit(r, u0, 0.0);
    sol.boundary_residual = u0;
    sol.converged = std::abs(u0) <= 1e-9 * std::max(1.0, u0);
    return sol;
  }

  const SeriesStart start = series_start(ps, rhs, lambda, u0, R);
  const double kappa = (rhs.weight_alpha + ps.p) / ps.pm1();
  const double c1 = (u0 - start.y0[0]) / std::pow(start.r0, kappa);
  // Samples inside the series region come from the series itself.
  while (next < wanted.size() && wanted[next] <= start.r0) {
    const double r = wanted[next++];
    const double u = u0 - c1 * std::pow(r, kappa);
    const double du =
        r == 0.0 ? 0.0 : -c1 * kappa * std::pow(r, kappa - 1.0);
    emit(r, u, du);
  }

  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_dense_output(
      opts.abs_tol, opts.rel_tol, ode::runge_kutta_dopri5<State>());
  RadialSystem sys{ps, rhs, lambda};
  stepper.initialize(start.y0, start.r0, 0.5 * start.r0);

  const double a_f = rhs.domain_end;
  State y_at;
  const auto u_at = [&](double r) {
    stepper.calc_state(r, y_at);
    return y_at[0];
  };

  double r_prev = start.r0;
  double u_prev = start.y0[0];
  for (;;) {
    stepper.do_step(sys);
    double r_cur = stepper.current_time();
    const bool past_end = r_cur >= R;
    const double r_stop = std::min(r_cur, R);
    const double u_stop = past_end ? u_at(R) : stepper.current_state()[0];

    // Exit through zero inside (r_prev, r_stop]?
    double r_exit = -1.0;
    ShootStatus exit_kind = ShootStatus::ExitedLow;
    if (opts.stop_at_zero && u_prev > 0.0 && u_stop <= 0.0) {
      r_exit = u_stop == 0.0
                   ? r_stop
                   : num::find_root(u_at, r_prev, r_stop, 1e-14);
    } else if (std::isfinite(a_f) && u_stop >= a_f) {
      exit_kind = ShootStatus::ExitedHigh;
      r_exit = num::find_root([&](double r) { return u_at(r) - a_f; }, r_prev,
                              r_stop, 1e-14);
    }

    const double r_take = r_exit >= 0.0 ? r_exit : r_stop;
    while (next < wanted.size() && wanted[next] <= r_take) {
      const double r = wanted[next++];
      stepper.calc_state(r, y_at);
      emit(r, y_at[0], du_from_state(ps, y_at, r));
    }

    if (r_exit >= 0.0) {
      sol.status = exit_kind;
      sol.exit_radius = r_exit;
      if (std::abs(R - r_exit) <= 1e-9 * R &&
          exit_kind == ShootStatus::ExitedLow) {
        // Hit zero at the boundary itself: that is a converged profile.
        // Requested radii beyond the crossing collapse onto it.
        sol.status = ShootStatus::ReachedBoundary;
        sol.boundary_residual = 0.0;
        sol.converged = true;
        while (next < wanted.size()) {
          const double r = std::min(wanted[next++], r_exit);
          stepper.calc_state(r, y_at);
          emit(wanted[next - 1], y_at[0], du_from_state(ps, y_at, r));
        }
      }
      return sol;
    }
    if (past_end) {
      stepper.calc_state(R, y_at);
      if (wanted.back() == R &&
          (sol.samples.empty() || sol.samples.back().r < R))
        emit(R, y_at[0], du_from_state(ps, y_at, R));
      sol.boundary_residual = y_at[0];
      sol.converged =
          std::abs(sol.boundary_residual) <= 1e-9 * std::max(1.0, u0);
      return sol;
    }
    r_prev = r_cur;
    u_prev = stepper.current_state()[0];
  }
}

namespace {

// Radius at which the lambda = 1 profile first vanishes. The comparison
// v <= -g(0) r^(N+alpha) / (N+alpha) forces a zero, so the cap below always
// suffices.
double first_zero_radius(const PSetting& ps, const RadialRhs& rhs, double u0) {
  const double g0 = rhs.g(0.0);
  const double a = rhs.weight_alpha;
  double cap;
  if (g0 > 0.0) {
    const double e = (a + ps.p) / ps.pm1();
    cap = 1.5 * std::pow(u0 * e *
                             std::pow((ps.dim + a) / g0, 1.0 / ps.pm1()),
                         1.0 / e);
  } else {
    cap = 32.0;  // eigenmode-style right sides: expand below
  }
  for (int tries = 0; tries < 12; ++tries) {
    ShootOptions opts;
    opts.rel_tol = 1e-12;
    opts.abs_tol = 1e-16;
    RadialSolution sol = shoot(ps, rhs, 1.0, u0, cap, opts);
    if (sol.status == ShootStatus::ExitedLow ||
        (sol.status == ShootStatus::ReachedBoundary && sol.converged))
      return sol.status == ShootStatus::ExitedLow ? sol.exit_radius : cap;
    cap *= 4.0;
  }
  throw NoSolutionAtThisHeight(
      "profile does not reach zero within the search radius");
}

double lambda_of_u0_rhs(const PSetting& ps, const RadialRhs& rhs, double u0,
                        double R, double rel_tol) {
  // Homogeneity: the lambda = 1 profile vanishing at r* rescales to the
  // boundary at R with lambda = (r*/R)^(p+alpha).
  const double r_star = first_zero_radius(ps, rhs, u0);
  const double lam_hat = std::pow(r_star / R, ps.p + rhs.weight_alpha);

  const auto merit = [&](double lam) {
    RadialSolution sol = shoot(ps, rhs, lam, u0, R);
    if (sol.status == ShootStatus::ExitedLow) return -(R - sol.exit_radius);
    return sol.boundary_residual;
  };
  double lo = lam_hat * (1.0 - 4e-3), hi = lam_hat * (1.0 + 4e-3);
  double f_lo = merit(lo), f_hi = merit(hi);
  int guard = 0;
  while (f_lo <= 0.0 && guard++ < 60) {
    lo *= 0.75;
    f_lo = merit(lo);
  }
  guard = 0;
  while (f_hi >= 0.0 && guard++ < 60) {
    hi *= 1.25;
    f_hi = merit(hi);
  }
  if (f_lo <= 0.0 || f_hi >= 0.0)
    throw NoSolutionAtThisHeight("no bracket for lambda(u0)");
  return num::find_root(merit, lo, hi, rel_tol);
}

}  // namespace

double lambda_of_u0(const PSetting& ps, const Nonlinearity& nl, double u0,
                    double R, double rel_tol, double weight_alpha) {
  RadialRhs rhs = RadialRhs::from_nonlinearity(nl);
  rhs.weight_alpha = weight_alpha;
  return lambda_of_u0_rhs(ps, rhs, u0, R, rel_tol);
}

BifurcationCurve lambda_star_numeric(const PSetting& ps,
                                     const Nonlinearity& nl, double R,
                                     double rel_tol, double weight_alpha) {
  if (!nl.positive_at_zero())
    throw std::invalid_argument("lambda_star_numeric: requires f(0) > 0");
  BifurcationCurve curve;

  std::vector<double> grid;
  const double a_f = nl.domain_end();
  if (std::isfinite(a_f)) {
    // Cluster toward the singular endpoint: u0 = a_f (1 - 10^-x).
    const int n = 56;
    for (int i = 0; i < n; ++i) {
      const double x = 0.02 + (6.2 - 0.02) * i / (n - 1);
      grid.push_back(a_f * (1.0 - std::pow(10.0, -x)));
    }
  } else {
    double hi = nl.kind() == FKind::Exp ? 36.0 * std::max(1.0, ps.pm1())
                                        : 1e6;
    if (nl.kind() == FKind::Custom) hi = 3e4;
    const double lo = 1e-3;
    const int per_decade = 10;
    const int n = std::max(
        24, int(std::log10(hi / lo) * per_decade) + 1);
    for (int i = 0; i < n; ++i)
      grid.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  }

  double lam_tail_gap = kInf;
  for (int pass = 0; pass < 3; ++pass) {
    curve.points.clear();
    for (double u0 : grid) {
      try {
        curve.points.emplace_back(
            u0, lambda_of_u0(ps, nl, u0, R, 1e-10, weight_alpha));
      } catch (const NoSolutionAtThisHeight&) {
        // Height unreachable: skip the node, the sweep continues.
      }
    }
    if (curve.points.empty())
      throw num::NumericError("lambda_star_numeric: empty bifurcation curve");

    size_t best = 0;
    for (size_t i = 1; i < curve.points.size(); ++i)
      if (curve.points[i].second > curve.points[best].second) best = i;

    const bool at_top = best + 1 == curve.points.size();
    if (!at_top || std::isfinite(a_f)) {
      // Interior maximum: golden refinement between the neighbours.
      const double u_lo = curve.points[best > 0 ? best - 1 : 0].first;
      const double u_hi =
          curve.points[std::min(best + 1, curve.points.size() - 1)].first;
      const auto lam_of = [&](double x) {
        return lambda_of_u0(ps, nl, std::exp(x), R, 1e-10, weight_alpha);
      };
      const auto ext = num::golden_max(
          lam_of, std::log(u_lo), std::log(u_hi),
          std::max(1e-6, 0.02 * std::sqrt(rel_tol)));
      curve.lambda_star = std::max(ext.value, curve.points[best].second);
      curve.turning_u0 = std::exp(ext.arg);
      curve.converged = true;
      return curve;
    }

    // Maximum at the top of the grid: saturating tail or unbounded growth.
    const double lam_end = curve.points.back().second;
    const double lam_prev = curve.points[curve.points.size() - 2].second;
    lam_tail_gap = lam_end - lam_prev;
    if (lam_tail_gap <= 0.25 * rel_tol * lam_end) {
      curve.lambda_star = lam_end;
      curve.turning_u0 = curve.points.back().first;
      curve.converged = true;
      return curve;
    }
    // Still rising: extend the grid and retry.
    const double top = grid.back();
    for (int i = 1; i <= 20; ++i)
      grid.push_back(top * std::pow(10.0, 0.1 * i));
  }

  // Ran out of extensions with the curve still rising.
  curve.lambda_star = curve.points.back().second;
  curve.turning_u0 = curve.points.back().first;
  curve.unbounded = true;
  curve.converged = false;
  return curve;
}

double lambda1_numeric(const PSetting& ps, double R, double rel_tol) {
  if (!(R > 0.0))
    throw std::invalid_argument("lambda1_numeric: requires R > 0");
  const RadialRhs rhs = RadialRhs::eigenmode(ps);
  ShootOptions opts;
  opts.rel_tol = std::min(1e-12, rel_tol * 1e-3);
  opts.abs_tol = 1e-16;
  double cap = 4.0 * R * std::pow(double(ps.dim), 1.0 / ps.p);
  for (int tries = 0; tries < 20; ++tries) {
    RadialSolution sol = shoot(ps, rhs, 1.0, 1.0, cap, opts);
    if (sol.status == ShootStatus::ExitedLow)
      return std::pow(sol.exit_radius / R, ps.p);
    cap *= 2.0;
  }
  throw num::NumericError("lambda1_numeric: eigenmode has no zero in range");
}

RadialSolution minimal_solution(const PSetting& ps, const Nonlinearity& nl,
                                double lambda, double R, int n_samples) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("minimal_solution: requires lambda > 0");
  // lambda(u0) is increasing along the minimal branch; bracket the height
  // between 0 and the first local maximum of the curve.
  double u_hi = std::isfinite(nl.domain_end()) ? 0.5 * nl.domain_end() : 1.0;
  double u_lo = 1e-8;
  int guard = 0;
  while (lambda_of_u0(ps, nl, u_hi, R) < lambda) {
    u_lo = u_hi;
    if (std::isfinite(nl.domain_end()))
      u_hi = 0.5 * (u_hi + nl.domain_end());
    else
      u_hi *= 2.0;
    if (++guard > 60)
      throw NoSolutionAtThisHeight(
          "minimal_solution: lambda above the maximum of the branch");
  }
  const double u0 = num::find_root(
      [&](double u) { return lambda_of_u0(ps, nl, u, R) - lambda; }, u_lo,
      u_hi, 1e-10);
  ShootOptions opts;
  opts.n_samples = n_samples;
  opts.stop_at_zero = false;
  return shoot(ps, RadialRhs::from_nonlinearity(nl), lambda, u0, R, opts);
}

namespace {

double phi_p(double x, double p) { return sign_pow(x, p - 1.0); }

// -Delta_p h at radius r by central differences on the radial form.
double minus_delta_p_fd(const std::function<double(double)>& h,
                        const PSetting& ps, double r, double delta) {
  const auto dh = [&](double x) {
    return (h(x + 0.5 * delta) - h(x - 0.5 * delta)) / delta;
  };
  const auto flux = [&](double x) {
    return std::pow(x, ps.dim - 1) * phi_p(dh(x), ps.p);
  };
  return -(flux(r + 0.5 * delta) - flux(r - 0.5 * delta)) / delta /
         std::pow(r, ps.dim - 1);
}

}  // namespace

KatoReport kato_inequality_check(const PSetting& ps, const Nonlinearity& nl,
                                 const std::function<double(double)>& profile,
                                 double R, int n_points, double slack) {
  KatoReport report;
  report.slack = slack;
  const double delta = 1e-3 * R;
  const auto F_of_u = [&](double r) { return big_F(nl, ps, profile(r)); };
  double worst = -kInf;
  // The band r < 0.05 R is excluded: the flux stencil degenerates there.
  for (int i = 0; i < n_points; ++i) {
    const double r = R * (0.05 + 0.90 * i / (n_points - 1));
    const double lhs = minus_delta_p_fd(F_of_u, ps, r, delta);
    const double raw = minus_delta_p_fd(profile, ps, r, delta);
    const double rhs = raw / nl.value(profile(r));  // F'(u)^(p-1) = 1/f(u)
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    worst = std::max(worst, (rhs - lhs) / scale);
    ++report.points;
  }
  report.max_violation = worst;
  report.passed = worst <= slack;
  return report;
}

KatoReport kato_inequality_check(const PSetting& ps, const Nonlinearity& nl,
                                 const RadialSolution& profile, double R,
                                 int n_points, double slack) {
  return kato_inequality_check(
      ps, nl, [&profile](double r) { return profile.interpolate(r); }, R,
      n_points, slack);
}

}  // namespace plap
