#include "plap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "plap/numerics.hpp"

namespace plap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double conj_pow(const PSetting& ps) {
  return std::pow(ps.conj(), ps.pm1());  // (p/(p-1))^(p-1)
}

// Central radius scaling: lambda*(B_R) = R^(-p) lambda*(B_1).
double ball_scale(const PSetting& ps, const DomainGeometry& geom) {
  return std::pow(geom.ball_shape().radius, -ps.p);
}

void require_subsolution(const Nonlinearity& nl) {
  if (!nl.positive_at_zero())
    throw std::invalid_argument(
        "lower bound requires f(0) > 0 (zero is the subsolution)");
}

// sup over alpha in (0, ||F||_inf) of gamma(alpha). Golden-section with
// multi-start seeds, an interior critical point for the built-ins, and the
// boundary limit alpha -> ||F||_inf as explicit candidates; gamma need not
// be unimodal for custom f.
double sup_gamma(const Nonlinearity& nl, const PSetting& ps) {
  const double norm = F_infinity_norm(nl, ps);
  const auto gamma = [&](double a) { return gamma_ball(nl, ps, a); };

  double hi;
  if (std::isfinite(norm)) {
    hi = norm;
  } else {
    // Expand until gamma stops increasing; superlinear f forces a decay.
    hi = 1.0;
    while (hi < 1e9 && gamma(2.0 * hi) > gamma(hi)) hi *= 2.0;
    hi *= 4.0;
  }

  double best = 0.0;
  const double eps = 1e-9 * hi;
  // Multi-start golden sections against non-unimodal gamma.
  const double seeds[] = {0.0, 0.2, 0.4, 0.6, 0.8};
  for (double s : seeds) {
    const double lo = std::max(eps, s * hi);
    const double up = std::min(hi - eps, (s + 0.2) * hi);
    if (up <= lo) continue;
    best = std::max(best, num::golden_max(gamma, lo, up, 1e-11 * hi).value);
  }
  if (std::isfinite(norm)) {
    if (nl.kind() != FKind::Custom) {
      // Closed-form kernel: interior optimum of alpha^(p-1) - c alpha^p and
      // the exact boundary value.
      const double k = (nl.kind() == FKind::Exp) ? 1.0 : nl.power();
      const double a_star = ps.pm1() * ps.pm1() * ps.dim / (ps.p * ps.p * k);
      if (a_star < norm) best = std::max(best, gamma(a_star));
      best = std::max(best, gamma(norm));
    } else {
      best = std::max(best, gamma(norm * (1.0 - 1e-11)));
    }
  }
  return best;
}

int pick_branch(double N, double thr1, double thr2) {
  if (N <= thr1) return 1;
  if (N <= thr2) return 2;
  return 3;
}

}  // namespace

double upper_torsion(const Nonlinearity& nl, const PSetting& ps,
                     const DomainGeometry& geom) {
  const double norm = F_infinity_norm(nl, ps);
  if (!std::isfinite(norm)) return kInf;
  const TorsionEstimate est = torsion_max_estimate(geom, ps);
  return std::pow(norm / est.lower, ps.pm1());
}

UpperEigenResult upper_eigen(const Nonlinearity& nl, const PSetting& ps,
                             double lambda1, bool lambda1_certified) {
  if (!(lambda1 > 0.0))
    throw std::invalid_argument("upper_eigen: requires lambda1 > 0");
  const double a = alpha_fp(nl, ps);
  if (!std::isfinite(a))
    throw std::invalid_argument(
        "upper_eigen: sup t^(p-1)/f(t) unbounded (f not superlinear)");
  UpperEigenResult out;
  out.improved = {"upper (eigenvalue comparison)", BoundKind::Upper,
                  lambda1 * a, "lambda_1 * sup t^(p-1)/f(t)",
                  lambda1_certified};
  out.classic = {"upper (classical eigenvalue comparison)", BoundKind::Upper,
                 std::max(lambda1, lambda1 * a),
                 "max{lambda_1, lambda_1 sup t^(p-1)/f(t)}",
                 lambda1_certified};
  return out;
}

double gamma_ball(const Nonlinearity& nl, const PSetting& ps, double alpha) {
  const double k = sup_kernel(nl, ps, alpha);
  return std::pow(alpha, ps.pm1()) *
         (1.0 - ps.p / (ps.pm1() * ps.dim) * k);
}

double lower_ball(const Nonlinearity& nl, const PSetting& ps) {
  require_subsolution(nl);
  const double cp = conj_pow(ps);
  const double term1 = ps.dim * cp * alpha_fp(nl, ps);
  const double term2 = cp * ps.dim * sup_gamma(nl, ps);
  return std::max(term1, term2);
}

double lower_general(const Nonlinearity& nl, const PSetting& ps,
                     const DomainGeometry& geom) {
  require_subsolution(nl);
  const double a = alpha_fp(nl, ps);
  if (geom.is_ball()) {
    // Exact torsion maximum: 1/psi_M^(p-1) = (p/(p-1))^(p-1) N R^(-p).
    return conj_pow(ps) * ps.dim * a * ball_scale(ps, geom);
  }
  const auto& m = geom.measured_shape();
  const double diam_term =
      conj_pow(ps) * std::pow(2.0 / m.diameter, ps.p) * ps.dim * a;
  const TorsionEstimate est = torsion_max_estimate(geom, ps);
  const double torsion_term = a / std::pow(est.upper, ps.pm1());
  return std::max(diam_term, torsion_term);
}

ClosedFormBounds closed_form_exp(const PSetting& ps) {
  const double p = ps.p, N = ps.dim, pm1 = ps.pm1();
  ClosedFormBounds out;
  const double thr1 =
      std::pow(p, (2.0 * p - 1.0) / pm1) / (std::exp(1.0) * pm1);
  const double thr2 = p * p / pm1;
  out.branch = pick_branch(N, thr1, thr2);
  switch (out.branch) {
    case 1:
      out.lower = std::pow(p / std::exp(1.0), pm1) * N;
      break;
    case 2:
      out.lower = std::pow(pm1 / p, pm1) * std::pow(N, p) / p;
      break;
    default:
      out.lower = std::pow(p, pm1) * (N - p);
  }
  out.upper = N * std::pow(p, pm1);
  return out;
}

ClosedFormBounds closed_form_gelfand(const PSetting& ps, double m) {
  const double p = ps.p, N = ps.dim, pm1 = ps.pm1();
  if (!(m > pm1))
    throw std::invalid_argument("closed_form_gelfand: requires m > p-1");
  const double s = m + 1.0 - p;
  ClosedFormBounds out;
  const double thr1 = std::pow(p, (2.0 * p - 1.0) / pm1) / pm1 *
                      std::pow(s / m, s / pm1);
  const double thr2 = m * p * p / (pm1 * s);
  out.branch = pick_branch(N, thr1, thr2);
  switch (out.branch) {
    case 1:
      out.lower = N * std::pow(m, -m) * std::pow(p, pm1) * std::pow(s, s);
      break;
    case 2:
      out.lower = std::pow(pm1 / m, pm1) * std::pow(N / p, p);
      break;
    default:
      out.lower = std::pow(p / s, pm1) * (m * (N - p) - N * pm1) / s;
  }
  out.upper = std::pow(p / s, pm1) * N;
  return out;
}

ClosedFormBounds closed_form_mems(const PSetting& ps, double m) {
  const double p = ps.p, N = ps.dim, pm1 = ps.pm1();
  if (!(m > 0.0))
    throw std::invalid_argument("closed_form_mems: requires m > 0");
  const double s = m + p - 1.0;
  ClosedFormBounds out;
  out.within_hypothesis = (m > pm1);
  const double thr1 = std::pow(p, (2.0 * p - 1.0) / pm1) / pm1 *
                      std::pow(m / s, s / pm1);
  const double thr2 = m * p * p / (pm1 * s);
  out.branch = pick_branch(N, thr1, thr2);
  switch (out.branch) {
    case 1:
      out.lower = N * std::pow(m, m) * std::pow(p, pm1) * std::pow(s, -s);
      break;
    case 2:
      out.lower = std::pow(pm1 / m, pm1) * std::pow(N / p, p);
      break;
    default:
      // Boundary value of the gamma optimization; also the parameter of the
      // singular profile 1 - |x|^(p/(m+p-1)).
      out.lower = std::pow(p / s, pm1) * (N * s - m * p) / s;
  }
  out.upper = std::pow(p / s, pm1) * N;
  return out;
}

Nonlinearity compose_power(const Nonlinearity& nl, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("compose_power: requires q >= 1");
  const double a_f = nl.domain_end();
  const double a_g = std::isfinite(a_f) ? std::pow(a_f, 1.0 / q) : kInf;
  // Capture by value: the composition must outlive the argument.
  auto f = [nl, q](double u) { return nl.value(std::pow(u, q)); };
  auto fp = [nl, q](double u) {
    if (u <= 0.0) return q == 1.0 ? nl.derivative(0.0) : 0.0;
    return q * std::pow(u, q - 1.0) * nl.derivative(std::pow(u, q));
  };
  std::ostringstream label;
  label << nl.spec_string() << " of u^" << q;
  return Nonlinearity::custom(std::move(f), std::move(fp), a_g, label.str());
}

std::vector<QLimitRow> q_limit_study(const Nonlinearity& nl,
                                     const PSetting& ps,
                                     const std::vector<double>& q_list) {
  if (std::abs(nl.value(0.0) - 1.0) > 1e-12)
    throw std::invalid_argument("q_limit_study: requires f(0) = 1");
  const DomainGeometry unit_ball = DomainGeometry::ball(1.0, ps.dim);
  std::vector<QLimitRow> rows;
  rows.reserve(q_list.size());
  for (double q : q_list) {
    const Nonlinearity g = compose_power(nl, q);
    QLimitRow row;
    row.q = q;
    row.lower = lower_ball(g, ps);
    row.upper = upper_torsion(g, ps, unit_ball);
    rows.push_back(row);
  }
  return rows;
}

BoundReport make_bound_report(const Nonlinearity& nl, const PSetting& ps,
                              const DomainGeometry& geom, double lambda1,
                              bool lambda1_certified) {
  BoundReport report;
  if (geom.is_ball()) {
    const double scale = ball_scale(ps, geom);
    double lower = kInf;
    switch (nl.kind()) {
      case FKind::Exp: {
        const auto cf = closed_form_exp(ps);
        lower = cf.lower;
        break;
      }
      case FKind::GelfandPower: {
        const auto cf = closed_form_gelfand(ps, nl.power());
        lower = cf.lower;
        break;
      }
      case FKind::MemsPower: {
        const auto cf = closed_form_mems(ps, nl.power());
        lower = cf.lower;
        break;
      }
      case FKind::Custom:
        lower = lower_ball(nl, ps);
        break;
    }
    report.entries.push_back({"lower (sub/supersolution, ball)",
                              BoundKind::Lower, lower * scale,
                              "torsion-profile supersolution, optimized",
                              true});
  } else {
    report.entries.push_back({"lower (measured geometry)", BoundKind::Lower,
                              lower_general(nl, ps, geom),
                              "diameter / torsion estimate", true});
  }
  report.entries.push_back({"upper (torsion)", BoundKind::Upper,
                            upper_torsion(nl, ps, geom),
                            "||F||_inf^(p-1) / psi_M^(p-1)", true});
  if (lambda1 > 0.0) {
    const auto ue = upper_eigen(nl, ps, lambda1, lambda1_certified);
    report.entries.push_back(ue.improved);
    report.entries.push_back(ue.classic);
  }
  return report;
}

}  // namespace plap
