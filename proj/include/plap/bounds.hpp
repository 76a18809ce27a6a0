#pragma once

#include <vector>

#include "plap/geometry.hpp"
#include "plap/nonlinearity.hpp"
#include "plap/report.hpp"

// Upper and lower bounds for the extremal parameter lambda*_p of
//   -Delta_p u = lambda f(u),  u = 0 on the boundary.
// All ball formulas are computed on the unit ball and rescaled by the
// homogeneity rule lambda*(B_R) = R^(-p) lambda*(B_1) in one place.

namespace plap {

// lambda*_p <= (||F||_inf / psi_M)^(p-1). On measured domains the lower
// torsion estimate is used, which keeps the bound valid. Returns +inf when
// ||F||_inf diverges.
double upper_torsion(const Nonlinearity& nl, const PSetting& ps,
                     const DomainGeometry& geom);

// lambda*_p <= lambda_1 sup t^(p-1)/f(t), plus the weaker classical form
// max{lambda_1, lambda_1 sup ...} for comparison.
struct UpperEigenResult {
  BoundEntry improved;
  BoundEntry classic;
};
UpperEigenResult upper_eigen(const Nonlinearity& nl, const PSetting& ps,
                             double lambda1, bool lambda1_certified);

// gamma(alpha) = alpha^(p-1) (1 - p/((p-1)N) sup_kernel(alpha)) for the
// unit ball. Requires 0 < alpha <= ||F||_inf.
double gamma_ball(const Nonlinearity& nl, const PSetting& ps, double alpha);

// Unit-ball lower bound: max of N (p/(p-1))^(p-1) sup t^(p-1)/f(t) and
// (p/(p-1))^(p-1) N sup_alpha gamma(alpha). Requires f(0) > 0.
double lower_ball(const Nonlinearity& nl, const PSetting& ps);

// Lower bound from scalar geometry: the diameter form
// (p/(p-1))^(p-1) 2^p N / diam^p * sup t^(p-1)/f(t), or the exact-torsion
// form on balls. Requires f(0) > 0.
double lower_general(const Nonlinearity& nl, const PSetting& ps,
                     const DomainGeometry& geom);

// Piecewise closed forms on the unit ball for the three built-in families.
struct ClosedFormBounds {
  double lower = 0.0;
  double upper = 0.0;
  int branch = 0;  // 1, 2 or 3
  bool within_hypothesis = true;
};
ClosedFormBounds closed_form_exp(const PSetting& ps);
ClosedFormBounds closed_form_gelfand(const PSetting& ps, double m);
ClosedFormBounds closed_form_mems(const PSetting& ps, double m);

// Bounds for -Delta_p u = lambda f(u^q) on the unit ball, one row per q.
// Requires f(0) = 1. As q grows both bounds approach (p/(p-1))^(p-1) N.
struct QLimitRow {
  double q = 1.0;
  double lower = 0.0;
  double upper = 0.0;
};
std::vector<QLimitRow> q_limit_study(const Nonlinearity& nl,
                                     const PSetting& ps,
                                     const std::vector<double>& q_list);

// The composed nonlinearity g(u) = f(u^q) as a custom Nonlinearity.
Nonlinearity compose_power(const Nonlinearity& nl, double q);

// Full report (lower + upper entries) for one problem instance.
// lambda1 < 0 means "not supplied"; when supplied it feeds upper_eigen.
BoundReport make_bound_report(const Nonlinearity& nl, const PSetting& ps,
                              const DomainGeometry& geom, double lambda1 = -1.0,
                              bool lambda1_certified = false);

}  // namespace plap
