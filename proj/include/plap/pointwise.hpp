#pragma once

#include "plap/geometry.hpp"
#include "plap/nonlinearity.hpp"

// Pointwise lower bounds for positive supersolutions of
// -Delta_p u = lambda rho(x) f(u) on balls.

namespace plap {

enum class WeightKind { Constant, RadialPower };

// rho(x) = c or rho(x) = |x|^alpha on a ball domain.
struct WeightSpec {
  WeightKind kind;
  double param;  // c > 0 or alpha > 0
  DomainGeometry domain;

  static WeightSpec constant(double c, const DomainGeometry& dom);
  static WeightSpec radial_power(double alpha, const DomainGeometry& dom);
  double ball_radius() const { return domain.ball_shape().radius; }
};

// rho_x(r) = inf of rho over the ball of radius r about x (|x| = x_norm).
// Requires r <= dist(x, boundary).
double rho_x(const WeightSpec& w, double x_norm, double r);

// Lower bound for u(x): the better of the weighted-torsion comparison and
// the distance form, inverted through F. When the F-value meets ||F||_inf
// no supersolution can exist at this lambda.
struct PointwiseBound {
  bool no_supersolution = false;
  double value = 0.0;     // lower bound for u(x); 0 on the boundary
  double f_value = 0.0;   // the bound on F(u(x)) before inversion
  double torsion_path = 0.0;   // weighted-torsion comparison value
  double distance_path = 0.0;  // distance-form value
};
PointwiseBound pointwise_lower(const Nonlinearity& nl, const PSetting& ps,
                               const WeightSpec& w, double lambda,
                               double x_norm);

}  // namespace plap
