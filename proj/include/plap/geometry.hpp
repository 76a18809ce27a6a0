#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <variant>

#include "plap/nonlinearity.hpp"

namespace plap {

struct BallShape {
  double radius;
};

// A general domain known only through scalar measurements.
struct MeasuredShape {
  double diameter;
  double chebyshev_radius;  // radius of the largest inscribed ball
  double volume;
  double perimeter;
};

struct DomainGeometry {
  std::variant<BallShape, MeasuredShape> shape;
  int dim;

  static DomainGeometry ball(double radius, int dim);
  static DomainGeometry measured(double diameter, double chebyshev_radius,
                                 double volume, double perimeter, int dim);

  bool is_ball() const { return std::holds_alternative<BallShape>(shape); }
  const BallShape& ball_shape() const { return std::get<BallShape>(shape); }
  const MeasuredShape& measured_shape() const {
    return std::get<MeasuredShape>(shape);
  }
  std::string spec_string() const;
};

// Two-sided estimate for psi_M, the maximum of the p-torsion function.
struct TorsionEstimate {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool exact = false;
};

// p-torsion function of the ball B_R evaluated at radius r:
//   psi(r) = ((p-1)/p) N^(-1/(p-1)) (R^(p/(p-1)) - r^(p/(p-1))).
double torsion_ball(const PSetting& ps, double R, double r);

// psi_M bounds: exact on balls; on measured domains the lower estimate is
// the better of the inscribed-ball bound and the torsional-rigidity
// (volume/perimeter) bound, the upper estimate comes from the diameter.
TorsionEstimate torsion_max_estimate(const DomainGeometry& geom,
                                     const PSetting& ps);

// Torsion-type function for the radial weight |x|^alpha on B_R:
//   psi_rho(r) = ((p-1)/(alpha+p)) (alpha+N)^(-1/(p-1))
//                (R^((alpha+p)/(p-1)) - r^((alpha+p)/(p-1))), alpha > 0.
double weighted_torsion_radial(const PSetting& ps, double R, double alpha_w,
                               double r);

// Comparison function on a ball of radius d (same formula as torsion_ball).
double auxiliary_w(const PSetting& ps, double d, double s);

}  // namespace plap
