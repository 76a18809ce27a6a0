#include "plap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace plap {

DomainGeometry DomainGeometry::ball(double radius, int dim) {
  if (!(radius > 0.0))
    throw std::invalid_argument("ball geometry: requires R > 0");
  if (dim < 1) throw std::invalid_argument("geometry: requires N >= 1");
  return DomainGeometry{BallShape{radius}, dim};
}

DomainGeometry DomainGeometry::measured(double diameter,
                                        double chebyshev_radius, double volume,
                                        double perimeter, int dim) {
  if (!(diameter > 0.0) || !(chebyshev_radius > 0.0) || !(volume > 0.0) ||
      !(perimeter > 0.0))
    throw std::invalid_argument("measured geometry: all measurements positive");
  if (chebyshev_radius > 0.5 * diameter * (1.0 + 1e-12))
    throw std::invalid_argument(
        "measured geometry: chebyshev radius cannot exceed diameter/2");
  if (dim < 1) throw std::invalid_argument("geometry: requires N >= 1");
  return DomainGeometry{MeasuredShape{diameter, chebyshev_radius, volume,
                                      perimeter},
                        dim};
}

std::string DomainGeometry::spec_string() const {
  std::ostringstream os;
  if (is_ball()) {
    os << "ball:R=" << ball_shape().radius;
  } else {
    const auto& m = measured_shape();
    os << "measured:diam=" << m.diameter << ",cheb=" << m.chebyshev_radius
       << ",vol=" << m.volume << ",per=" << m.perimeter;
  }
  return os.str();
}

double torsion_ball(const PSetting& ps, double R, double r) {
  if (!(R > 0.0)) throw std::invalid_argument("torsion_ball: requires R > 0");
  if (!(r >= 0.0) || r > R * (1.0 + 1e-12))
    throw std::invalid_argument("torsion_ball: requires 0 <= r <= R");
  r = std::min(r, R);
  const double q = ps.conj();  // p/(p-1)
  return (1.0 / q) * std::pow(double(ps.dim), -1.0 / ps.pm1()) *
         (std::pow(R, q) - std::pow(r, q));
}

TorsionEstimate torsion_max_estimate(const DomainGeometry& geom,
                                     const PSetting& ps) {
  if (geom.dim != ps.dim)
    throw std::invalid_argument("geometry/PSetting dimension mismatch");
  TorsionEstimate est;
  if (geom.is_ball()) {
    const double v = torsion_ball(ps, geom.ball_shape().radius, 0.0);
    est.lower = est.upper = v;
    est.exact = true;
    return est;
  }
  const auto& m = geom.measured_shape();
  const double q = ps.conj();
  const double ball_coeff =
      (1.0 / q) * std::pow(double(ps.dim), -1.0 / ps.pm1());
  const double cheb = ball_coeff * std::pow(m.chebyshev_radius, q);
  const double rigidity = (ps.pm1() / (2.0 * ps.p - 1.0)) *
                          std::pow(m.volume / m.perimeter, q);
  est.lower = std::max(cheb, rigidity);
  est.upper = ball_coeff * std::pow(0.5 * m.diameter, q);
  est.exact = false;
  return est;
}

double weighted_torsion_radial(const PSetting& ps, double R, double alpha_w,
                               double r) {
  if (!(alpha_w > 0.0))
    throw std::invalid_argument(
        "weighted_torsion_radial: requires alpha > 0 (use torsion_ball at "
        "alpha = 0)");
  if (!(R > 0.0) || !(r >= 0.0) || r > R * (1.0 + 1e-12))
    throw std::invalid_argument("weighted_torsion_radial: requires 0 <= r <= R");
  r = std::min(r, R);
  const double e = (alpha_w + ps.p) / ps.pm1();
  const double c = (ps.pm1() / (alpha_w + ps.p)) *
                   std::pow(alpha_w + ps.dim, -1.0 / ps.pm1());
  return c * (std::pow(R, e) - std::pow(r, e));
}

double auxiliary_w(const PSetting& ps, double d, double s) {
  if (s > d * (1.0 + 1e-12))
    throw std::invalid_argument("auxiliary_w: requires s <= d");
  return torsion_ball(ps, d, s);
}

}  // namespace plap
