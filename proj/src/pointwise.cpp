#include "plap/pointwise.hpp"

#include <algorithm>
#include <cmath>

namespace plap {

WeightSpec WeightSpec::constant(double c, const DomainGeometry& dom) {
  if (!(c > 0.0)) throw std::invalid_argument("weight: requires c > 0");
  if (!dom.is_ball())
    throw std::invalid_argument("weight: only ball domains are supported");
  return WeightSpec{WeightKind::Constant, c, dom};
}

WeightSpec WeightSpec::radial_power(double alpha, const DomainGeometry& dom) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("weight: requires alpha > 0");
  if (!dom.is_ball())
    throw std::invalid_argument("weight: only ball domains are supported");
  return WeightSpec{WeightKind::RadialPower, alpha, dom};
}

double rho_x(const WeightSpec& w, double x_norm, double r) {
  const double R = w.ball_radius();
  if (!(x_norm >= 0.0) || x_norm > R)
    throw std::invalid_argument("rho_x: x outside the ball");
  if (!(r > 0.0) || r > (R - x_norm) * (1.0 + 1e-12))
    throw std::invalid_argument("rho_x: requires 0 < r <= dist(x, boundary)");
  if (w.kind == WeightKind::Constant) return w.param;
  return std::pow(std::max(0.0, x_norm - r), w.param);
}

PointwiseBound pointwise_lower(const Nonlinearity& nl, const PSetting& ps,
                               const WeightSpec& w, double lambda,
                               double x_norm) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("pointwise_lower: requires lambda > 0");
  const double R = w.ball_radius();
  if (!(x_norm >= 0.0) || x_norm > R * (1.0 + 1e-12))
    throw std::invalid_argument("pointwise_lower: x outside the ball");

  PointwiseBound out;
  const double d = R - std::min(x_norm, R);
  if (d <= 0.0) return out;  // on the boundary the bound degenerates to 0

  const double lam_root = std::pow(lambda, 1.0 / ps.pm1());

  // Distance form: ((p-1)/p) (lambda rho_x(d) d^p / N)^(1/(p-1)).
  const double rho_inf = rho_x(w, x_norm, d);
  out.distance_path =
      lam_root * (ps.pm1() / ps.p) *
      std::pow(rho_inf * std::pow(d, ps.p) / ps.dim, 1.0 / ps.pm1());

  // Weighted-torsion comparison, exact on balls for both weight kinds.
  double psi_rho;
  if (w.kind == WeightKind::Constant) {
    psi_rho = std::pow(w.param, 1.0 / ps.pm1()) *
              torsion_ball(ps, R, std::min(x_norm, R));
  } else {
    psi_rho = weighted_torsion_radial(ps, R, w.param, std::min(x_norm, R));
  }
  out.torsion_path = lam_root * psi_rho;

  out.f_value = std::max(out.torsion_path, out.distance_path);
  const double norm = F_infinity_norm(nl, ps);
  if (out.f_value >= norm) {
    out.no_supersolution = true;
    return out;
  }
  out.value = big_F_inverse(nl, ps, out.f_value);
  return out;
}

}  // namespace plap
