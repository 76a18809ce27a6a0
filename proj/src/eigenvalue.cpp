#include "plap/eigenvalue.hpp"

#include <algorithm>
#include <cmath>

#include "plap/bounds.hpp"

namespace plap {

double cheeger_lower(const DomainGeometry& geom, const PSetting& ps) {
  if (!geom.is_ball())
    throw std::invalid_argument(
        "cheeger_lower: general Cheeger constants are not computed; ball only");
  if (geom.dim != ps.dim)
    throw std::invalid_argument("geometry/PSetting dimension mismatch");
  const double R = geom.ball_shape().radius;
  return std::pow(ps.dim / (ps.p * R), ps.p);
}

double torsion_reciprocal_lower(const DomainGeometry& geom,
                                const PSetting& ps) {
  if (geom.dim != ps.dim)
    throw std::invalid_argument("geometry/PSetting dimension mismatch");
  if (geom.is_ball()) {
    const double R = geom.ball_shape().radius;
    return std::pow(ps.conj(), ps.pm1()) * ps.dim / std::pow(R, ps.p);
  }
  const TorsionEstimate est = torsion_max_estimate(geom, ps);
  return std::pow(est.upper, -ps.pm1());
}

double piecewise_lower_ball(const PSetting& ps, double R) {
  if (!(R > 0.0))
    throw std::invalid_argument("piecewise_lower_ball: requires R > 0");
  // (e/(p-1))^(p-1) times the exponential-family extremal lower bound.
  const double factor = std::pow(std::exp(1.0) / ps.pm1(), ps.pm1());
  return factor * closed_form_exp(ps).lower / std::pow(R, ps.p);
}

double np_comparison(const PSetting& ps, double R) {
  if (!(R > 0.0))
    throw std::invalid_argument("np_comparison: requires R > 0");
  return ps.dim * ps.p / std::pow(R, ps.p);
}

EigenBoundReport best_lower(const DomainGeometry& geom, const PSetting& ps) {
  EigenBoundReport report;
  auto add = [&report](std::string name, double value, std::string source) {
    report.entries.push_back({std::move(name), BoundKind::Lower, value,
                              std::move(source), true});
  };
  if (geom.is_ball()) {
    const double R = geom.ball_shape().radius;
    add("cheeger", cheeger_lower(geom, ps), "(h(B)/p)^p with h = N/R");
    add("torsion reciprocal", torsion_reciprocal_lower(geom, ps),
        "1/psi_M^(p-1)");
    add("piecewise", piecewise_lower_ball(ps, R),
        "extremal-parameter comparison, exponential family");
    add("Np", np_comparison(ps, R), "Benedikt-Drabek ball bound");
    report.p_inf_root_limit = 1.0 / R;
  } else {
    add("torsion reciprocal", torsion_reciprocal_lower(geom, ps),
        "1/psi_M^(p-1) via diameter estimate");
    report.p_inf_root_limit =
        1.0 / geom.measured_shape().chebyshev_radius;
  }
  const auto best = std::max_element(
      report.entries.begin(), report.entries.end(),
      [](const BoundEntry& a, const BoundEntry& b) { return a.value < b.value; });
  report.best_name = best->name;
  report.best_value = best->value;
  return report;
}

}  // namespace plap
