#include "plap/nonexistence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plap/numerics.hpp"

namespace plap {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

NonexistenceThreshold threshold_general(const Nonlinearity& nl,
                                        const PSetting& ps,
                                        const WeightSpec& w) {
  const double norm = F_infinity_norm(nl, ps);
  if (!std::isfinite(norm))
    return {kInf, "||F||_inf diverges: no finite threshold"};
  const double R = w.ball_radius();
  double sup;
  if (w.kind == WeightKind::Constant) {
    sup = w.param * std::pow(R, ps.p);  // attained at the center
  } else {
    // Maximize rho_x(d(x)) d(x)^p = max(0, 2t-R)^alpha (R-t)^p over t.
    const double a = w.param;
    const auto h = [&](double t) {
      return std::pow(std::max(0.0, 2.0 * t - R), a) *
             std::pow(R - t, ps.p);
    };
    sup = num::maximize(h, 0.5 * R, R, 513).value;
  }
  const double value = std::pow(ps.conj(), ps.pm1()) * ps.dim *
                       std::pow(norm, ps.pm1()) / sup;
  return {value, "supersolution bound, distance form"};
}

NonexistenceThreshold threshold_radial_weight(const Nonlinearity& nl,
                                              const PSetting& ps,
                                              double alpha_w, double R) {
  if (!(alpha_w > 0.0))
    throw std::invalid_argument(
        "threshold_radial_weight: requires alpha > 0");
  if (!(R > 0.0))
    throw std::invalid_argument("threshold_radial_weight: requires R > 0");
  const double norm = F_infinity_norm(nl, ps);
  if (!std::isfinite(norm))
    return {kInf, "||F||_inf diverges: no finite threshold"};
  const double value = std::pow((alpha_w + ps.p) / ps.pm1() * norm, ps.pm1()) *
                       (alpha_w + ps.dim) * std::pow(R, -(alpha_w + ps.p));
  return {value, "supersolution bound, weighted torsion"};
}

MemsSandwich mems_sandwich(double alpha_w, int N, double R) {
  if (!(alpha_w >= 0.0))
    throw std::invalid_argument("mems_sandwich: requires alpha >= 0");
  if (N < 1) throw std::invalid_argument("mems_sandwich: requires N >= 1");
  if (!(R > 0.0)) throw std::invalid_argument("mems_sandwich: requires R > 0");
  const double a = alpha_w;
  const double scale = std::pow(R, -(a + 2.0));
  MemsSandwich out;
  // Lower bound quoted from the comparison literature.
  out.lower = std::max(4.0 * (a + 2.0) * (a + N) / 27.0,
                       (a + 2.0) * (3.0 * N + a - 4.0) / 9.0) *
              scale;
  out.upper = (a + 2.0) * (a + N) / 3.0 * scale;
  return out;
}

}  // namespace plap
