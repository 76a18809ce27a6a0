#pragma once

#include <string>

#include "plap/pointwise.hpp"

// Nonexistence thresholds for -Delta_p u >= lambda rho(x) f(u) and the
// MEMS pull-in voltage sandwich.

namespace plap {

struct NonexistenceThreshold {
  double lambda_bar = 0.0;  // no positive supersolution for lambda > this
  std::string source;
};

// (p/(p-1))^(p-1) N ||F||_inf^(p-1) / sup_x{rho_x(d(x)) d(x)^p}.
// Requires ||F||_inf < inf; otherwise lambda_bar = +inf (no threshold).
NonexistenceThreshold threshold_general(const Nonlinearity& nl,
                                        const PSetting& ps,
                                        const WeightSpec& w);

// Radial weight |x|^alpha on B_R:
// ((alpha+p)/(p-1) ||F||_inf)^(p-1) (alpha+N) R^-(alpha+p).
NonexistenceThreshold threshold_radial_weight(const Nonlinearity& nl,
                                              const PSetting& ps,
                                              double alpha_w, double R);

// Pull-in voltage sandwich for -Delta u = lambda |x|^alpha (1-u)^(-2):
//   max{4(a+2)(a+N)/27, (a+2)(3N+a-4)/9} R^-(a+2)
//     <= lambda* <= (a+2)(a+N)/3 R^-(a+2).
// The Laplacian case p = 2; alpha = 0 admitted.
struct MemsSandwich {
  double lower = 0.0;
  double upper = 0.0;
};
MemsSandwich mems_sandwich(double alpha_w, int N, double R);

}  // namespace plap
