#pragma once

#include "plap/geometry.hpp"
#include "plap/nonlinearity.hpp"
#include "plap/report.hpp"

// Lower bounds for the first Dirichlet eigenvalue of the p-Laplacian.

namespace plap {

// Cheeger inequality lambda_1 >= (h/p)^p with h(B_R) = N/R. Ball only.
double cheeger_lower(const DomainGeometry& geom, const PSetting& ps);

// lambda_1 >= 1/psi_M^(p-1); on balls this is (p/(p-1))^(p-1) N/R^p, on
// measured domains the upper torsion estimate is used.
double torsion_reciprocal_lower(const DomainGeometry& geom,
                                const PSetting& ps);

// Piecewise bound on B_R obtained by running the exponential-nonlinearity
// extremal bound through the eigenvalue comparison. The three branches share
// the thresholds of the exponential closed form.
double piecewise_lower_ball(const PSetting& ps, double R);

// lambda_1(B_R) >= N p / R^p.
double np_comparison(const PSetting& ps, double R);

// All applicable bounds plus the best one.
EigenBoundReport best_lower(const DomainGeometry& geom, const PSetting& ps);

}  // namespace plap
