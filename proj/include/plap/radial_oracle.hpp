#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plap/nonlinearity.hpp"

// Radial shooting for -(r^(N-1) |u'|^(p-2) u')' = lambda r^(N-1+alpha) g(u)
// on balls: numeric lambda*, lambda_1, torsion profiles, bifurcation curves.
// The flux v = r^(N-1) |u'|^(p-2) u' is carried as a state variable; it is
// C^1 through the origin and avoids the |u'|^(p-2) degeneracy at u' = 0.

namespace plap {

struct RadialSample {
  double r = 0.0;
  double u = 0.0;
  double du = 0.0;
};

enum class ShootStatus { ReachedBoundary, ExitedLow, ExitedHigh };

struct RadialSolution {
  double lambda = 0.0;
  double u0 = 0.0;
  std::vector<RadialSample> samples;
  double boundary_residual = 0.0;  // u(R) when the boundary was reached
  bool converged = false;          // |residual| <= 1e-9 max(1, u0)
  ShootStatus status = ShootStatus::ReachedBoundary;
  double exit_radius = 0.0;  // where u left [0, a_f), for early exits

  // Cubic Hermite interpolation on the stored samples.
  double interpolate(double r) const;
};

// Right-hand side: g(u) with radial weight r^alpha.
struct RadialRhs {
  std::function<double(double)> g, g_prime;
  double weight_alpha = 0.0;
  double domain_end = std::numeric_limits<double>::infinity();

  static RadialRhs torsion(double weight_alpha = 0.0);       // g = 1
  static RadialRhs from_nonlinearity(const Nonlinearity& nl);
  static RadialRhs eigenmode(const PSetting& ps);  // g = |u|^(p-2) u
};

struct ShootOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int n_samples = 0;         // uniform samples on [0, R]; 0 keeps endpoints
  bool stop_at_zero = true;  // terminate at the first u = 0 crossing
};

// Integrate outward from the series start near r = 0 and report u(R),
// or the exit radius when u leaves [0, a_f) first.
RadialSolution shoot(const PSetting& ps, const RadialRhs& rhs, double lambda,
                     double u0, double R, const ShootOptions& opts = {});

class NoSolutionAtThisHeight : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The lambda for which the profile started at height u0 vanishes at r = R.
// Seeded by the homogeneity scaling of the lambda = 1 profile, then polished
// by bracketing root iteration to relative tolerance. weight_alpha adds the
// radial weight r^alpha to the right-hand side.
double lambda_of_u0(const PSetting& ps, const Nonlinearity& nl, double u0,
                    double R, double rel_tol = 1e-10,
                    double weight_alpha = 0.0);

struct BifurcationCurve {
  std::vector<std::pair<double, double>> points;  // (u0, lambda(u0))
  double lambda_star = 0.0;
  double turning_u0 = 0.0;
  bool unbounded = false;  // lambda(u0) kept growing: lambda* = +inf candidate
  bool converged = false;
};

// Sweep u0, take the maximum of lambda(u0), refine by golden section.
BifurcationCurve lambda_star_numeric(const PSetting& ps,
                                     const Nonlinearity& nl, double R,
                                     double rel_tol = 1e-4,
                                     double weight_alpha = 0.0);

// First Dirichlet eigenvalue of the p-Laplacian on B_R: the lambda = 1
// eigenmode profile has its first zero at r_1, and lambda_1 = (r_1/R)^p.
double lambda1_numeric(const PSetting& ps, double R, double rel_tol = 1e-8);

// Minimal-branch solution profile at a given lambda < lambda*.
RadialSolution minimal_solution(const PSetting& ps, const Nonlinearity& nl,
                                double lambda, double R, int n_samples = 1025);

// Finite-difference spot check of -Delta_p F(u) >= F'(u)^(p-1) (-Delta_p u)
// on interior radii of a profile.
struct KatoReport {
  int points = 0;
  double max_violation = 0.0;  // positive means the inequality failed there
  double slack = 0.0;
  bool passed = false;
};
KatoReport kato_inequality_check(const PSetting& ps, const Nonlinearity& nl,
                                 const std::function<double(double)>& profile,
                                 double R, int n_points = 60,
                                 double slack = 1e-4);
KatoReport kato_inequality_check(const PSetting& ps, const Nonlinearity& nl,
                                 const RadialSolution& profile, double R,
                                 int n_points = 60, double slack = 1e-4);

}  // namespace plap
