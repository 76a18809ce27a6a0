#pragma once

#include <string>
#include <vector>

// Consistency suites run by the CLI `verify` command: every certified bound
// must bracket the shooting oracle, and the oracle must reproduce the
// closed-form torsion profiles.

namespace plap::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Radial solve of g = 1 (and g = 1 with weight r^alpha) against the
// closed-form torsion profiles, 100 radii each.
std::vector<CheckResult> torsion_suite(bool small_grid);

// lower_ball <= oracle lambda* <= upper_torsion over the standard grid
// {exp, gelfand m=3, gelfand m=5, mems m=2} x p in {1.5,2,3} x
// N in {1,2,3,5,10}.
std::vector<CheckResult> sandwich_suite(bool small_grid,
                                        double oracle_tol = 1e-4);

// Every eigenvalue lower bound <= oracle lambda_1, plus the piecewise-vs-Np
// comparison claim.
std::vector<CheckResult> eigen_suite(bool small_grid);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace plap::verify
