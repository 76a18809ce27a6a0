#include <doctest.h>

#include <array>
#include <cmath>

#include "plap/bounds.hpp"
#include "plap/eigenvalue.hpp"
#include "plap/pointwise.hpp"
#include "plap/radial_oracle.hpp"

using namespace plap;

namespace {

constexpr double kPi = 3.141592653589793;

// Independent fixed-step RK4 on the flux system, for cross-checking the
// adaptive integrator. Starts from the same series expansion.
double rk4_boundary_value(const PSetting& ps, const Nonlinearity& nl,
                          double lambda, double u0, double R, int steps) {
  const double kappa = ps.conj();
  const double c1 =
      (1.0 / kappa) * std::pow(lambda * nl.value(u0) / ps.dim, 1.0 / ps.pm1());
  const double eps = 1e-8;
  std::array<double, 2> y{u0 - c1 * std::pow(eps, kappa),
                          -lambda * nl.value(u0) * std::pow(eps, ps.dim) /
                              ps.dim};
  auto rhs = [&](double r, const std::array<double, 2>& s) {
    const double rn = std::pow(r, ps.dim - 1);
    const double w = s[1] / rn;
    const double du = w >= 0 ? std::pow(w, 1.0 / ps.pm1())
                             : -std::pow(-w, 1.0 / ps.pm1());
    const double g = s[0] > 0.0 ? nl.value(s[0]) : nl.value(0.0);
    return std::array<double, 2>{du, -lambda * rn * g};
  };
  const double h = (R - eps) / steps;
  double r = eps;
  for (int i = 0; i < steps; ++i) {
    const auto k1 = rhs(r, y);
    const auto k2 = rhs(r + h / 2, {y[0] + h / 2 * k1[0], y[1] + h / 2 * k1[1]});
    const auto k3 = rhs(r + h / 2, {y[0] + h / 2 * k2[0], y[1] + h / 2 * k2[1]});
    const auto k4 = rhs(r + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
    y[0] += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
    y[1] += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
    r += h;
  }
  return y[0];
}

Nonlinearity flat_one() {
  return Nonlinearity::custom([](double) { return 1.0; },
                              [](double) { return 0.0; }, 1e308, "one");
}

}  // namespace

TEST_CASE("torsion right side reproduces the closed form") {
  for (double p : {1.5, 2.0, 3.0}) {
    for (int N : {1, 2, 3, 10}) {
      const PSetting ps(p, N);
      const double u0 = torsion_ball(ps, 1.0, 0.0);
      ShootOptions opts;
      opts.n_samples = 100;
      opts.rel_tol = 1e-11;
      const auto sol = shoot(ps, RadialRhs::torsion(), 1.0, u0, 1.0, opts);
      CHECK(sol.converged);
      for (const auto& s : sol.samples) {
        CHECK(s.u == doctest::Approx(torsion_ball(ps, 1.0, s.r))
                         .epsilon(1e-6)
                         .scale(u0));
      }
    }
  }
}

TEST_CASE("weighted torsion right side reproduces the closed form") {
  for (double a : {1.0, 2.0}) {
    const PSetting ps(2.0, 2);
    const double u0 = weighted_torsion_radial(ps, 1.0, a, 0.0);
    ShootOptions opts;
    opts.n_samples = 100;
    opts.rel_tol = 1e-11;
    const auto sol = shoot(ps, RadialRhs::torsion(a), 1.0, u0, 1.0, opts);
    CHECK(sol.converged);
    for (const auto& s : sol.samples) {
      CHECK(s.u == doctest::Approx(weighted_torsion_radial(ps, 1.0, a, s.r))
                       .epsilon(1e-6)
                       .scale(u0));
    }
  }
}

TEST_CASE("lambda = 0 keeps the profile constant") {
  const PSetting ps(2.0, 2);
  const auto sol = shoot(ps, RadialRhs::from_nonlinearity(
                             Nonlinearity::exponential()),
                         0.0, 0.7, 1.0);
  CHECK(sol.boundary_residual == doctest::Approx(0.7));
  CHECK(!sol.converged);
}

TEST_CASE("adaptive integrator matches a dense fixed-step run") {
  const PSetting ps(2.0, 1);
  const auto nl = Nonlinearity::exponential();
  ShootOptions opts;
  opts.stop_at_zero = false;
  const auto sol =
      shoot(ps, RadialRhs::from_nonlinearity(nl), 0.8, 1.0, 1.0, opts);
  const double dense = rk4_boundary_value(ps, nl, 0.8, 1.0, 1.0, 400000);
  CHECK(sol.boundary_residual == doctest::Approx(dense).epsilon(1e-6));
}

TEST_CASE("lambda_of_u0 torsion identity") {
  // g = 1 with u0 = psi_M is the torsion function itself: lambda = 1.
  const PSetting ps(2.0, 3);
  const double psi_m = torsion_ball(ps, 1.0, 0.0);
  CHECK(lambda_of_u0(ps, flat_one(), psi_m, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("lambda_of_u0 small-amplitude linearization") {
  const PSetting ps(2.0, 1);
  const auto nl = Nonlinearity::exponential();
  const double u0 = 0.01;
  const double lam = lambda_of_u0(ps, nl, u0, 1.0);
  const double psi_m = torsion_ball(ps, 1.0, 0.0);
  CHECK(lam * psi_m == doctest::Approx(big_F(nl, ps, u0)).epsilon(0.02));
}

TEST_CASE("lambda_of_u0 stays below the mems threshold") {
  const PSetting ps(2.0, 2);
  const double lam = lambda_of_u0(ps, Nonlinearity::mems_power(2.0), 0.3, 1.0);
  CHECK(lam > 0.0);
  CHECK(lam < 4.0 / 3.0);
}

TEST_CASE("overloaded profile exits through zero before the boundary") {
  const PSetting ps(2.0, 2);
  const auto sol = shoot(ps, RadialRhs::from_nonlinearity(
                             Nonlinearity::mems_power(2.0)),
                         4.0, 0.5, 1.0);
  CHECK(sol.status == ShootStatus::ExitedLow);
  CHECK(sol.exit_radius > 0.0);
  CHECK(sol.exit_radius < 1.0);
}

TEST_CASE("lambda1_numeric analytic cases") {
  CHECK(lambda1_numeric(PSetting(2.0, 1), 1.0) ==
        doctest::Approx(kPi * kPi / 4.0).epsilon(1e-8));
  CHECK(lambda1_numeric(PSetting(2.0, 2), 1.0) ==
        doctest::Approx(5.783185962946785).epsilon(1e-8));
  CHECK(lambda1_numeric(PSetting(2.0, 3), 1.0) ==
        doctest::Approx(kPi * kPi).epsilon(1e-8));
  // Radius scaling lambda_1(B_R) = R^(-p) lambda_1(B_1).
  CHECK(lambda1_numeric(PSetting(2.0, 2), 2.0) ==
        doctest::Approx(5.783185962946785 / 4.0).epsilon(1e-8));
}

TEST_CASE("bifurcation curve and refinement") {
  const PSetting ps(2.0, 2);
  const auto curve = lambda_star_numeric(ps, Nonlinearity::exponential(), 1.0);
  CHECK(curve.converged);
  CHECK(curve.lambda_star == doctest::Approx(2.0).epsilon(1e-4));
  for (const auto& [u0, lam] : curve.points) {
    CHECK(u0 > 0.0);
    CHECK(lam > 0.0);
    CHECK(lam <= curve.lambda_star * (1.0 + 1e-9));
  }
  // Tightening the tolerance barely moves the answer.
  const auto finer =
      lambda_star_numeric(ps, Nonlinearity::exponential(), 1.0, 5e-5);
  CHECK(std::abs(finer.lambda_star - curve.lambda_star) <=
        1e-4 * curve.lambda_star);
}

TEST_CASE("eigen bounds are dominated by the numeric eigenvalue") {
  for (double p : {1.5, 2.0, 3.0}) {
    for (int N : {1, 2, 3}) {
      const PSetting ps(p, N);
      const double lam1 = lambda1_numeric(ps, 1.0);
      const auto report = best_lower(DomainGeometry::ball(1.0, N), ps);
      CHECK(report.best_value <= lam1 * (1.0 + 1e-6));
    }
  }
  // And the eigenvalue-comparison upper bound clears the extremal parameter.
  const PSetting ps(2.0, 2);
  const double lam1 = lambda1_numeric(ps, 1.0);
  const auto upper =
      upper_eigen(Nonlinearity::exponential(), ps, lam1, false);
  const auto star = lambda_star_numeric(ps, Nonlinearity::exponential(), 1.0);
  CHECK(upper.improved.value >= star.lambda_star * (1.0 - 1e-6));
}

TEST_CASE("kato inequality on the three reference profiles") {
  SUBCASE("closed-form torsion profile, exponential F") {
    const PSetting ps(2.0, 2);
    const auto rep = kato_inequality_check(
        ps, Nonlinearity::exponential(),
        [](double r) { return 0.25 * (1.0 - r * r); }, 1.0);
    CHECK(rep.passed);
  }
  SUBCASE("linear F is the equality case") {
    const PSetting ps(2.0, 2);
    const auto rep = kato_inequality_check(
        ps, flat_one(), [](double r) { return 0.25 * (1.0 - r * r); }, 1.0);
    CHECK(rep.passed);
    CHECK(std::abs(rep.max_violation) <= 1e-4);
  }
  SUBCASE("minimal solution profile") {
    const PSetting ps(2.0, 2);
    const auto prof =
        minimal_solution(ps, Nonlinearity::exponential(), 1.0, 1.0);
    CHECK(prof.converged);
    const auto rep =
        kato_inequality_check(ps, Nonlinearity::exponential(), prof, 1.0);
    CHECK(rep.passed);
  }
}

TEST_CASE("minimal solutions dominate the pointwise bounds") {
  for (int N : {1, 2, 3}) {
    const PSetting ps(2.0, N);
    const auto nl = Nonlinearity::exponential();
    const double lam = 0.5 * closed_form_exp(ps).lower;
    const auto prof = minimal_solution(ps, nl, lam, 1.0);
    const auto ball = DomainGeometry::ball(1.0, N);
    const auto w = WeightSpec::constant(1.0, ball);
    for (int i = 0; i <= 50; ++i) {
      const double r = 0.98 * i / 50.0;
      const auto bound = pointwise_lower(nl, ps, w, lam, r);
      REQUIRE(!bound.no_supersolution);
      CHECK(prof.interpolate(r) >= bound.value - 1e-6);
    }
  }
}

TEST_CASE("identical inputs give identical outputs") {
  const PSetting ps(2.0, 2);
  ShootOptions opts;
  opts.n_samples = 64;
  const auto a = shoot(ps, RadialRhs::from_nonlinearity(
                           Nonlinearity::exponential()),
                       1.0, 1.0, 1.0, opts);
  const auto b = shoot(ps, RadialRhs::from_nonlinearity(
                           Nonlinearity::exponential()),
                       1.0, 1.0, 1.0, opts);
  REQUIRE(a.samples.size() == b.samples.size());
  for (size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].u == b.samples[i].u);
    CHECK(a.samples[i].du == b.samples[i].du);
  }
  CHECK(a.boundary_residual == b.boundary_residual);
}

TEST_CASE("shoot input validation") {
  const PSetting ps(2.0, 2);
  const auto rhs = RadialRhs::from_nonlinearity(Nonlinearity::mems_power(2.0));
  CHECK_THROWS_AS(shoot(ps, rhs, -1.0, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(shoot(ps, rhs, 1.0, 1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(shoot(ps, rhs, 1.0, 0.0, 1.0), std::invalid_argument);
}
