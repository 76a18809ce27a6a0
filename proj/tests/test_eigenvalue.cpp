#include <doctest.h>

#include <cmath>

#include "plap/bounds.hpp"
#include "plap/eigenvalue.hpp"

using namespace plap;

namespace {
constexpr double kE = 2.718281828459045;
DomainGeometry unit_ball(int N) { return DomainGeometry::ball(1.0, N); }
}  // namespace

TEST_CASE("cheeger_lower") {
  CHECK(cheeger_lower(unit_ball(2), PSetting(2.0, 2)) == doctest::Approx(1.0));
  // p -> 1 recovers the Cheeger constant h(B) = N/R.
  CHECK(cheeger_lower(unit_ball(2), PSetting(1.01, 2)) ==
        doctest::Approx(2.0).epsilon(0.05));
  CHECK(cheeger_lower(DomainGeometry::ball(2.0, 4), PSetting(2.0, 4)) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(
      cheeger_lower(DomainGeometry::measured(2.0, 1.0, 3.0, 6.0, 2),
                    PSetting(2.0, 2)),
      std::invalid_argument);
}

TEST_CASE("torsion_reciprocal_lower") {
  CHECK(torsion_reciprocal_lower(unit_ball(3), PSetting(2.0, 3)) ==
        doctest::Approx(6.0));
  CHECK(torsion_reciprocal_lower(unit_ball(2), PSetting(2.0, 2)) ==
        doctest::Approx(4.0));
  // Unit square via the diameter estimate: 1/psi_upper = 8 at p = 2.
  const auto square = DomainGeometry::measured(std::sqrt(2.0), 0.5, 1.0, 4.0, 2);
  CHECK(torsion_reciprocal_lower(square, PSetting(2.0, 2)) ==
        doctest::Approx(8.0).epsilon(1e-13));
}

TEST_CASE("piecewise_lower_ball") {
  CHECK(piecewise_lower_ball(PSetting(2.0, 2), 1.0) == doctest::Approx(4.0));
  CHECK(piecewise_lower_ball(PSetting(2.0, 10), 1.0) ==
        doctest::Approx(16.0 * kE).epsilon(1e-13));
  CHECK(piecewise_lower_ball(PSetting(2.0, 4), 1.0) ==
        doctest::Approx(4.0 * kE).epsilon(1e-13));
}

TEST_CASE("np_comparison") {
  CHECK(np_comparison(PSetting(2.0, 2), 1.0) == doctest::Approx(4.0));
  CHECK(np_comparison(PSetting(3.0, 5), 1.0) == doctest::Approx(15.0));
  CHECK(np_comparison(PSetting(1.5, 3), 1.0) == doctest::Approx(4.5));
}

TEST_CASE("best_lower") {
  const auto a = best_lower(unit_ball(2), PSetting(2.0, 2));
  CHECK(a.best_value == doctest::Approx(4.0));
  CHECK(a.entries.size() == 4);
  CHECK(a.p_inf_root_limit.has_value());
  CHECK(*a.p_inf_root_limit == doctest::Approx(1.0));

  const auto b = best_lower(unit_ball(12), PSetting(2.0, 12));
  CHECK(b.best_value == doctest::Approx(20.0 * kE).epsilon(1e-13));
  CHECK(b.best_name == "piecewise");

  // Near p = 1 each bound is evaluated as written; the max is recorded.
  const auto c = best_lower(unit_ball(2), PSetting(1.1, 2));
  double expect = 0.0;
  for (const auto& e : c.entries) expect = std::max(expect, e.value);
  CHECK(c.best_value == doctest::Approx(expect));

  // Measured domains only carry the torsion reciprocal.
  const auto square = DomainGeometry::measured(std::sqrt(2.0), 0.5, 1.0, 4.0, 2);
  const auto d = best_lower(square, PSetting(2.0, 2));
  CHECK(d.entries.size() == 1);
  CHECK(d.best_value == doctest::Approx(8.0).epsilon(1e-13));
}

TEST_CASE("piecewise bound is the eigen image of the exponential bound") {
  for (double p : {1.2, 1.5, 2.0, 3.0, 4.0}) {
    for (int N = 1; N <= 15; ++N) {
      const PSetting ps(p, N);
      const double expect = std::pow(kE / (p - 1.0), p - 1.0) *
                            closed_form_exp(ps).lower;
      CHECK(piecewise_lower_ball(ps, 1.0) ==
            doctest::Approx(expect).epsilon(1e-10));
    }
  }
}

TEST_CASE("piecewise vs Np comparison claim") {
  for (double p : {1.2, 1.5, 2.0}) {
    for (int N = 1; N <= 15; ++N) {
      const PSetting ps(p, N);
      CHECK(piecewise_lower_ball(ps, 1.0) >=
            np_comparison(ps, 1.0) * (1.0 - 1e-12));
    }
  }
  for (int N = 9; N <= 15; ++N) {
    const PSetting ps(3.0, N);
    CHECK(piecewise_lower_ball(ps, 1.0) >=
          np_comparison(ps, 1.0) * (1.0 - 1e-12));
  }
}

TEST_CASE("ball eigen bounds scale as R^(-p)") {
  const PSetting ps(2.5, 3);
  for (double R : {0.5, 2.0}) {
    const double s = std::pow(R, -ps.p);
    CHECK(piecewise_lower_ball(ps, R) ==
          doctest::Approx(s * piecewise_lower_ball(ps, 1.0)).epsilon(1e-12));
    CHECK(np_comparison(ps, R) ==
          doctest::Approx(s * np_comparison(ps, 1.0)).epsilon(1e-12));
    CHECK(cheeger_lower(DomainGeometry::ball(R, 3), ps) ==
          doctest::Approx(s * cheeger_lower(unit_ball(3), ps)).epsilon(1e-12));
    CHECK(torsion_reciprocal_lower(DomainGeometry::ball(R, 3), ps) ==
          doctest::Approx(s * torsion_reciprocal_lower(unit_ball(3), ps))
              .epsilon(1e-12));
  }
}
