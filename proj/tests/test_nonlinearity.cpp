#include <doctest.h>

#include <cmath>
#include <random>

#include "plap/nonlinearity.hpp"

using namespace plap;

namespace {

constexpr double kE = 2.718281828459045;

// Test-side oracle: composite Simpson on a fixed fine grid, independent of
// the library quadrature path.
double simpson(const std::function<double(double)>& f, double a, double b,
               int n = 20000) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

Nonlinearity wrap_custom(const Nonlinearity& nl) {
  return Nonlinearity::custom([nl](double t) { return nl.value(t); },
                              [nl](double t) { return nl.derivative(t); },
                              nl.domain_end(), "wrapped");
}

}  // namespace

TEST_CASE("big_F closed forms") {
  const PSetting p2(2.0, 2);
  const auto exp_nl = Nonlinearity::exponential();
  CHECK(big_F(exp_nl, p2, 1.0) == doctest::Approx(1.0 - 1.0 / kE).epsilon(1e-12));
  CHECK(big_F(exp_nl, p2, 0.0) == 0.0);
  CHECK(big_F(Nonlinearity::gelfand_power(3.0), p2, 0.0) == 0.0);
  CHECK(big_F(Nonlinearity::mems_power(2.0), p2, 0.0) == 0.0);

  // ||F||_inf as the t -> a_f limit of F.
  const auto g3 = Nonlinearity::gelfand_power(3.0);
  CHECK(big_F(g3, p2, 1e9) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(F_infinity_norm(g3, p2) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("F_infinity_norm built-ins") {
  CHECK(F_infinity_norm(Nonlinearity::exponential(), PSetting(3.0, 2)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(F_infinity_norm(Nonlinearity::gelfand_power(5.0), PSetting(2.0, 2)) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(F_infinity_norm(Nonlinearity::mems_power(2.0), PSetting(2.0, 2)) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("big_F_inverse") {
  const PSetting p2(2.0, 2);
  const auto exp_nl = Nonlinearity::exponential();
  CHECK(big_F_inverse(exp_nl, p2, 1.0 - 1.0 / kE) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(big_F_inverse(exp_nl, p2, 0.0) == 0.0);

  // The mems inverse at y = ||F||_inf closes the domain: t -> 1.
  const auto mems = Nonlinearity::mems_power(2.0);
  const double norm = F_infinity_norm(mems, p2);
  CHECK(norm == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(big_F_inverse(mems, p2, norm) == doctest::Approx(1.0).epsilon(1e-9));
  // Independent check that the quenching integral really accumulates 1/3.
  const double q = simpson([](double s) { return (1.0 - s) * (1.0 - s); },
                           0.0, 1.0);
  CHECK(q == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  CHECK_THROWS_AS(big_F_inverse(mems, p2, norm * 1.01), std::domain_error);
}

TEST_CASE("alpha_fp built-ins") {
  CHECK(alpha_fp(Nonlinearity::exponential(), PSetting(2.0, 2)) ==
        doctest::Approx(1.0 / kE).epsilon(1e-14));
  CHECK(alpha_fp(Nonlinearity::gelfand_power(3.0), PSetting(2.0, 2)) ==
        doctest::Approx(4.0 / 27.0).epsilon(1e-14));
  CHECK(alpha_fp(Nonlinearity::mems_power(2.0), PSetting(2.0, 2)) ==
        doctest::Approx(4.0 / 27.0).epsilon(1e-14));
}

TEST_CASE("sup_kernel") {
  CHECK(sup_kernel(Nonlinearity::exponential(), PSetting(2.0, 2), 0.5) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(sup_kernel(Nonlinearity::gelfand_power(4.0), PSetting(3.0, 2), 0.1) ==
        doctest::Approx(0.4).epsilon(1e-14));
  // Custom maximizer agrees with the monotone-kernel closed form.
  const auto custom_exp = wrap_custom(Nonlinearity::exponential());
  CHECK(sup_kernel(custom_exp, PSetting(2.0, 2), 0.5) ==
        doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("domain errors") {
  const auto mems = Nonlinearity::mems_power(2.0);
  CHECK_THROWS_AS(mems.value(1.0), std::domain_error);
  CHECK_THROWS_AS(mems.value(-0.1), std::domain_error);
  CHECK_THROWS_AS(big_F(mems, PSetting(2.0, 2), 1.5), std::domain_error);
  // Gelfand below the integrability threshold m > p-1.
  CHECK_THROWS_AS(
      F_infinity_norm(Nonlinearity::gelfand_power(1.0), PSetting(2.5, 2)),
      std::invalid_argument);
  CHECK_THROWS_AS(PSetting(1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(PSetting(2.0, 0), std::invalid_argument);
}

TEST_CASE("big_F strictly increasing and invertible") {
  const PSetting ps(2.5, 3);
  for (const auto& nl :
       {Nonlinearity::exponential(), Nonlinearity::gelfand_power(4.0),
        Nonlinearity::mems_power(2.0)}) {
    const double norm = F_infinity_norm(nl, ps);
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double y = 0.999 * norm * i / 100.0;
      const double t = big_F_inverse(nl, ps, y);
      const double back = big_F(nl, ps, t);
      CHECK(std::abs(back - y) <= 1e-9);
      CHECK(back > prev - 1e-15);
      prev = back;
    }
  }
}

TEST_CASE("custom quadrature path agrees with closed forms") {
  for (double p : {1.5, 2.0, 3.0}) {
    const PSetting ps(p, 2);
    for (const auto& nl :
         {Nonlinearity::exponential(), Nonlinearity::gelfand_power(4.0),
          Nonlinearity::mems_power(2.0)}) {
      const auto wrapped = wrap_custom(nl);
      const double t_hi =
          std::isfinite(nl.domain_end()) ? 0.98 * nl.domain_end() : 5.0;
      for (int i = 1; i <= 7; ++i) {
        const double t = t_hi * i / 7.0;
        CHECK(big_F(wrapped, ps, t) ==
              doctest::Approx(big_F(nl, ps, t)).epsilon(1e-8));
      }
      CHECK(alpha_fp(wrapped, ps) ==
            doctest::Approx(alpha_fp(nl, ps)).epsilon(1e-8));
      CHECK(F_infinity_norm(wrapped, ps) ==
            doctest::Approx(F_infinity_norm(nl, ps)).epsilon(1e-8));
    }
  }
}

TEST_CASE("norm dominates the ratio sup") {
  // ||F||_inf^(p-1) >= sup t^(p-1)/f(t) whenever f is nondecreasing.
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const PSetting ps(p, 2);
    for (double m : {p - 0.5, p, p + 2.0, p + 5.0}) {
      if (m > p - 1.0) {
        const auto g = Nonlinearity::gelfand_power(m);
        CHECK(std::pow(F_infinity_norm(g, ps), p - 1.0) >=
              alpha_fp(g, ps) * (1.0 - 1e-12));
      }
      const auto mm = Nonlinearity::mems_power(m);
      CHECK(std::pow(F_infinity_norm(mm, ps), p - 1.0) >=
            alpha_fp(mm, ps) * (1.0 - 1e-12));
    }
    const auto e = Nonlinearity::exponential();
    CHECK(std::pow(F_infinity_norm(e, ps), p - 1.0) >=
          alpha_fp(e, ps) * (1.0 - 1e-12));
  }
}

TEST_CASE("divergent quenching integral flags +inf") {
  // f == 1 is admissible but not superlinear: F grows without bound.
  const auto flat = Nonlinearity::custom([](double) { return 1.0; },
                                         [](double) { return 0.0; });
  CHECK(std::isinf(F_infinity_norm(flat, PSetting(2.0, 2))));
  CHECK(std::isinf(alpha_fp(flat, PSetting(2.0, 2))));
}

TEST_CASE("custom validation rejects bad data") {
  CHECK_THROWS_AS(Nonlinearity::custom([](double t) { return 1.0 - t; },
                                       [](double) { return -1.0; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      Nonlinearity::custom(nullptr, [](double) { return 0.0; }),
      std::invalid_argument);
}
