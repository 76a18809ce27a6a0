#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace plap {

// The pair (p, N): p-Laplacian exponent and space dimension.
struct PSetting {
  double p;
  int dim;

  PSetting(double p_, int dim_) : p(p_), dim(dim_) {
    if (!(p > 1.0) || !std::isfinite(p))
      throw std::invalid_argument("PSetting: requires p > 1");
    if (dim < 1) throw std::invalid_argument("PSetting: requires N >= 1");
  }

  double pm1() const { return p - 1.0; }         // p - 1
  double conj() const { return p / (p - 1.0); }  // p/(p-1)
};

enum class FKind { Exp, GelfandPower, MemsPower, Custom };

// An admissible nonlinearity: nondecreasing C^1 f on [0, a_f) with
// f(t) > 0 for t > 0. The three built-ins are
//   Exp            f(t) = e^t             on [0, inf)
//   GelfandPower   f(t) = (1+t)^m         on [0, inf)
//   MemsPower      f(t) = (1-t)^(-m)      on [0, 1)
class Nonlinearity {
public:
  static Nonlinearity exponential();
  static Nonlinearity gelfand_power(double m);
  static Nonlinearity mems_power(double m);
  static Nonlinearity custom(std::function<double(double)> f,
                             std::function<double(double)> f_prime,
                             double domain_end =
                                 std::numeric_limits<double>::infinity(),
                             std::string label = "custom");

  FKind kind() const { return kind_; }
  double power() const { return m_; }     // m for the power families
  double domain_end() const { return a_f_; }

  // f(t); throws std::domain_error outside [0, a_f).
  double value(double t) const;
  // f'(t), same domain rules.
  double derivative(double t) const;

  bool positive_at_zero() const { return f0_ > 0.0; }
  double value_at_zero() const { return f0_; }

  // CLI spec string: "exp", "gelfand:m=<m>", "mems:m=<m>", or the label.
  std::string spec_string() const;

private:
  Nonlinearity() = default;
  void check_domain(double t) const;

  FKind kind_ = FKind::Custom;
  double m_ = 0.0;
  double a_f_ = std::numeric_limits<double>::infinity();
  double f0_ = 0.0;
  std::function<double(double)> f_, f_prime_;
  std::string label_;
};

// F(t) = integral_0^t f(s)^(-1/(p-1)) ds. Closed form for the built-ins,
// adaptive quadrature (rel tol 1e-10) for customs.
double big_F(const Nonlinearity& nl, const PSetting& ps, double t);

// ||F||_inf = F(a_f^-); +inf when the improper integral diverges.
double F_infinity_norm(const Nonlinearity& nl, const PSetting& ps);

// Inverse of F: the t in [0, a_f) with F(t) = y. Requires
// 0 <= y <= ||F||_inf; y = ||F||_inf returns the a_f-adjacent limit.
double big_F_inverse(const Nonlinearity& nl, const PSetting& ps, double y);

// sup over t in (0, a_f) of t^(p-1)/f(t); +inf if unbounded.
double alpha_fp(const Nonlinearity& nl, const PSetting& ps);

// sup over s in (0, F^-1(alpha)) of f'(s) f(s)^((2-p)/(p-1)) (alpha - F(s)).
// For the built-ins the expression is decreasing in s, so the value is
// f'(0) f(0)^((2-p)/(p-1)) alpha.
double sup_kernel(const Nonlinearity& nl, const PSetting& ps, double alpha);

}  // namespace plap
