#include "plap/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plap/numerics.hpp"

namespace plap {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_gelfand_power(const Nonlinearity& nl, const PSetting& ps) {
  if (nl.kind() == FKind::GelfandPower && !(nl.power() > ps.pm1()))
    throw std::invalid_argument(
        "gelfand nonlinearity requires m > p-1 at this p");
}
}  // namespace

Nonlinearity Nonlinearity::exponential() {
  Nonlinearity nl;
  nl.kind_ = FKind::Exp;
  nl.a_f_ = kInf;
  nl.f0_ = 1.0;
  nl.f_ = [](double t) { return std::exp(t); };
  nl.f_prime_ = [](double t) { return std::exp(t); };
  nl.label_ = "exp";
  return nl;
}

Nonlinearity Nonlinearity::gelfand_power(double m) {
  if (!(m > 0.0)) throw std::invalid_argument("gelfand power: requires m > 0");
  Nonlinearity nl;
  nl.kind_ = FKind::GelfandPower;
  nl.m_ = m;
  nl.a_f_ = kInf;
  nl.f0_ = 1.0;
  nl.f_ = [m](double t) { return std::pow(1.0 + t, m); };
  nl.f_prime_ = [m](double t) { return m * std::pow(1.0 + t, m - 1.0); };
  nl.label_ = "gelfand";
  return nl;
}

Nonlinearity Nonlinearity::mems_power(double m) {
  if (!(m > 0.0)) throw std::invalid_argument("mems power: requires m > 0");
  Nonlinearity nl;
  nl.kind_ = FKind::MemsPower;
  nl.m_ = m;
  nl.a_f_ = 1.0;
  nl.f0_ = 1.0;
  nl.f_ = [m](double t) { return std::pow(1.0 - t, -m); };
  nl.f_prime_ = [m](double t) { return m * std::pow(1.0 - t, -m - 1.0); };
  nl.label_ = "mems";
  return nl;
}

Nonlinearity Nonlinearity::custom(std::function<double(double)> f,
                                  std::function<double(double)> f_prime,
                                  double domain_end, std::string label) {
  if (!f || !f_prime)
    throw std::invalid_argument("custom nonlinearity: f and f' are required");
  if (!(domain_end > 0.0))
    throw std::invalid_argument("custom nonlinearity: requires a_f > 0");
  Nonlinearity nl;
  nl.kind_ = FKind::Custom;
  nl.a_f_ = domain_end;
  nl.f_ = std::move(f);
  nl.f_prime_ = std::move(f_prime);
  nl.f0_ = nl.f_(0.0);
  nl.label_ = std::move(label);
  // Spot-check monotonicity and positivity on a sample of the domain.
  const double hi = std::isfinite(domain_end) ? domain_end : 100.0;
  for (int i = 1; i <= 24; ++i) {
    const double t = hi * (i / 25.0);
    if (!(nl.f_(t) > 0.0))
      throw std::invalid_argument(
          "custom nonlinearity: f must be positive for t > 0");
    if (nl.f_prime_(t) < 0.0)
      throw std::invalid_argument(
          "custom nonlinearity: f must be nondecreasing");
  }
  return nl;
}

void Nonlinearity::check_domain(double t) const {
  if (!(t >= 0.0) || t >= a_f_)
    throw std::domain_error("nonlinearity evaluated outside [0, a_f)");
}

double Nonlinearity::value(double t) const {
  check_domain(t);
  return f_(t);
}

double Nonlinearity::derivative(double t) const {
  check_domain(t);
  return f_prime_(t);
}

std::string Nonlinearity::spec_string() const {
  std::ostringstream os;
  switch (kind_) {
    case FKind::Exp:
      return "exp";
    case FKind::GelfandPower:
      os << "gelfand:m=" << m_;
      return os.str();
    case FKind::MemsPower:
      os << "mems:m=" << m_;
      return os.str();
    case FKind::Custom:
      return label_;
  }
  return label_;
}

double big_F(const Nonlinearity& nl, const PSetting& ps, double t) {
  if (!(t >= 0.0) || t > nl.domain_end())
    throw std::domain_error("big_F: t outside [0, a_f)");
  if (t == 0.0) return 0.0;
  const double pm1 = ps.pm1();
  const double m = nl.power();
  switch (nl.kind()) {
    case FKind::Exp:
      return pm1 * (1.0 - std::exp(-t / pm1));
    case FKind::GelfandPower: {
      require_gelfand_power(nl, ps);
      const double e = (m + 1.0 - ps.p) / pm1;
      return (pm1 / (m + 1.0 - ps.p)) * (1.0 - std::pow(1.0 + t, -e));
    }
    case FKind::MemsPower: {
      const double e = (m + ps.p - 1.0) / pm1;
      return (pm1 / (m + ps.p - 1.0)) * (1.0 - std::pow(1.0 - t, e));
    }
    case FKind::Custom:
      break;
  }
  const double inv = -1.0 / pm1;
  return num::integrate(
      [&nl, inv](double s) { return std::pow(nl.value(s), inv); }, 0.0, t);
}

double F_infinity_norm(const Nonlinearity& nl, const PSetting& ps) {
  const double pm1 = ps.pm1();
  const double m = nl.power();
  switch (nl.kind()) {
    case FKind::Exp:
      return pm1;
    case FKind::GelfandPower:
      require_gelfand_power(nl, ps);
      return pm1 / (m + 1.0 - ps.p);
    case FKind::MemsPower:
      return pm1 / (m + ps.p - 1.0);
    case FKind::Custom:
      break;
  }
  const double inv = -1.0 / pm1;
  const auto integrand = [&nl, inv](double s) {
    return std::pow(nl.value(s), inv);
  };
  if (std::isfinite(nl.domain_end())) {
    // The integrand is bounded near a_f whenever f stays away from 0 there;
    // a blow-up of f only helps integrability.
    const double a = nl.domain_end();
    const auto capped = [&](double s) {
      return integrand(std::min(s, a * (1.0 - 1e-15)));
    };
    return num::integrate(capped, 0.0, a, 1e-10);
  }
  return num::integrate_to_infinity(integrand, 0.0);
}

double big_F_inverse(const Nonlinearity& nl, const PSetting& ps, double y) {
  const double norm = F_infinity_norm(nl, ps);
  if (!(y >= 0.0) || y > norm * (1.0 + 1e-12))
    throw std::domain_error("big_F_inverse: y outside [0, ||F||_inf]");
  if (y == 0.0) return 0.0;
  y = std::min(y, norm);
  const double pm1 = ps.pm1();
  const double m = nl.power();
  switch (nl.kind()) {
    case FKind::Exp:
      return -pm1 * std::log1p(-y / pm1);
    case FKind::GelfandPower: {
      require_gelfand_power(nl, ps);
      const double c = (m + 1.0 - ps.p) / pm1;
      return std::pow(std::max(1.0 - y * c, 0.0), -1.0 / c) - 1.0;
    }
    case FKind::MemsPower: {
      const double c = (m + ps.p - 1.0) / pm1;
      return 1.0 - std::pow(std::max(1.0 - y * c, 0.0), 1.0 / c);
    }
    case FKind::Custom:
      break;
  }
  // Monotone bracketing: F is strictly increasing.
  double hi = 1.0;
  const double a_f = nl.domain_end();
  if (std::isfinite(a_f)) {
    hi = a_f * (1.0 - 1e-14);
  } else {
    while (big_F(nl, ps, hi) < y) {
      hi *= 2.0;
      if (hi > 1e300) return kInf;
    }
  }
  const double t = num::find_root(
      [&](double x) { return big_F(nl, ps, x) - y; }, 0.0, hi, 1e-14);
  return t;
}

double alpha_fp(const Nonlinearity& nl, const PSetting& ps) {
  const double pm1 = ps.pm1();
  const double m = nl.power();
  switch (nl.kind()) {
    case FKind::Exp:
      return std::pow(pm1 / std::exp(1.0), pm1);
    case FKind::GelfandPower:
      require_gelfand_power(nl, ps);
      return std::pow(pm1, pm1) * std::pow(m + 1.0 - ps.p, m + 1.0 - ps.p) *
             std::pow(m, -m);
    case FKind::MemsPower:
      return std::pow(pm1, pm1) * std::pow(m, m) *
             std::pow(m + ps.p - 1.0, 1.0 - m - ps.p);
    case FKind::Custom:
      break;
  }
  const auto ratio = [&](double t) {
    return std::pow(t, pm1) / nl.value(t);
  };
  if (std::isfinite(nl.domain_end())) {
    const double a = nl.domain_end();
    return num::maximize(ratio, a * 1e-12, a * (1.0 - 1e-12), 257).value;
  }
  auto r = num::maximize_log_axis(ratio, 1e-15, 1e8, 1e60);
  return r.unbounded ? kInf : r.best.value;
}

double sup_kernel(const Nonlinearity& nl, const PSetting& ps, double alpha) {
  const double norm = F_infinity_norm(nl, ps);
  if (!(alpha > 0.0) || alpha > norm * (1.0 + 1e-12))
    throw std::domain_error("sup_kernel: alpha outside (0, ||F||_inf]");
  switch (nl.kind()) {
    case FKind::Exp:
      return alpha;
    case FKind::GelfandPower:
      require_gelfand_power(nl, ps);
      return nl.power() * alpha;
    case FKind::MemsPower:
      return nl.power() * alpha;
    case FKind::Custom:
      break;
  }
  const double e = (2.0 - ps.p) / ps.pm1();
  const auto kernel = [&](double s) {
    const double fs = nl.value(s);
    return nl.derivative(s) * std::pow(fs, e) * (alpha - big_F(nl, ps, s));
  };
  const double s_hi = big_F_inverse(nl, ps, std::min(alpha, norm) *
                                                (1.0 - 1e-13));
  if (!(s_hi > 0.0)) return kernel(0.0);
  // Include the left endpoint: for monotone-decreasing kernels the sup
  // sits at s -> 0+.
  double best = kernel(0.0);
  best = std::max(best, num::maximize(kernel, 0.0, s_hi, 257).value);
  return best;
}

}  // namespace plap
