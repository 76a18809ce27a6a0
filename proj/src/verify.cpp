#include "plap/verify.hpp"

#include <cmath>
#include <sstream>

#include "plap/bounds.hpp"
#include "plap/eigenvalue.hpp"
#include "plap/geometry.hpp"
#include "plap/radial_oracle.hpp"

namespace plap::verify {

namespace {

std::string case_tag(const std::string& f, double p, int N) {
  std::ostringstream os;
  os << f << " p=" << p << " N=" << N;
  return os.str();
}

Nonlinearity family(const std::string& name) {
  if (name == "exp") return Nonlinearity::exponential();
  if (name == "gelfand m=3") return Nonlinearity::gelfand_power(3.0);
  if (name == "gelfand m=5") return Nonlinearity::gelfand_power(5.0);
  if (name == "mems m=2") return Nonlinearity::mems_power(2.0);
  throw std::invalid_argument("unknown family " + name);
}

}  // namespace

std::vector<CheckResult> torsion_suite(bool small_grid) {
  std::vector<CheckResult> out;
  const std::vector<double> ps_list =
      small_grid ? std::vector<double>{2.0} : std::vector<double>{1.5, 2.0, 3.0, 4.0};
  const std::vector<int> dims =
      small_grid ? std::vector<int>{1, 2} : std::vector<int>{1, 2, 3, 5, 10};
  const double R = 1.0;

  for (double p : ps_list) {
    for (int N : dims) {
      const PSetting ps(p, N);
      CheckResult c;
      c.name = case_tag("torsion", p, N);
      const double u0 = torsion_ball(ps, R, 0.0);
      ShootOptions opts;
      opts.n_samples = 101;
      opts.rel_tol = 1e-11;
      const RadialSolution sol =
          shoot(ps, RadialRhs::torsion(), 1.0, u0, R, opts);
      double worst = 0.0;
      for (const auto& s : sol.samples) {
        const double exact = torsion_ball(ps, R, s.r);
        worst = std::max(worst,
                         std::abs(s.u - exact) / std::max(1e-12, u0));
      }
      c.passed = worst <= 1e-6 && sol.converged;
      std::ostringstream os;
      os << "max rel dev " << worst;
      c.detail = os.str();
      out.push_back(std::move(c));
    }
  }

  const std::vector<double> alphas =
      small_grid ? std::vector<double>{1.0} : std::vector<double>{0.5, 1.0, 2.0};
  for (double a : alphas) {
    for (double p : (small_grid ? std::vector<double>{2.0}
                                : std::vector<double>{1.5, 2.0, 3.0})) {
      for (int N : {2, 3}) {
        const PSetting ps(p, N);
        CheckResult c;
        std::ostringstream tag;
        tag << "weighted torsion alpha=" << a << " p=" << p << " N=" << N;
        c.name = tag.str();
        const double u0 = weighted_torsion_radial(ps, R, a, 0.0);
        ShootOptions opts;
        opts.n_samples = 101;
        opts.rel_tol = 1e-11;
        const RadialSolution sol =
            shoot(ps, RadialRhs::torsion(a), 1.0, u0, R, opts);
        double worst = 0.0;
        for (const auto& s : sol.samples) {
          const double exact = weighted_torsion_radial(ps, R, a, s.r);
          worst = std::max(worst,
                           std::abs(s.u - exact) / std::max(1e-12, u0));
        }
        c.passed = worst <= 1e-6 && sol.converged;
        std::ostringstream os;
        os << "max rel dev " << worst;
        c.detail = os.str();
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<CheckResult> sandwich_suite(bool small_grid, double oracle_tol) {
  std::vector<CheckResult> out;
  const std::vector<std::string> families =
      small_grid
          ? std::vector<std::string>{"exp", "mems m=2"}
          : std::vector<std::string>{"exp", "gelfand m=3", "gelfand m=5",
                                     "mems m=2"};
  const std::vector<double> ps_list =
      small_grid ? std::vector<double>{2.0} : std::vector<double>{1.5, 2.0, 3.0};
  const std::vector<int> dims = small_grid ? std::vector<int>{1, 2, 3}
                                           : std::vector<int>{1, 2, 3, 5, 10};
  for (const auto& fname : families) {
    const Nonlinearity nl = family(fname);
    for (double p : ps_list) {
      for (int N : dims) {
        const PSetting ps(p, N);
        CheckResult c;
        c.name = case_tag(fname, p, N);
        try {
          const DomainGeometry ball = DomainGeometry::ball(1.0, N);
          const double lower = lower_ball(nl, ps);
          const double upper = upper_torsion(nl, ps, ball);
          const auto curve = lambda_star_numeric(ps, nl, 1.0, oracle_tol);
          const double star = curve.lambda_star;
          const double slack = 4.0 * oracle_tol * star;
          const bool ok =
              curve.converged && lower <= star + slack && star <= upper + slack;
          std::ostringstream os;
          os << lower << " <= " << star << " <= " << upper;
          c.detail = os.str();
          c.passed = ok;
        } catch (const std::exception& e) {
          c.passed = false;
          c.detail = e.what();
        }
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<CheckResult> eigen_suite(bool small_grid) {
  std::vector<CheckResult> out;
  const std::vector<double> ps_list =
      small_grid ? std::vector<double>{2.0} : std::vector<double>{1.5, 2.0, 3.0};
  const std::vector<int> dims = small_grid ? std::vector<int>{1, 2}
                                           : std::vector<int>{1, 2, 3, 5, 10};
  for (double p : ps_list) {
    for (int N : dims) {
      const PSetting ps(p, N);
      CheckResult c;
      c.name = case_tag("eigen domination", p, N);
      const DomainGeometry ball = DomainGeometry::ball(1.0, N);
      const double lam1 = lambda1_numeric(ps, 1.0);
      const auto report = best_lower(ball, ps);
      c.passed = report.best_value <= lam1 * (1.0 + 1e-6);
      std::ostringstream os;
      os << "best " << report.best_name << " = " << report.best_value
         << " vs lambda1 " << lam1;
      c.detail = os.str();
      out.push_back(std::move(c));
    }
  }
  // Piecewise beats Np for 1 < p <= 2 in every listed dimension.
  for (double p : {1.2, 1.5, 2.0}) {
    CheckResult c;
    c.name = case_tag("piecewise >= Np", p, 0);
    c.passed = true;
    for (int N = 1; N <= 15; ++N) {
      const PSetting ps(p, N);
      if (piecewise_lower_ball(ps, 1.0) < np_comparison(ps, 1.0) * (1 - 1e-12))
        c.passed = false;
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace plap::verify
