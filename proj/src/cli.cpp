#include "plap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "plap/bounds.hpp"
#include "plap/eigenvalue.hpp"
#include "plap/nonexistence.hpp"
#include "plap/numerics.hpp"
#include "plap/radial_oracle.hpp"
#include "plap/report.hpp"
#include "plap/verify.hpp"

namespace plap::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::map<std::string, std::string> parse_kv(const std::string& body,
                                            const std::string& grammar) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("malformed spec \"" + body +
                                  "\"; expected " + grammar);
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

double to_real(const std::string& s, const std::string& grammar) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number \"" + s + "\"; expected " +
                                grammar);
  }
}

}  // namespace

Nonlinearity parse_nonlinearity(const std::string& spec) {
  static const std::string grammar =
      "\"exp\" | \"gelfand:m=<real>\" | \"mems:m=<real>\"";
  if (spec == "exp") return Nonlinearity::exponential();
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (colon == std::string::npos || (head != "gelfand" && head != "mems"))
    throw std::invalid_argument("unknown nonlinearity \"" + spec +
                                "\"; expected " + grammar);
  const auto kv = parse_kv(spec.substr(colon + 1), grammar);
  const auto it = kv.find("m");
  if (it == kv.end() || kv.size() != 1)
    throw std::invalid_argument("nonlinearity spec needs exactly m=<real>; "
                                "expected " + grammar);
  const double m = to_real(it->second, grammar);
  return head == "gelfand" ? Nonlinearity::gelfand_power(m)
                           : Nonlinearity::mems_power(m);
}

DomainGeometry parse_geometry(const std::string& spec, int dim) {
  static const std::string grammar =
      "\"ball:R=<real>\" | \"measured:diam=<r>,cheb=<r>,vol=<r>,per=<r>\"";
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("unknown geometry \"" + spec +
                                "\"; expected " + grammar);
  const std::string head = spec.substr(0, colon);
  const auto kv = parse_kv(spec.substr(colon + 1), grammar);
  if (head == "ball") {
    const auto it = kv.find("R");
    if (it == kv.end() || kv.size() != 1)
      throw std::invalid_argument("ball geometry needs exactly R=<real>; "
                                  "expected " + grammar);
    return DomainGeometry::ball(to_real(it->second, grammar), dim);
  }
  if (head == "measured") {
    for (const char* key : {"diam", "cheb", "vol", "per"})
      if (!kv.count(key))
        throw std::invalid_argument(std::string("measured geometry misses ") +
                                    key + "; expected " + grammar);
    return DomainGeometry::measured(
        to_real(kv.at("diam"), grammar), to_real(kv.at("cheb"), grammar),
        to_real(kv.at("vol"), grammar), to_real(kv.at("per"), grammar), dim);
  }
  throw std::invalid_argument("unknown geometry \"" + spec + "\"; expected " +
                              grammar);
}

WeightSpec parse_weight(const std::string& spec, const DomainGeometry& dom) {
  static const std::string grammar =
      "\"const:c=<real>\" | \"power:alpha=<real>\"";
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("unknown weight \"" + spec + "\"; expected " +
                                grammar);
  const std::string head = spec.substr(0, colon);
  const auto kv = parse_kv(spec.substr(colon + 1), grammar);
  if (head == "const" && kv.count("c"))
    return WeightSpec::constant(to_real(kv.at("c"), grammar), dom);
  if (head == "power" && kv.count("alpha"))
    return WeightSpec::radial_power(to_real(kv.at("alpha"), grammar), dom);
  throw std::invalid_argument("unknown weight \"" + spec + "\"; expected " +
                              grammar);
}

std::vector<double> parse_range(const std::string& spec) {
  static const std::string grammar = "\"<v>\" | \"<v>,<v>,...\" | \"<a>..<b>\"";
  std::vector<double> out;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const double a = to_real(spec.substr(0, dots), grammar);
    const double b = to_real(spec.substr(dots + 2), grammar);
    if (b < a) throw std::invalid_argument("empty range " + spec);
    for (double v = a; v <= b + 1e-9; v += 1.0) out.push_back(v);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(to_real(item, grammar));
  if (out.empty()) throw std::invalid_argument("empty range; expected " + grammar);
  return out;
}

std::string resolve_output_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("PLAP_OUTPUT_DIR");
  if (!dir || !*dir) return path;
  std::string d(dir);
  if (d.back() != '/') d += '/';
  return d + path;
}

namespace {

struct CommonOpts {
  std::string format = "table";
  std::string output;
  bool reproducible = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("-o,--output", c.output, "write the report to this file");
  cmd->add_flag("--reproducible", c.reproducible,
                "suppress the timestamp field");
}

void deliver(const std::string& text, const CommonOpts& c, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  const std::string path = resolve_output_path(c.output);
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file " + path);
  f << text;
}

std::string render(const std::vector<BoundEntry>& entries,
                   const std::map<std::string, std::string>& config,
                   const CommonOpts& c) {
  if (c.format == "json")
    return report_to_json(entries, config, !c.reproducible);
  if (c.format == "csv") return report_to_csv(entries);
  return report_to_table(entries);
}

std::string fmt(double v) { return format_shortest(v); }

int dispatch_errors(const std::function<void()>& body, std::ostream& err) {
  try {
    body();
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const num::NumericError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const NoSolutionAtThisHeight& e) {
    err << "numerical error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"certified bounds for p-Laplacian extremal parameters"};
  app.require_subcommand(1);

  // ---- bounds ----------------------------------------------------------
  struct {
    std::string f = "exp", geom = "ball:R=1";
    double p = 2.0;
    int dim = 2;
    double lambda1 = -1.0;
    bool oracle_lambda1 = false;
    CommonOpts common;
  } b;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "extremal-parameter bounds for one problem");
  bounds_cmd->add_option("--f", b.f, "nonlinearity spec");
  bounds_cmd->add_option("--geom", b.geom, "geometry spec");
  bounds_cmd->add_option("--p", b.p, "p-Laplacian exponent");
  bounds_cmd->add_option("--dim", b.dim, "space dimension N");
  bounds_cmd->add_option("--lambda1", b.lambda1,
                         "known first eigenvalue (certified)");
  bounds_cmd->add_flag("--with-oracle-lambda1", b.oracle_lambda1,
                       "estimate lambda_1 numerically (uncertified)");
  add_common(bounds_cmd, b.common);

  // ---- eigen -----------------------------------------------------------
  struct {
    std::string geom = "ball:R=1";
    double p = 2.0;
    int dim = 2;
    bool with_oracle = false;
    CommonOpts common;
  } e;
  auto* eigen_cmd =
      app.add_subcommand("eigen", "first-eigenvalue lower bounds");
  eigen_cmd->add_option("--geom", e.geom, "geometry spec");
  eigen_cmd->add_option("--p", e.p, "p-Laplacian exponent");
  eigen_cmd->add_option("--dim", e.dim, "space dimension N");
  eigen_cmd->add_flag("--with-oracle", e.with_oracle,
                      "include the numeric lambda_1");
  add_common(eigen_cmd, e.common);

  // ---- pointwise -------------------------------------------------------
  struct {
    std::string f = "exp", geom = "ball:R=1", weight = "const:c=1";
    double p = 2.0, lambda = 1.0;
    int dim = 2, points = 50;
    CommonOpts common;
  } pw;
  auto* pw_cmd = app.add_subcommand(
      "pointwise", "pointwise supersolution lower bounds (radius table)");
  pw_cmd->add_option("--f", pw.f, "nonlinearity spec");
  pw_cmd->add_option("--geom", pw.geom, "geometry spec (ball)");
  pw_cmd->add_option("--weight", pw.weight, "weight spec");
  pw_cmd->add_option("--p", pw.p, "p-Laplacian exponent");
  pw_cmd->add_option("--dim", pw.dim, "space dimension N");
  pw_cmd->add_option("--lambda", pw.lambda, "eigenvalue parameter lambda");
  pw_cmd->add_option("--points", pw.points, "number of radii");
  add_common(pw_cmd, pw.common);

  // ---- nonexist --------------------------------------------------------
  struct {
    std::string f = "mems:m=2", geom = "ball:R=1", weight = "const:c=1";
    double p = 2.0;
    int dim = 2;
    CommonOpts common;
  } ne;
  auto* ne_cmd =
      app.add_subcommand("nonexist", "nonexistence thresholds for lambda");
  ne_cmd->add_option("--f", ne.f, "nonlinearity spec");
  ne_cmd->add_option("--geom", ne.geom, "geometry spec (ball)");
  ne_cmd->add_option("--weight", ne.weight, "weight spec");
  ne_cmd->add_option("--p", ne.p, "p-Laplacian exponent");
  ne_cmd->add_option("--dim", ne.dim, "space dimension N");
  add_common(ne_cmd, ne.common);

  // ---- mems ------------------------------------------------------------
  struct {
    double alpha = 0.0, radius = 1.0;
    int dim = 2;
    bool with_oracle = false;
    CommonOpts common;
  } mm;
  auto* mems_cmd =
      app.add_subcommand("mems", "pull-in voltage sandwich for the MEMS model");
  mems_cmd->add_option("--alpha", mm.alpha, "weight exponent alpha >= 0");
  mems_cmd->add_option("--dim", mm.dim, "space dimension N");
  mems_cmd->add_option("--radius", mm.radius, "ball radius R");
  mems_cmd->add_flag("--with-oracle", mm.with_oracle,
                     "also compute the numeric pull-in value");
  add_common(mems_cmd, mm.common);

  // ---- oracle ----------------------------------------------------------
  struct {
    std::string f = "exp";
    double p = 2.0, radius = 1.0, tol = 1e-4, weight_alpha = 0.0;
    int dim = 2, points = 101;
    CommonOpts common;
  } orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "radial shooting oracle");
  oracle_cmd->require_subcommand(1);
  auto* o_star = oracle_cmd->add_subcommand("lambda-star",
                                            "numeric extremal parameter");
  auto* o_l1 = oracle_cmd->add_subcommand("lambda1", "numeric first eigenvalue");
  auto* o_tor = oracle_cmd->add_subcommand(
      "torsion", "radial torsion solve vs the closed form");
  auto* o_curve =
      oracle_cmd->add_subcommand("curve", "bifurcation curve (u0, lambda)");
  for (CLI::App* c : {o_star, o_l1, o_tor, o_curve}) {
    c->add_option("--p", orc.p, "p-Laplacian exponent");
    c->add_option("--dim", orc.dim, "space dimension N");
    c->add_option("--radius", orc.radius, "ball radius R");
  }
  o_star->add_option("--f", orc.f, "nonlinearity spec");
  o_curve->add_option("--f", orc.f, "nonlinearity spec");
  o_star->add_option("--tol", orc.tol, "relative tolerance");
  o_tor->add_option("--weight-alpha", orc.weight_alpha,
                    "radial weight exponent (0 = none)");
  o_tor->add_option("--points", orc.points, "number of radii");
  for (CLI::App* c : {o_star, o_l1, o_tor, o_curve}) {
    CommonOpts* co = &orc.common;
    c->add_option("--format", co->format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    c->add_option("-o,--output", co->output, "write to file");
    c->add_flag("--reproducible", co->reproducible, "suppress timestamp");
  }

  // ---- sweep -----------------------------------------------------------
  struct {
    std::string f = "exp", p_range = "2", dim_range = "1..10", m_range,
                q_range;
    bool with_oracle = false;
    CommonOpts common;
  } sw;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "bound tables over parameter ranges");
  sweep_cmd->add_option("--f", sw.f, "family: exp | gelfand | mems");
  sweep_cmd->add_option("--p", sw.p_range, "p values (list or a..b)");
  sweep_cmd->add_option("--dim", sw.dim_range, "N values (list or a..b)");
  sweep_cmd->add_option("--m", sw.m_range, "m values for power families");
  sweep_cmd->add_option("--q", sw.q_range, "q values (inner power sweep)");
  sweep_cmd->add_flag("--with-oracle", sw.with_oracle,
                      "add a numeric lambda* column");
  add_common(sweep_cmd, sw.common);

  // ---- verify ----------------------------------------------------------
  struct {
    std::string suite = "all", grid = "default";
  } vf;
  auto* verify_cmd =
      app.add_subcommand("verify", "oracle consistency suites");
  verify_cmd->add_option("--suite", vf.suite, "sandwich | torsion | eigen | all")
      ->check(CLI::IsMember({"sandwich", "torsion", "eigen", "all"}));
  verify_cmd->add_option("--grid", vf.grid, "default | small")
      ->check(CLI::IsMember({"default", "small"}));

  // ---- parse -----------------------------------------------------------
  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& pe) {
    std::ostringstream os;
    if (pe.get_exit_code() == 0) {
      app.exit(pe, out, err);
      return 0;
    }
    err << "error: " << pe.what() << "\n";
    return 2;
  }

  // ---- execute ---------------------------------------------------------
  if (bounds_cmd->parsed()) {
    return dispatch_errors(
        [&] {
          const PSetting ps(b.p, b.dim);
          const Nonlinearity nl = parse_nonlinearity(b.f);
          const DomainGeometry geom = parse_geometry(b.geom, b.dim);
          double lam1 = b.lambda1;
          bool certified = lam1 > 0.0;
          if (b.oracle_lambda1) {
            if (!geom.is_ball())
              throw std::invalid_argument(
                  "--with-oracle-lambda1 needs a ball geometry");
            lam1 = lambda1_numeric(ps, geom.ball_shape().radius);
            certified = false;
          }
          const BoundReport report =
              make_bound_report(nl, ps, geom, lam1, certified);
          std::map<std::string, std::string> config{
              {"command", "bounds"}, {"f", nl.spec_string()},
              {"geom", geom.spec_string()}, {"p", fmt(b.p)},
              {"dim", std::to_string(b.dim)}};
          if (lam1 > 0.0) config["lambda1"] = fmt(lam1);
          deliver(render(report.entries, config, b.common), b.common, out);
        },
        err);
  }

  if (eigen_cmd->parsed()) {
    return dispatch_errors(
        [&] {
          const PSetting ps(e.p, e.dim);
          const DomainGeometry geom = parse_geometry(e.geom, e.dim);
          EigenBoundReport report = best_lower(geom, ps);
          std::map<std::string, std::string> config{
              {"command", "eigen"}, {"geom", geom.spec_string()},
              {"p", fmt(e.p)}, {"dim", std::to_string(e.dim)},
              {"best", report.best_name}};
          if (report.p_inf_root_limit)
            config["p_inf_root_limit"] = fmt(*report.p_inf_root_limit);
          if (e.with_oracle) {
            if (!geom.is_ball())
              throw std::invalid_argument("--with-oracle needs a ball");
            const double lam1 =
                lambda1_numeric(ps, geom.ball_shape().radius);
            config["oracle_lambda1"] = fmt(lam1);
            report.entries.push_back({"lambda1 (numeric, uncertified)",
                                      BoundKind::Lower, lam1,
                                      "radial shooting", false});
          }
          deliver(render(report.entries, config, e.common), e.common, out);
        },
        err);
  }

  if (pw_cmd->parsed()) {
    return dispatch_errors(
        [&] {
          const PSetting ps(pw.p, pw.dim);
          const Nonlinearity nl = parse_nonlinearity(pw.f);
          const DomainGeometry geom = parse_geometry(pw.geom, pw.dim);
          const WeightSpec w = parse_weight(pw.weight, geom);
          if (pw.points < 2)
            throw std::invalid_argument("pointwise needs at least 2 radii");
          const double R = w.ball_radius();
          std::ostringstream os;
          os << "radius,lower_bound,no_supersolution\n";
          for (int i = 0; i < pw.points; ++i) {
            const double r = R * i / (pw.points - 1);
            const auto bnd = pointwise_lower(nl, ps, w, pw.lambda, r);
            os << format_shortest(r) << ','
               << format_shortest(bnd.no_supersolution ? 0.0 : bnd.value)
               << ',' << (bnd.no_supersolution ? "true" : "false") << '\n';
          }
          deliver(os.str(), pw.common, out);
        },
        err);
  }

  if (ne_cmd->parsed()) {
    return dispatch_errors(
        [&] {
          const PSetting ps(ne.p, ne.dim);
          const Nonlinearity nl = parse_nonlinearity(ne.f);
          const DomainGeometry geom = parse_geometry(ne.geom, ne.dim);
          const WeightSpec w = parse_weight(ne.weight, geom);
          std::vector<BoundEntry> entries;
          const auto thr = threshold_general(nl, ps, w);
          entries.push_back({"nonexistence threshold (distance form)",
                             BoundKind::Upper, thr.lambda_bar, thr.source,
                             true});
          if (w.kind == WeightKind::RadialPower) {
            const auto thr2 = threshold_radial_weight(
                nl, ps, w.param, w.ball_radius());
            entries.push_back({"nonexistence threshold (weighted torsion)",
                               BoundKind::Upper, thr2.lambda_bar, thr2.source,
                               true});
          }
          std::map<std::string, std::string> config{
              {"command", "nonexist"}, {"f", nl.spec_string()},
              {"geom", geom.spec_string()}, {"weight", ne.weight},
              {"p", fmt(ne.p)}, {"dim", std::to_string(ne.dim)}};
          deliver(render(entries, config, ne.common), ne.common, out);
        },
        err);
  }

  if (mems_cmd->parsed()) {
    return dispatch_errors(
        [&] {
          const auto sandwich = mems_sandwich(mm.alpha, mm.dim, mm.radius);
          std::map<std::string, std::string> config{
              {"command", "mems"}, {"alpha", fmt(mm.alpha)},
              {"dim", std::to_string(mm.dim)}, {"radius", fmt(mm.radius)}};
          std::vector<BoundEntry> entries{
              {"pull-in lower", BoundKind::Lower, sandwich.lower,
               "quoted comparison bound", true},
              {"pull-in upper", BoundKind::Upper, sandwich.upper,
               "supersolution threshold", true}};
          double oracle = kInf;
          if (mm.with_oracle) {
            const PSetting ps(2.0, mm.dim);
            const Nonlinearity nl = Nonlinearity::mems_power(2.0);
            oracle = lambda_star_numeric(ps, nl, mm.radius, 1e-4, mm.alpha)
                         .lambda_star;
            config["oracle_lambda_star"] = fmt(oracle);
          }
          if (mm.common.format == "table") {
            std::ostringstream os;
            os << "pull-in sandwich (alpha=" << mm.alpha << ", N=" << mm.dim
               << ", R=" << mm.radius << "):\n  "
               << format_scientific(sandwich.lower)
               << " <= lambda* <= " << format_scientific(sandwich.upper)
               << "\n";
            if (mm.with_oracle)
              os << "  oracle lambda* = " << format_scientific(oracle) << "\n";
            deliver(os.str(), mm.common, out);
          } else {
            deliver(render(entries, config, mm.common), mm.common, out);
          }
        },
        err);
  }

  if (oracle_cmd->parsed()) {
    return dispatch_errors(
        [&] {
          const PSetting ps(orc.p, orc.dim);
          const double R = orc.radius;
          if (o_star->parsed()) {
            const Nonlinearity nl = parse_nonlinearity(orc.f);
            const auto curve = lambda_star_numeric(ps, nl, R, orc.tol);
            if (!curve.converged)
              throw num::NumericError(
                  "lambda* sweep did not converge (possibly infinite)");
            std::map<std::string, std::string> config{
                {"command", "oracle lambda-star"}, {"f", nl.spec_string()},
                {"p", fmt(orc.p)}, {"dim", std::to_string(orc.dim)},
                {"radius", fmt(R)}, {"turning_u0", fmt(curve.turning_u0)}};
            std::vector<BoundEntry> entries{
                {"lambda_star (numeric)", BoundKind::Lower, curve.lambda_star,
                 "radial shooting sweep", false}};
            deliver(render(entries, config, orc.common), orc.common, out);
          } else if (o_l1->parsed()) {
            const double lam1 = lambda1_numeric(ps, R);
            std::map<std::string, std::string> config{
                {"command", "oracle lambda1"}, {"p", fmt(orc.p)},
                {"dim", std::to_string(orc.dim)}, {"radius", fmt(R)}};
            std::vector<BoundEntry> entries{
                {"lambda1 (numeric)", BoundKind::Lower, lam1,
                 "radial shooting", false}};
            deliver(render(entries, config, orc.common), orc.common, out);
          } else if (o_tor->parsed()) {
            const double a = orc.weight_alpha;
            const double u0 = a == 0.0
                                  ? torsion_ball(ps, R, 0.0)
                                  : weighted_torsion_radial(ps, R, a, 0.0);
            ShootOptions opts;
            opts.n_samples = orc.points;
            opts.rel_tol = 1e-11;
            const RadialSolution sol =
                shoot(ps, RadialRhs::torsion(a), 1.0, u0, R, opts);
            std::ostringstream os;
            os << "r,numeric,closed_form\n";
            for (const auto& s : sol.samples) {
              const double exact =
                  a == 0.0 ? torsion_ball(ps, R, s.r)
                           : weighted_torsion_radial(ps, R, a, s.r);
              os << format_shortest(s.r) << ',' << format_shortest(s.u) << ','
                 << format_shortest(exact) << '\n';
            }
            deliver(os.str(), orc.common, out);
          } else {
            const Nonlinearity nl = parse_nonlinearity(orc.f);
            const auto curve = lambda_star_numeric(ps, nl, R, orc.tol);
            std::ostringstream os;
            os << "u0,lambda\n";
            for (const auto& [u0, lam] : curve.points)
              os << format_shortest(u0) << ',' << format_shortest(lam) << '\n';
            deliver(os.str(), orc.common, out);
          }
        },
        err);
  }

  if (sweep_cmd->parsed()) {
    return dispatch_errors(
        [&] {
          if (sw.f != "exp" && sw.f != "gelfand" && sw.f != "mems")
            throw std::invalid_argument(
                "sweep family must be exp | gelfand | mems");
          const auto p_list = parse_range(sw.p_range);
          const auto dim_list = parse_range(sw.dim_range);
          std::vector<double> m_list;
          if (!sw.m_range.empty()) m_list = parse_range(sw.m_range);
          if (sw.f != "exp" && m_list.empty())
            throw std::invalid_argument("family " + sw.f +
                                        " needs --m values");
          if (sw.f == "exp") m_list = {0.0};
          std::vector<double> q_list{1.0};
          if (!sw.q_range.empty()) q_list = parse_range(sw.q_range);

          std::ostringstream os;
          os << "f,p,N,m,q,lower,upper,branch,oracle,gap,error\n";
          for (double p : p_list)
            for (double dN : dim_list)
              for (double m : m_list)
                for (double q : q_list) {
                  const int N = int(std::lround(dN));
                  os << sw.f << ',' << format_shortest(p) << ',' << N << ','
                     << (sw.f == "exp" ? "" : format_shortest(m)) << ','
                     << format_shortest(q) << ',';
                  // Row cells are assembled first so a failure cannot leave
                  // a half-written row behind.
                  std::string cells;
                  try {
                    const PSetting ps(p, N);
                    Nonlinearity nl =
                        sw.f == "exp"
                            ? Nonlinearity::exponential()
                            : (sw.f == "gelfand"
                                   ? Nonlinearity::gelfand_power(m)
                                   : Nonlinearity::mems_power(m));
                    double lower, upper;
                    int branch = 0;
                    if (q == 1.0) {
                      ClosedFormBounds cf;
                      if (sw.f == "exp")
                        cf = closed_form_exp(ps);
                      else if (sw.f == "gelfand")
                        cf = closed_form_gelfand(ps, m);
                      else
                        cf = closed_form_mems(ps, m);
                      lower = cf.lower;
                      upper = cf.upper;
                      branch = cf.branch;
                    } else {
                      const auto rows = q_limit_study(nl, ps, {q});
                      lower = rows[0].lower;
                      upper = rows[0].upper;
                    }
                    std::ostringstream cs;
                    cs << format_shortest(lower) << ','
                       << format_shortest(upper) << ',';
                    if (branch > 0) cs << branch;
                    cs << ',';
                    if (sw.with_oracle) {
                      const Nonlinearity target =
                          q == 1.0 ? nl : compose_power(nl, q);
                      const auto curve = lambda_star_numeric(ps, target, 1.0);
                      cs << format_shortest(curve.lambda_star);
                    }
                    cs << ',' << format_shortest(upper - lower) << ',';
                    cells = cs.str();
                  } catch (const std::exception& ex) {
                    std::string msg = ex.what();
                    std::replace(msg.begin(), msg.end(), ',', ';');
                    cells = ",,,,," + msg;
                  }
                  os << cells << '\n';
                }
          deliver(os.str(), sw.common, out);
        },
        err);
  }

  if (verify_cmd->parsed()) {
    const bool small = vf.grid == "small";
    std::vector<plap::verify::CheckResult> results;
    int code = dispatch_errors(
        [&] {
          if (vf.suite == "torsion" || vf.suite == "all") {
            auto r = plap::verify::torsion_suite(small);
            results.insert(results.end(), r.begin(), r.end());
          }
          if (vf.suite == "eigen" || vf.suite == "all") {
            auto r = plap::verify::eigen_suite(small);
            results.insert(results.end(), r.begin(), r.end());
          }
          if (vf.suite == "sandwich" || vf.suite == "all") {
            auto r = plap::verify::sandwich_suite(small);
            results.insert(results.end(), r.begin(), r.end());
          }
        },
        err);
    for (const auto& r : results)
      out << (r.passed ? "[ok]   " : "[FAIL] ") << r.name
          << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
    const bool ok = plap::verify::all_passed(results);
    out << (ok ? "verify: all checks passed\n" : "verify: FAILURES\n");
    if (code != 0) return code;
    return ok ? 0 : 3;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace plap::cli
