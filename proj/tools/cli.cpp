#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bicheb/calculus.hpp"
#include "bicheb/cheb2.hpp"
#include "bicheb/error.hpp"
#include "bicheb/expr.hpp"
#include "bicheb/interp.hpp"
#include "bicheb/sparse.hpp"

namespace bicheb::cli {

namespace {

struct RunConfig {
  std::string expression;
  std::vector<double> domain;  // xlo, xhi, ylo, yhi; empty means [-1, 1]^2
  double tol = 1e-15;
  bool relative_tol = false;
  int max_n = 8192;
  bool pure = false;
  std::vector<int> truncate;
  std::string input;
  std::string output;
  std::vector<std::string> points;
  std::string points_file;
  int grid = 50;
  std::vector<double> region;
  std::string reference;
  std::string axis = "x";
  int n = 0;
  int m = 0;
  bool verify = false;
};

Domain2 to_domain(const std::vector<double>& v, const Domain2& fallback = {}) {
  if (v.empty()) return fallback;
  Domain2 d{v[0], v[1], v[2], v[3]};
  d.validate();
  return d;
}

Function2 as_function(const expr::Expression& e) {
  return [e](double x, double y) { return e(x, y); };
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  out.back() = hi;
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  return f;
}

Cheb2 build(const RunConfig& cfg, const Function2& f) {
  BuildOptions opts;
  opts.tol = cfg.tol;
  opts.relative_tol = cfg.relative_tol;
  opts.max_degree = cfg.max_n;
  opts.initial_degree = std::min(8, cfg.max_n);
  opts.parallel_sampling = cfg.pure;
  return build_adaptive(f, to_domain(cfg.domain), opts);
}

int cmd_approx(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto e = expr::Expression::parse(cfg.expression);
  const Function2 f = as_function(e);

  const auto start = std::chrono::steady_clock::now();
  Cheb2 c = build(cfg, f);
  if (!cfg.truncate.empty()) c = c.truncated(cfg.truncate[0], cfg.truncate[1]);
  const SparseCoeffs sparse = to_sparse(c);
  const double indicator = parseval_indicator(c, f);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  save_file(sparse, cfg.output);
  out << "degree_x: " << sparse.degree_x << "\n"
      << "degree_y: " << sparse.degree_y << "\n"
      << "nonzeros: " << sparse.entries.size() << "\n"
      << "indicator: " << format_real(indicator) << "\n";
  err << "wall_time_s: " << elapsed.count() << "\n";
  return kOk;
}

std::pair<double, double> parse_point(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  double x = 0, y = 0;
  std::string rest;
  if (!(in >> x >> y) || (in >> rest))
    throw ValidationError("malformed point '" + text + "', expected x,y");
  return {x, y};
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const Cheb2 c = from_sparse(load_file(cfg.input));

  std::vector<std::pair<double, double>> points;
  for (const auto& p : cfg.points) points.push_back(parse_point(p));
  if (!cfg.points_file.empty()) {
    std::ifstream in(cfg.points_file);
    if (!in) throw IoError("cannot open " + cfg.points_file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
      points.push_back(parse_point(line));
    }
  }

  if (!points.empty()) {
    for (const auto& [x, y] : points) {
      try {
        out << format_real(evaluate_matrix(c, x, y)) << "\n";
      } catch (const DomainError&) {
        throw DomainError("point (" + format_real(x) + ", " + format_real(y) +
                          ") lies outside " + c.domain().to_string());
      }
    }
    return kOk;
  }

  // Grid mode.
  const Domain2 region = to_domain(cfg.region, c.domain());
  const auto xs = linspace(region.xlo, region.xhi, cfg.grid);
  const auto ys = linspace(region.ylo, region.yhi, cfg.grid);
  if (cfg.reference.empty()) {
    for (double x : xs)
      for (double y : ys) out << format_real(evaluate_matrix(c, x, y)) << "\n";
    return kOk;
  }
  const auto ref = expr::Expression::parse(cfg.reference);
  double max_err = 0.0;
  for (double x : xs)
    for (double y : ys) max_err = std::max(max_err, std::abs(evaluate_matrix(c, x, y) - ref(x, y)));
  out << "max_abs_error: " << format_real(max_err) << "\n";
  return kOk;
}

int cmd_integrate(const RunConfig& cfg, std::ostream& out) {
  std::optional<Cheb2> c;
  if (!cfg.input.empty()) {
    c = from_sparse(load_file(cfg.input));
  } else {
    const auto e = expr::Expression::parse(cfg.expression);
    c = build(cfg, as_function(e));
  }
  out << format_real(integrate(*c)) << "\n";
  return kOk;
}

int cmd_diff(const RunConfig& cfg) {
  const Cheb2 c = from_sparse(load_file(cfg.input));
  const Cheb2 d = cfg.axis == "x" ? diff_x(c) : diff_y(c);
  save_file(to_sparse(d), cfg.output);
  return kOk;
}

int cmd_interp(const RunConfig& cfg, std::ostream& out) {
  const auto e = expr::Expression::parse(cfg.expression);
  const Function2 f = as_function(e);
  const Domain2 domain = to_domain(cfg.domain);
  const InterpCoeffs ic = lagrange_cheb_coeffs(f, cfg.n, cfg.m, domain);
  const Cheb2 c = to_cheb2(ic, domain, cfg.tol);
  save_file(to_sparse(c), cfg.output);

  if (!cfg.verify) return kOk;
  const LobattoGrid gx = lobatto_grid(cfg.n);
  const LobattoGrid gy = lobatto_grid(cfg.m);
  double residual = 0.0;
  for (double u : gx.nodes) {
    for (double v : gy.nodes) {
      const double x = domain.to_x(u);
      const double y = domain.to_y(v);
      residual = std::max(residual, std::abs(evaluate_matrix(c, x, y) - f(x, y)));
    }
  }
  out << "max_node_residual: " << format_real(residual) << "\n";
  return residual <= 1e-12 ? kOk : kVerify;
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Cheb2 c = from_sparse(load_file(cfg.input));
  const Domain2 region = to_domain(cfg.region, c.domain());
  std::optional<expr::Expression> ref;
  if (!cfg.reference.empty()) ref = expr::Expression::parse(cfg.reference);

  std::ostringstream csv;
  csv << (ref ? "x,y,value,reference,abs_error\n" : "x,y,value\n");
  double max_err = 0.0;
  for (double x : linspace(region.xlo, region.xhi, cfg.grid)) {
    for (double y : linspace(region.ylo, region.yhi, cfg.grid)) {
      const double v = evaluate_matrix(c, x, y);
      csv << format_real(x) << "," << format_real(y) << "," << format_real(v);
      if (ref) {
        const double r = (*ref)(x, y);
        const double e = std::abs(v - r);
        max_err = std::max(max_err, e);
        csv << "," << format_real(r) << "," << format_real(e);
      }
      csv << "\n";
    }
  }

  if (cfg.output.empty()) {
    out << csv.str();
  } else {
    auto f = open_output(cfg.output);
    f << csv.str();
    f.flush();
    if (!f) throw IoError("failed writing " + cfg.output);
  }
  if (ref) err << "max_abs_error: " << format_real(max_err) << "\n";
  return kOk;
}

double default_tol(std::ostream& err) {
  if (const char* env = std::getenv(kTolEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
    err << "warning: ignoring invalid " << kTolEnv << "='" << env << "'\n";
  }
  return 1e-15;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.tol = default_tol(err);

  CLI::App app{"Bivariate Chebyshev approximation via the 2D FFT"};
  app.name(args.empty() ? "bicheb" : args[0]);
  app.require_subcommand(1);

  auto add_domain = [&](CLI::App* sub) {
    sub->add_option("--domain", cfg.domain, "Rectangle xlo,xhi,ylo,yhi (default -1,1,-1,1)")
        ->delimiter(',')
        ->expected(4);
  };
  auto add_build = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "Coefficient tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--relative-tol", cfg.relative_tol, "Scale tol by max |f| on the grid");
    sub->add_option("--max-n", cfg.max_n, "Degree cap (power of two)")
        ->check(CLI::Range(2, 1 << 20));
    sub->add_flag("--pure", cfg.pure, "Assert f is pure; sample in parallel");
    add_domain(sub);
  };

  auto* approx = app.add_subcommand("approx", "Build an approximant and write its coefficient file");
  approx->add_option("-e,--expr", cfg.expression, "Formula in x and y")->required();
  approx->add_option("-o,--output", cfg.output, "Coefficient file to write")->required();
  approx->add_option("--truncate", cfg.truncate, "Keep only degrees <= N,M")
      ->delimiter(',')
      ->expected(2);
  add_build(approx);

  auto* eval = app.add_subcommand("eval", "Evaluate a coefficient file");
  eval->add_option("-c,--coeffs", cfg.input, "Coefficient file")->required();
  eval->add_option("-p,--point", cfg.points, "Point x,y (repeatable)");
  eval->add_option("--points", cfg.points_file, "File with one x,y pair per line");
  eval->add_option("--grid", cfg.grid, "Equispaced points per axis")->check(CLI::Range(2, 1 << 16));
  eval->add_option("--region", cfg.region, "Grid rectangle xlo,xhi,ylo,yhi")
      ->delimiter(',')
      ->expected(4);
  eval->add_option("--compare-expr", cfg.reference, "Report max |approx - expr| over the grid");

  auto* integ = app.add_subcommand("integrate", "Integrate over the domain rectangle");
  auto* integ_expr = integ->add_option("-e,--expr", cfg.expression, "Formula in x and y");
  auto* integ_file = integ->add_option("-c,--coeffs", cfg.input, "Coefficient file");
  integ_expr->excludes(integ_file);
  add_build(integ);

  auto* diff = app.add_subcommand("diff", "Differentiate a coefficient file");
  diff->add_option("-c,--coeffs", cfg.input, "Coefficient file")->required();
  diff->add_option("--axis", cfg.axis, "x or y")->check(CLI::IsMember({"x", "y"}));
  diff->add_option("-o,--output", cfg.output, "Coefficient file to write")->required();

  auto* interp = app.add_subcommand("interp", "Lagrange-Chebyshev interpolant on the Lobatto grid");
  interp->add_option("-e,--expr", cfg.expression, "Formula in x and y")->required();
  interp->add_option("-n", cfg.n, "Degree in x")->required()->check(CLI::Range(1, 4096));
  interp->add_option("-m", cfg.m, "Degree in y")->required()->check(CLI::Range(1, 4096));
  interp->add_option("--tol", cfg.tol, "Drop coefficients below this magnitude")
      ->check(CLI::NonNegativeNumber);
  interp->add_option("-o,--output", cfg.output, "Coefficient file to write")->required();
  interp->add_flag("--verify", cfg.verify, "Check node residuals <= 1e-12");
  add_domain(interp);

  auto* exp = app.add_subcommand("export", "Write a CSV of values over an equispaced grid");
  exp->add_option("-c,--coeffs", cfg.input, "Coefficient file")->required();
  exp->add_option("--grid", cfg.grid, "Points per axis")->check(CLI::Range(2, 1 << 16));
  exp->add_option("--region", cfg.region, "Grid rectangle xlo,xhi,ylo,yhi")
      ->delimiter(',')
      ->expected(4);
  exp->add_option("--reference", cfg.reference, "Formula to compare against");
  exp->add_option("-o,--output", cfg.output, "CSV path (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*approx) return cmd_approx(cfg, out, err);
    if (*eval) return cmd_eval(cfg, out);
    if (*integ) {
      if (cfg.expression.empty() && cfg.input.empty()) {
        err << "integrate: one of --expr or --coeffs is required\n";
        return kUsage;
      }
      return cmd_integrate(cfg, out);
    }
    if (*diff) return cmd_diff(cfg);
    if (*interp) return cmd_interp(cfg, out);
    if (*exp) return cmd_export(cfg, out, err);
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at offset " << e.position() << ")\n";
    return kParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << "\n";
    return kEvaluation;
  } catch (const SamplingError& e) {
    err << "error: " << e.what() << "\n";
    return kEvaluation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}

}  // namespace bicheb::cli
