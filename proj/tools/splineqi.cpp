// splineqi: command-line front end to the quasi-interpolation kernels.
#include "splineqi/bspline.hpp"
#include "splineqi/convergence.hpp"
#include "splineqi/differentiation.hpp"
#include "splineqi/functions.hpp"
#include "splineqi/quadrature.hpp"
#include "splineqi/quasi_interp.hpp"
#include "splineqi/reproduction.hpp"
#include "splineqi/rootfind.hpp"
#include "splineqi/table.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

namespace {

using namespace splineqi;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitAcceptance = 4;

struct Interval {
  double a = -1.0;
  double b = 1.0;
};

void add_interval(CLI::App* cmd, Interval& iv) {
  cmd->add_option("--a", iv.a, "left end of the interval")->capture_default_str();
  cmd->add_option("--b", iv.b, "right end of the interval")->capture_default_str();
}

void add_format(CLI::App* cmd, std::string& format, std::string fallback) {
  format = std::move(fallback);
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

std::string render(const Table& table, const std::string& format) {
  if (format == "csv") return to_csv(table);
  if (format == "json") return to_json(table);
  return to_text(table);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::domain_error("cannot open '" + path + "' for writing");
  out << text;
}

std::string order_cell(double order) { return std::isnan(order) ? "-" : fixed(order, 2); }

nlohmann::ordered_json n_list(const std::vector<int>& ns) { return nlohmann::ordered_json(ns); }

// approximate ---------------------------------------------------------------

struct ApproximateArgs {
  int degree = 2;
  int n = 0;
  std::string fn;
  Interval iv;
  std::string out;
  std::string format;
  int resolution = 8;
};

int run_approximate(const ApproximateArgs& args) {
  const auto f = lookup_function(args.fn);
  const UniformPartition part(args.iv.a, args.iv.b, args.n);
  const QuasiInterpolant qi(args.degree, part);
  const auto s = qi.apply(f.as_double());
  Table table;
  table.title = fmt::format("Q{} {} on [{}, {}], n = {}", args.degree, f.name, args.iv.a, args.iv.b, args.n);
  table.meta["degree"] = args.degree;
  table.meta["n"] = n_list({args.n});
  table.meta["function"] = f.name;
  table.columns = {"x", "f", "Qf", "error"};
  double worst = 0.0;
  const int total = args.n * args.resolution;
  for (int m = 0; m <= total; ++m) {
    const double x = m == total ? part.b() : part.a() + part.h() * m / args.resolution;
    const double fx = f(x);
    const double qx = eval_spline(s, x);
    worst = std::max(worst, std::abs(fx - qx));
    table.add_row({full_precision(x), full_precision(fx), full_precision(qx), full_precision(fx - qx)});
  }
  table.meta["max_error"] = worst;
  emit(render(table, args.format), args.out);
  return 0;
}

// integrate -----------------------------------------------------------------

struct IntegrateArgs {
  int degree = 2;
  std::vector<int> ns;
  std::string fn;
  Interval iv;
  std::optional<std::string> baseline;
  bool extrapolate = false;
  std::string format;
};

int run_integrate(const IntegrateArgs& args) {
  const auto f = lookup_function(args.fn);
  if (args.extrapolate && args.degree != 2) throw std::domain_error("--extrapolate combines I2 with Simpson; use --degree 2");
  std::vector<RuleFamily> families = {{RuleKind::QuasiInterpolant, args.degree}};
  if (args.baseline == "simpson") families.push_back({RuleKind::Simpson, 2});
  if (args.baseline == "nc4") families.push_back({RuleKind::NewtonCotes4, 4});
  if (args.extrapolate) families.push_back({RuleKind::ExtrapolatedI2, 2});

  Table table;
  table.title = fmt::format("quadrature of {} on [{}, {}]", f.name, args.iv.a, args.iv.b);
  table.meta["degree"] = args.degree;
  table.meta["n"] = n_list(args.ns);
  table.meta["function"] = f.name;
  table.columns = {"n"};
  const long double a = args.iv.a;
  const long double b = args.iv.b;
  if (!f.has_integral()) {
    for (const auto& fam : families) table.columns.push_back(fam.label());
    for (int n : args.ns) {
      std::vector<std::string> row{std::to_string(n)};
      for (const auto& fam : families) row.push_back(full_precision(static_cast<double>(apply_rule(fam, f, a, b, n))));
      table.add_row(std::move(row));
    }
    std::cout << render(table, args.format);
    return 0;
  }
  std::vector<QuadratureTable> results;
  for (const auto& fam : families) {
    results.push_back(error_table(fam, f, a, b, args.ns));
    table.columns.push_back("E[" + fam.label() + "]");
    table.columns.push_back("paper-style");
  }
  for (std::size_t i = 0; i < args.ns.size(); ++i) {
    std::vector<std::string> row{std::to_string(args.ns[i])};
    for (const auto& r : results) {
      const double err = static_cast<double>(r.rows[i].error);
      row.push_back(full_precision(err));
      row.push_back(paper_style(err));
    }
    table.add_row(std::move(row));
  }
  std::vector<std::string> orders{"order"};
  for (const auto& r : results) {
    orders.push_back(order_cell(r.order));
    orders.emplace_back("");
  }
  table.add_row(std::move(orders));
  std::cout << render(table, args.format);
  return 0;
}

// differentiate -------------------------------------------------------------

struct DifferentiateArgs {
  int degree = 2;
  std::vector<int> ns = {64, 128, 256, 512, 1024};
  std::string fn;
  Interval iv;
  std::string format;
};

int run_differentiate(const DifferentiateArgs& args) {
  const auto f = lookup_function(args.fn);
  const auto result = diff_error_table(args.degree, f, args.iv.a, args.iv.b, args.ns);
  Table table;
  table.title = fmt::format("derivative errors of Q{} {} at the data sites", args.degree, f.name);
  table.meta["degree"] = args.degree;
  table.meta["n"] = n_list(args.ns);
  table.meta["function"] = f.name;
  table.columns = {"n", "eps", "paper-style", "eps*", "paper-style*"};
  for (const auto& r : result.rows) {
    table.add_row({std::to_string(r.n), full_precision(r.qi_error), paper_style(r.qi_error),
                   full_precision(r.centered_error), paper_style(r.centered_error)});
  }
  table.add_row({"order", order_cell(result.qi_order), "", order_cell(result.centered_order), ""});
  std::cout << render(table, args.format);
  return 0;
}

// roots ---------------------------------------------------------------------

struct RootsArgs {
  int n = 0;
  std::string fn;
  Interval iv;
  bool refine = false;
  std::string format;
};

int run_roots(const RootsArgs& args) {
  const auto f = lookup_function(args.fn);
  const UniformPartition part(args.iv.a, args.iv.b, args.n);
  const auto nodes = sample_nodes<double>(GridKind::TGrid, args.iv.a, args.iv.b, args.n);
  std::vector<double> y;
  for (double x : nodes) y.push_back(f(x));
  const auto report = find_zeros(y, part);

  Table table;
  table.title = fmt::format("zeros of Q2 {} on [{}, {}], n = {}", f.name, args.iv.a, args.iv.b, args.n);
  table.meta["degree"] = 2;
  table.meta["n"] = n_list({args.n});
  table.meta["function"] = f.name;
  table.columns = {"x", "interval", "tangency", "residual"};
  std::vector<double> refined;
  if (args.refine) {
    if (!f.has_derivative()) throw std::domain_error("--refine needs a closed-form derivative for " + f.name);
    refined = refine_roots(report, f.as_double(), [&](double x) { return static_cast<double>(f.derivative(x)); });
    table.columns.emplace_back("refined");
  }
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    const auto& r = report.roots[i];
    std::vector<std::string> row{full_precision(r.x), std::to_string(r.interval), r.tangency ? "yes" : "no",
                                 fmt::format("{:.3e}", r.residual)};
    if (args.refine) row.push_back(full_precision(refined[i]));
    table.add_row(std::move(row));
  }
  std::string text = render(table, args.format);
  if (!report.zero_intervals.empty() && args.format == "text") {
    std::string list;
    for (int k : report.zero_intervals) list += (list.empty() ? "" : " ") + std::to_string(k);
    text += "identically zero on subintervals: " + list + "\n";
  }
  if (f.name == "legendre8" && !report.roots.empty()) {
    Table eps;
    eps.title = "eps_k = x_k - nearest computed zero";
    eps.meta["n"] = n_list({args.n});
    eps.meta["function"] = f.name;
    eps.columns = {"k", "x_k", "eps_k"};
    for (int k = 0; k < 4; ++k) {
      const double xk = kLegendreP8Zeros[k];
      eps.add_row({std::to_string(k + 1), fixed(xk, 10), fixed(xk - nearest_root(report, xk), 6)});
    }
    text += (args.format == "text" ? "\n" : "") + render(eps, args.format);
  }
  std::cout << text;
  return 0;
}

// norms ---------------------------------------------------------------------

struct NormsArgs {
  int degree = 2;
  int n = 100;
  int resolution = 256;
  Interval iv;
};

int run_norms(const NormsArgs& args) {
  const UniformPartition part(args.iv.a, args.iv.b, args.n);
  const QuasiInterpolant qi(args.degree, part);
  const auto profile = lebesgue_profile(qi, args.resolution);
  const int k = part.interval_of(profile.argmax);
  fmt::print("degree      {}\n", args.degree);
  fmt::print("n           {}\n", args.n);
  fmt::print("resolution  {}\n", args.resolution);
  fmt::print("norm        {:.6f}\n", profile.sup);
  fmt::print("argmax      {:.6f}\n", profile.argmax);
  fmt::print("interval    [x_{}, x_{}] = [{:.6f}, {:.6f}]\n", k - 1, k, part.node(k - 1), part.node(k));
  return 0;
}

// reproduce-paper -----------------------------------------------------------

int run_reproduce() {
  const auto reports = reproduce_tables();
  bool ok = true;
  for (const auto& r : reports) {
    for (const auto& t : r.tables) std::cout << to_text(t) << '\n';
  }
  for (const auto& r : reports) {
    for (const auto& e : r.entries) {
      if (!e.passed) {
        fmt::print("  {} [{}] {}: {}\n", e.informational ? "info" : "FAIL", r.id, e.label, e.detail);
      }
    }
  }
  for (const auto& r : reports) {
    fmt::print("criterion {:>2} {:<34} {} ({} checks, {} failed)\n", r.id, r.title, r.passed() ? "PASS" : "FAIL",
               r.entries.size(), r.failures());
    ok = ok && r.passed();
  }
  fmt::print("{}\n", ok ? "all published results reproduced" : "some published results were not reproduced");
  return ok ? 0 : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spline quasi-interpolants: approximation, quadrature, differentiation and zeros"};
  app.require_subcommand(1);
  const auto degree_range = CLI::Range(kMinDegree, kMaxDegree);
  const auto diff_degrees = CLI::Validator(
      [](std::string& value) -> std::string {
        return value == "2" || value == "3" ? "" : "differentiation matrices are defined for d = 2, 3 only";
      },
      "2|3");

  ApproximateArgs approx;
  auto* c_approx = app.add_subcommand("approximate", "sample Q_d f on a dense grid");
  c_approx->add_option("--degree", approx.degree, "spline degree")->required()->check(degree_range);
  c_approx->add_option("--n", approx.n, "number of subintervals")->required()->check(CLI::PositiveNumber);
  c_approx->add_option("--fn", approx.fn, "registered function")->required();
  add_interval(c_approx, approx.iv);
  c_approx->add_option("--out", approx.out, "output file (default stdout)");
  c_approx->add_option("--resolution", approx.resolution, "points per subinterval")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(c_approx, approx.format, "csv");

  IntegrateArgs integ;
  auto* c_integ = app.add_subcommand("integrate", "quadrature error tables");
  c_integ->add_option("--degree", integ.degree, "spline degree")->required()->check(degree_range);
  c_integ->add_option("--n", integ.ns, "comma-separated subinterval counts")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  c_integ->add_option("--fn", integ.fn, "registered function")->required();
  c_integ->add_option("--baseline", integ.baseline, "Newton-Cotes comparison rule")
      ->check(CLI::IsMember({"simpson", "nc4"}));
  c_integ->add_flag("--extrapolate", integ.extrapolate, "add (32 I2 + 23 Simpson) / 55");
  add_interval(c_integ, integ.iv);
  add_format(c_integ, integ.format, "text");

  DifferentiateArgs diff;
  auto* c_diff = app.add_subcommand("differentiate", "derivative error tables");
  c_diff->add_option("--degree", diff.degree, "spline degree (2 or 3)")->required()->check(diff_degrees);
  c_diff->add_option("--n", diff.ns, "comma-separated subinterval counts")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_diff->add_option("--fn", diff.fn, "registered function")->required();
  add_interval(c_diff, diff.iv);
  add_format(c_diff, diff.format, "text");

  RootsArgs roots;
  auto* c_roots = app.add_subcommand("roots", "zeros of Q_2 f");
  c_roots->add_option("--n", roots.n, "number of subintervals")->required()->check(CLI::PositiveNumber);
  c_roots->add_option("--fn", roots.fn, "registered function")->required();
  c_roots->add_flag("--refine", roots.refine, "add Newton-refined zeros of f");
  add_interval(c_roots, roots.iv);
  add_format(c_roots, roots.format, "text");

  NormsArgs norms;
  auto* c_norms = app.add_subcommand("norms", "estimate the infinity norm of Q_d");
  c_norms->add_option("--degree", norms.degree, "spline degree")->required()->check(degree_range);
  c_norms->add_option("--n", norms.n, "number of subintervals")->check(CLI::PositiveNumber)->capture_default_str();
  c_norms->add_option("--resolution", norms.resolution, "samples per subinterval")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_interval(c_norms, norms.iv);

  auto* c_repro = app.add_subcommand("reproduce-paper", "recompute every published table and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c_approx) return run_approximate(approx);
    if (*c_integ) return run_integrate(integ);
    if (*c_diff) return run_differentiate(diff);
    if (*c_roots) return run_roots(roots);
    if (*c_norms) return run_norms(norms);
    if (*c_repro) return run_reproduce();
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitDomain;
  } catch (const std::domain_error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitDomain;
  }
  return kExitUsage;
}
