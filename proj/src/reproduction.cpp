#include "splineqi/reproduction.hpp"

#include "splineqi/bspline.hpp"
#include "splineqi/differentiation.hpp"
#include "splineqi/functions.hpp"
#include "splineqi/quadrature.hpp"
#include "splineqi/quasi_interp.hpp"
#include "splineqi/rootfind.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace splineqi {

PrintedValue parse_printed(std::string_view text) {
  PrintedValue out;
  out.text = std::string(text);
  std::string mantissa(text);
  int exponent = 0;
  if (const auto open = mantissa.find('('); open != std::string::npos) {
    const auto close = mantissa.find(')', open);
    if (close == std::string::npos) throw std::domain_error("unbalanced exponent in '" + out.text + "'");
    exponent = std::stoi(mantissa.substr(open + 1, close - open - 1));
    mantissa.erase(open);
    if (!mantissa.empty() && (mantissa.back() == 'E' || mantissa.back() == 'e')) mantissa.pop_back();
  }
  const auto dot = mantissa.find('.');
  const int decimals = dot == std::string::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
  std::size_t used = 0;
  const double m = std::stod(mantissa, &used);
  if (used != mantissa.size()) throw std::domain_error("cannot read printed value '" + out.text + "'");
  out.value = m * std::pow(10.0, exponent);
  out.unit = std::pow(10.0, exponent - decimals);
  return out;
}

bool matches_last_digit(double computed, const PrintedValue& printed) {
  if (std::signbit(computed) != std::signbit(printed.value)) return false;
  // a hair of slack for the decimal representation of the unit itself
  return std::abs(computed - printed.value) <= printed.unit * (1.0 + 1e-9);
}

bool CriterionReport::passed() const { return failures() == 0; }

int CriterionReport::failures() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [](const EntryCheck& e) { return !e.passed && !e.informational; }));
}

namespace {

using Clock = std::chrono::steady_clock;

template <class Body>
CriterionReport timed(int id, std::string title, Body body) {
  const auto start = Clock::now();
  CriterionReport report;
  report.id = id;
  report.title = std::move(title);
  body(report);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

std::string verdict(const EntryCheck& e) {
  if (e.passed) return "ok";
  return e.informational ? "info" : "FAIL";
}

constexpr std::array<int, 3> kQuadN = {128, 256, 512};
constexpr std::array<int, 4> kQuadRows = {128, 256, 512, 1024};
constexpr std::array<int, 5> kDiffN = {64, 128, 256, 512, 1024};
constexpr std::array<int, 3> kRootN = {16, 32, 64};

// One printed column: rule family, function, four values for n = 128..1024.
// Entries flagged informational are reported but do not decide the verdict.
struct PrintedQuadColumn {
  const char* function;
  RuleFamily family;
  std::array<const char*, 4> values;
  std::array<bool, 4> informational;
};

const std::vector<PrintedQuadColumn>& printed_quadrature() {
  using K = RuleKind;
  static const std::vector<PrintedQuadColumn> columns = {
      // the 256 Simpson entry is printed "0;45(-10)"
      {"runge16", {K::Simpson, 2}, {"0.73(-9)", "0.45(-10)", "0.28(-11)", "0.18(-12)"}, {false, true, false, true}},
      {"runge16", {K::QuasiInterpolant, 2}, {"-0.55(-9)", "-0.33(-10)", "-0.21(-11)", "-0.13(-12)"}, {false, false, false, true}},
      {"runge16", {K::QuasiInterpolant, 3}, {"-0.44(-8)", "-0.26(-9)", "-0.15(-10)", "-0.95(-12)"}, {false, false, false, true}},
      {"expsin", {K::Simpson, 2}, {"0.14(-6)", "0.90(-8)", "0.56(-9)", "0.73(-9)"}, {false, false, false, true}},
      {"expsin", {K::QuasiInterpolant, 2}, {"-0.11(-6)", "-0.67(-8)", "-0.41(-9)", "-0.52(-9)"}, {false, false, false, true}},
      {"expsin", {K::QuasiInterpolant, 3}, {"-0.92(-6)", "-0.52(-7)", "-0.31(-8)", "-0.37(-8)"}, {false, false, false, true}},
      {"runge16", {K::QuasiInterpolant, 4}, {"-0.83(-12)", "-0.12(-13)", "-0.18(-15)", "-0.29(-17)"}, {false, false, false, true}},
      {"runge16", {K::NewtonCotes4, 4}, {"1.10(-12)", "0.24(-13)", "0.37(-15)", "0.59(-17)"}, {false, false, false, true}},
      {"expsin", {K::QuasiInterpolant, 4}, {"0.23(-7)", "0.44(-9)", "0.73(-11)", "0.12(-12)"}, {false, false, false, true}},
      {"expsin", {K::NewtonCotes4, 4}, {"-0.68(-7)", "-1.04(-9)", "-1.62(-11)", "-0.25(-12)"}, {false, false, false, true}},
      {"runge16", {K::QuasiInterpolant, 5}, {"0.95(-11)", "0.14(-12)", "0.21(-14)", "0.32(-16)"}, {false, false, false, true}},
      {"expsin", {K::QuasiInterpolant, 5}, {"-0.27(-6)", "-0.50(-8)", "-0.83(-10)", "-0.13(-11)"}, {false, false, false, true}},
  };
  return columns;
}

}  // namespace

CriterionReport check_moment_conditions() {
  return timed(1, "moment conditions", [](CriterionReport& report) {
    for (int d = kMinDegree; d <= kMaxDegree; ++d) {
      for (int n : {min_subintervals(d), min_subintervals(d) + 7}) {
        const SplineSpace space(d, UniformPartition(0.0, static_cast<double>(n), n));
        const auto table = build_stencils(d, n);
        const auto nodes = sample_nodes_unit(table.grid(), n);
        int bad = 0;
        std::string first_bad;
        for (int r = 0; r <= d; ++r) {
          const auto theta = monomial_coeffs_unit(space, r);
          for (int j = 1; j <= space.dimension(); ++j) {
            const auto& st = table.stencil(j);
            Rational mu = 0;
            for (std::size_t i = 0; i < st.weights.size(); ++i) {
              const auto& t = nodes[static_cast<std::size_t>(st.sample_indices[i])];
              Rational power = 1;
              for (int k = 0; k < r; ++k) power *= t;
              mu += st.weights[i] * power;
            }
            if (mu != theta[static_cast<std::size_t>(j - 1)]) {
              if (bad++ == 0) first_bad = fmt::format("j={} r={}", j, r);
            }
          }
        }
        report.entries.push_back({fmt::format("d={} n={}", d, n), bad == 0, false,
                                  bad == 0 ? "all stencils exact" : fmt::format("{} mismatches, first {}", bad, first_bad)});
      }
    }
  });
}

CriterionReport check_norms() {
  return timed(3, "Lebesgue constants", [](CriterionReport& report) {
    struct Target {
      int degree;
      double value;
      double tolerance;  // negative: upper bound only
    };
    const std::array<Target, 4> targets = {{{2, 1.4734, 5e-4}, {3, 1.631, 5e-3}, {4, 2.881, -1.0}, {5, 3.106, 5e-3}}};
    Table table;
    table.title = "Lebesgue constants, n = 100, 256 samples per subinterval";
    table.columns = {"d", "norm", "published", "argmax", "check"};
    for (const auto& t : targets) {
      const UniformPartition part(-1.0, 1.0, 100);
      const QuasiInterpolant qi(t.degree, part);
      const auto profile = lebesgue_profile(qi, 256);
      EntryCheck e;
      e.label = fmt::format("d={}", t.degree);
      if (t.tolerance < 0) {
        e.passed = profile.sup <= t.value;
        e.detail = fmt::format("{:.5f} <= {}", profile.sup, t.value);
      } else {
        e.passed = std::abs(profile.sup - t.value) <= t.tolerance;
        e.detail = fmt::format("{:.5f} vs {} +- {}", profile.sup, t.value, t.tolerance);
      }
      table.add_row({std::to_string(t.degree), fixed(profile.sup, 5),
                     t.tolerance < 0 ? fmt::format("<= {}", t.value) : fmt::format("{}", t.value),
                     fixed(profile.argmax, 5), verdict(e)});
      report.entries.push_back(std::move(e));
    }
    report.tables.push_back(std::move(table));
  });
}

CriterionReport check_quadrature_weights() {
  return timed(4, "quadrature weights", [](CriterionReport& report) {
    for (int d = kMinDegree; d <= kMaxDegree; ++d) {
      for (int n : {min_subintervals(d), 16, 33}) {
        if (n < min_subintervals(d)) continue;
        const auto rule = derive_rule(d, UniformPartition(-1.0, 1.0, n));
        const auto printed = closed_form_weights(d, n);
        Rational sum = 0;
        for (const auto& w : rule.weights()) sum += w;
        const bool same = rule.weights() == printed;
        const bool total = sum == Rational(n);
        report.entries.push_back({fmt::format("d={} n={}", d, n), same && total, false,
                                  fmt::format("weights {}, sum {} (h units)", same ? "equal" : "differ", to_string(sum))});
      }
    }
  });
}

CriterionReport check_integration_tables() {
  return timed(5, "integration error tables", [](CriterionReport& report) {
    const std::array<const char*, 2> functions = {"runge16", "expsin"};
    for (const char* name : functions) {
      const auto f = lookup_function(name);
      Table table;
      table.title = fmt::format("quadrature errors I(f) - rule, f = {}", name);
      table.columns = {"rule", "n", "error", "paper-style", "published", "check"};
      for (const auto& col : printed_quadrature()) {
        if (std::string_view(col.function) != name) continue;
        const auto computed = error_table(col.family, f, -1.0L, 1.0L, kQuadRows);
        for (std::size_t i = 0; i < kQuadRows.size(); ++i) {
          const double err = static_cast<double>(computed.rows[i].error);
          const auto printed = parse_printed(col.values[i]);
          const int n = kQuadRows[i];
          const bool hard = std::find(kQuadN.begin(), kQuadN.end(), n) != kQuadN.end() && !col.informational[i];
          EntryCheck e{fmt::format("{} {} n={}", name, col.family.label(), n), matches_last_digit(err, printed), !hard,
                       fmt::format("{} vs {}", paper_style(err), printed.text)};
          table.add_row({col.family.label(), std::to_string(n), full_precision(err), paper_style(err), printed.text,
                         verdict(e)});
          report.entries.push_back(std::move(e));
        }
      }
      report.tables.push_back(std::move(table));
    }
  });
}

CriterionReport check_integration_orders() {
  return timed(6, "integration orders on e^{-x} sin(5 pi x)", [](CriterionReport& report) {
    const auto f = lookup_function("expsin");
    struct Target {
      RuleFamily family;
      double low;
      double high;
    };
    const std::array<Target, 5> targets = {{{{RuleKind::QuasiInterpolant, 2}, 3.75, 4.25},
                                            {{RuleKind::QuasiInterpolant, 3}, 3.75, 4.25},
                                            {{RuleKind::QuasiInterpolant, 4}, 5.7, 6.3},
                                            {{RuleKind::QuasiInterpolant, 5}, 5.7, 6.3},
                                            {{RuleKind::ExtrapolatedI2, 2}, 4.8, INFINITY}}};
    Table table;
    table.title = "fitted orders, n = 64..1024";
    table.columns = {"rule", "order", "accepted", "check"};
    for (const auto& t : targets) {
      const auto computed = error_table(t.family, f, -1.0L, 1.0L, kDiffN);
      EntryCheck e{t.family.label(), computed.order >= t.low && computed.order <= t.high, false,
                   fmt::format("{:.3f}", computed.order)};
      const auto range = std::isinf(t.high) ? fmt::format(">= {}", t.low) : fmt::format("[{}, {}]", t.low, t.high);
      e.detail += " in " + range;
      table.add_row({t.family.label(), fixed(computed.order, 3), range, verdict(e)});
      report.entries.push_back(std::move(e));
    }
    report.tables.push_back(std::move(table));
  });
}

CriterionReport check_diff_matrices() {
  return timed(7, "differentiation matrices", [](CriterionReport& report) {
    for (int d : {2, 3}) {
      for (int n : {min_subintervals(d), 12, 25}) {
        const auto m = diff_matrix(d, n);
        const auto printed = closed_form_diff_matrix(d, n);
        const auto nodes = sample_nodes_unit(grid_kind(d), n);
        int mismatches = 0;
        int bad_sums = 0;
        int bad_identity = 0;
        for (int i = 0; i < m.size(); ++i) {
          Rational sum = 0;
          Rational slope = 0;
          for (int j = 0; j < m.size(); ++j) {
            const auto v = m.entry(i, j);
            if (v != printed.entry(i, j)) ++mismatches;
            sum += v;
            slope += v * nodes[static_cast<std::size_t>(j)];
          }
          if (sum != 0) ++bad_sums;
          if (slope != 1) ++bad_identity;
        }
        report.entries.push_back({fmt::format("d={} n={}", d, n), mismatches + bad_sums + bad_identity == 0, false,
                                  fmt::format("{} entry mismatches, {} nonzero row sums, {} rows with D x != 1",
                                              mismatches, bad_sums, bad_identity)});
      }
    }
  });
}

CriterionReport check_diff_tables() {
  return timed(8, "differentiation error tables", [](CriterionReport& report) {
    // columns eps_1, eps_1*, eps_2, eps_2* for n = 64..1024
    const std::array<std::array<const char*, 4>, 5> quadratic = {{{"0.014009", "0.047853", "0.016143", "0.046317"},
                                                                  {"0.003138", "0.012079", "0.003674", "0.011606"},
                                                                  {"0.000767", "0.003036", "0.000872", "0.002902"},
                                                                  {"0.000190", "0.000759", "0.000212", "0.00725"},
                                                                  {"0.0000475", "0.0001899", "0.000052", "0.000181"}}};
    const std::array<std::array<const char*, 4>, 5> cubic = {{{"3.0(-3)", "4.7(-2)", "1.0(-2)", "4.7(-2)"},
                                                              {"2.0(-4)", "1.2(-2)", "1.4(-3)", "1.2(-2)"},
                                                              {"1.3(-5)", "3.0(-3)", "1.8(-4)", "2.9(-3)"},
                                                              {"8.0(-7)", "7.6(-4)", "2.4(-5)", "7.2(-4)"},
                                                              {"5.0(-8)", "1.9(-4)", "3.0(-6)", "1.8E(-4)"}}};
    const std::array<const char*, 2> functions = {"runge16", "expsin5x"};
    for (int d : {2, 3}) {
      const auto& printed = d == 2 ? quadratic : cubic;
      Table table;
      table.title = fmt::format("derivative errors at the data sites, d = {}", d);
      table.columns = {"function", "n", "eps", "published", "eps*", "published*", "check"};
      for (std::size_t fi = 0; fi < functions.size(); ++fi) {
        const auto f = lookup_function(functions[fi]);
        const auto computed = diff_error_table(d, f, -1.0, 1.0, kDiffN);
        for (std::size_t r = 0; r < kDiffN.size(); ++r) {
          const int n = kDiffN[r];
          const std::array<double, 2> values = {computed.rows[r].qi_error, computed.rows[r].centered_error};
          std::string row_verdict = "ok";
          for (std::size_t c = 0; c < 2; ++c) {
            const auto p = parse_printed(printed[r][2 * fi + c]);
            EntryCheck e;
            e.label = fmt::format("d={} {} {} n={}", d, functions[fi], c == 0 ? "eps" : "eps*", n);
            if (d == 2) {
              e.passed = matches_last_digit(values[c], p);
              e.informational = fi == 1 && c == 1 && n == 512;
            } else {
              const double q = values[c] / p.value;
              e.passed = q >= 1.0 / 1.3 && q <= 1.3;
            }
            e.detail = fmt::format("{:.6g} vs {}", values[c], p.text);
            if (verdict(e) != "ok" && row_verdict != "FAIL") row_verdict = verdict(e);
            report.entries.push_back(std::move(e));
          }
          table.add_row({functions[fi], std::to_string(n), fmt::format("{:.6g}", values[0]), printed[r][2 * fi],
                         fmt::format("{:.6g}", values[1]), printed[r][2 * fi + 1], row_verdict});
        }
        if (d == 3 && fi == 0) {
          report.entries.push_back({"d=3 runge16 superconvergence", computed.qi_order >= 3.7, false,
                                    fmt::format("order {:.3f} >= 3.7", computed.qi_order)});
        }
      }
      report.tables.push_back(std::move(table));
    }
  });
}

CriterionReport check_roots() {
  return timed(9, "zeros of Q2 P8", [](CriterionReport& report) {
    const std::array<std::array<const char*, 4>, 3> printed = {{{".000543", ".003784", ".013753", "-.007841"},
                                                                {"-.000043", ".000210", ".000556", "-.001017"},
                                                                {"-.000013", "-.000012", ".000043", ".000026"}}};
    Table table;
    table.title = "eps_k = x_k - nearest zero of Q2 P8";
    table.columns = {"n", "k", "x_k", "eps_k", "published", "check"};
    for (std::size_t r = 0; r < kRootN.size(); ++r) {
      const int n = kRootN[r];
      const UniformPartition part(-1.0, 1.0, n);
      const auto nodes = sample_nodes<double>(GridKind::TGrid, -1.0, 1.0, n);
      std::vector<double> y;
      for (double x : nodes) y.push_back(static_cast<double>(legendre_p8(x)));
      const auto zeros = find_zeros(y, part);
      report.entries.push_back({fmt::format("n={} count", n), zeros.roots.size() == 8 && zeros.zero_intervals.empty(),
                                false, fmt::format("{} zeros", zeros.roots.size())});
      double worst = 0.0;
      for (const auto& z : zeros.roots) worst = std::max(worst, std::abs(z.residual));
      report.entries.push_back(
          {fmt::format("n={} residual", n), worst <= 1e-12, false, fmt::format("max |Q2 f| = {:.3g}", worst)});
      if (zeros.roots.empty()) continue;
      for (std::size_t k = 0; k < 4; ++k) {
        const double xk = kLegendreP8Zeros[k];
        const double eps = xk - nearest_root(zeros, xk);
        const auto p = parse_printed(printed[r][k]);
        const double tolerance = std::max(0.1 * std::abs(p.value), 5e-6);
        EntryCheck e{fmt::format("n={} eps_{}", n, k + 1), std::abs(eps - p.value) <= tolerance, false,
                     fmt::format("{:.6f} vs {} (tolerance {:.2g})", eps, p.text, tolerance)};
        table.add_row({std::to_string(n), std::to_string(k + 1), fixed(xk, 10), fixed(eps, 6), p.text, verdict(e)});
        report.entries.push_back(std::move(e));
      }
    }
    report.tables.push_back(std::move(table));
  });
}

std::vector<CriterionReport> reproduce_tables() {
  return {check_moment_conditions(),  check_norms(),       check_quadrature_weights(), check_integration_tables(),
          check_integration_orders(), check_diff_matrices(), check_diff_tables(),      check_roots()};
}

}  // namespace splineqi
