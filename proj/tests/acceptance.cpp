// Acceptance suite: one PASS/FAIL line per criterion.
#include "oracles.hpp"
#include "splineqi/quasi_interp.hpp"
#include "splineqi/reproduction.hpp"
#include "splineqi/rootfind.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <sys/wait.h>

#ifndef SPLINEQI_CLI
#error "SPLINEQI_CLI must name the command-line tool"
#endif

using namespace splineqi;

namespace {

using Clock = std::chrono::steady_clock;

// Pinned tolerances and time limits.
constexpr double kMomentSeconds = 1.0;
constexpr double kReproductionTol = 1e-11;  // relative to max|p|
constexpr double kNormSeconds = 10.0;
constexpr double kIntegrationSeconds = 30.0;
constexpr double kRootPositionTol = 1e-10;
constexpr double kReproduceSeconds = 60.0;

struct Line {
  int id;
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

Line from_report(const CriterionReport& r, double limit = INFINITY) {
  std::string detail = fmt::format("{}: {} checks, {} failed", r.title, r.entries.size(), r.failures());
  bool ok = r.passed();
  if (std::isfinite(limit)) {
    detail += fmt::format(", {:.2f} s (limit {} s)", r.seconds, limit);
    ok = ok && r.seconds < limit;
  }
  for (const auto& e : r.entries) {
    if (!e.passed && !e.informational) detail += fmt::format("\n      {}: {}", e.label, e.detail);
  }
  return {r.id, ok, detail};
}

Line polynomial_reproduction() {
  auto gen = oracle::rng();
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  double worst = 0.0;
  for (int d = kMinDegree; d <= kMaxDegree; ++d) {
    const UniformPartition part(-1.0, 1.0, 16);
    const QuasiInterpolant qi(d, part);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> c(static_cast<std::size_t>(d + 1));
      for (auto& v : c) v = coeff(gen);
      const auto p = [&](double x) {
        double v = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
      };
      const auto s = qi.apply(p);
      double norm = 0;
      double err = 0;
      for (int m = 0; m < 1000; ++m) {
        const double x = -1.0 + 2.0 * m / 999.0;
        norm = std::max(norm, std::abs(p(x)));
        err = std::max(err, std::abs(eval_spline(s, x) - p(x)));
      }
      worst = std::max(worst, err / norm);
    }
  }
  return {2, worst <= kReproductionTol,
          fmt::format("polynomial reproduction: max |Qp - p| / |p| = {:.2e} (limit {:.0e})", worst, kReproductionTol)};
}

Line oracle_equivalence() {
  auto gen = oracle::rng();
  gen.discard(1000);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> sizes(6, 40);
  int count_mismatch = 0;
  int zeros = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = sizes(gen);
    const SplineSpace space(2, UniformPartition(-1.0, 1.0, n));
    std::vector<double> c(static_cast<std::size_t>(space.dimension()));
    for (auto& v : c) v = coeff(gen);
    const Spline s(space, c);
    const auto expected = oracle::spline_zeros_by_bisection(s);
    const auto report = spline_zeros(s);
    if (report.roots.size() != expected.size()) {
      ++count_mismatch;
      continue;
    }
    zeros += static_cast<int>(expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) worst = std::max(worst, std::abs(report.roots[i].x - expected[i]));
  }
  return {10, count_mismatch == 0 && worst <= kRootPositionTol,
          fmt::format("bisection oracle on 100 random splines: {} count mismatches, {} zeros, max offset {:.2e} "
                      "(limit {:.0e})",
                      count_mismatch, zeros, worst, kRootPositionTol)};
}

Line reproduce_command() {
  const std::string cmd = std::string("\"") + SPLINEQI_CLI + "\" reproduce-paper > /dev/null";
  const auto start = Clock::now();
  const int status = std::system(cmd.c_str());
  const double elapsed = seconds_since(start);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {11, code == 0 && elapsed < kReproduceSeconds,
          fmt::format("reproduce-paper: exit code {}, {:.2f} s (limit {} s)", code, elapsed, kReproduceSeconds)};
}

}  // namespace

int main() {
  std::vector<Line> lines;
  lines.push_back(from_report(check_moment_conditions(), kMomentSeconds));
  lines.push_back(polynomial_reproduction());
  lines.push_back(from_report(check_norms(), kNormSeconds));
  lines.push_back(from_report(check_quadrature_weights()));
  lines.push_back(from_report(check_integration_tables(), kIntegrationSeconds));
  lines.push_back(from_report(check_integration_orders()));
  lines.push_back(from_report(check_diff_matrices()));
  lines.push_back(from_report(check_diff_tables()));
  lines.push_back(from_report(check_roots()));
  lines.push_back(oracle_equivalence());
  lines.push_back(reproduce_command());

  int failed = 0;
  for (const auto& l : lines) {
    fmt::print("criterion {:>2}: {}  {}\n", l.id, l.passed ? "PASS" : "FAIL", l.detail);
    failed += l.passed ? 0 : 1;
  }
  fmt::print("{} of {} criteria passed\n", lines.size() - static_cast<std::size_t>(failed), lines.size());
  return failed == 0 ? 0 : 1;
}
