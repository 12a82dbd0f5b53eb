#pragma once

#include "splineqi/table.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace splineqi {

/// A value as printed in a published table, with the size of one unit in
/// its last printed digit. Accepts "0.014009", "-.007841", "0.73(-9)" and
/// "1.8E(-4)"; m(e) reads as m * 10^e.
struct PrintedValue {
  std::string text;
  double value = 0.0;
  double unit = 0.0;
};

PrintedValue parse_printed(std::string_view text);

/// Same sign and |computed - printed| <= one unit in the last printed digit.
bool matches_last_digit(double computed, const PrintedValue& printed);

struct EntryCheck {
  std::string label;
  bool passed = false;
  /// Reported but not part of the verdict.
  bool informational = false;
  std::string detail;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<EntryCheck> entries;
  std::vector<Table> tables;
  double seconds = 0.0;

  bool passed() const;
  int failures() const;
};

/// Exact moment conditions mu_j(x^r) = theta_j^(r), d = 2..5, r = 0..d.
CriterionReport check_moment_conditions();
/// Lebesgue constants at n = 100, 256 samples per subinterval.
CriterionReport check_norms();
/// Derived quadrature weights against the closed-form tables.
CriterionReport check_quadrature_weights();
/// Error tables of the quasi-interpolant rules, Simpson and Boole.
CriterionReport check_integration_tables();
/// Fitted orders of the quadrature errors on e^{-x} sin(5 pi x).
CriterionReport check_integration_orders();
/// Differentiation matrices against their closed forms.
CriterionReport check_diff_matrices();
/// Derivative error tables for d = 2, 3.
CriterionReport check_diff_tables();
/// Zeros of Q_2 P_8 against the zeros of P_8.
CriterionReport check_roots();

/// All of the above, in order.
std::vector<CriterionReport> reproduce_tables();

}  // namespace splineqi
