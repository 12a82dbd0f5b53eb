#pragma once

#include "splineqi/bspline.hpp"
#include "splineqi/functions.hpp"

#include <span>
#include <vector>

namespace splineqi {

/// Matrix D with y' = D y / h mapping samples of f at the data sites of Q_d
/// to (Q_d f)' at the same sites. Entries are exact and tabulated at h = 1.
/// Stored by rows as a contiguous band; entry() is zero outside it.
class DiffMatrix {
 public:
  struct Row {
    int first_column = 0;
    std::vector<Rational> entries;
  };

  DiffMatrix(int degree, int n, std::vector<Row> rows);

  int degree() const { return degree_; }
  int n() const { return n_; }
  /// n+2 for d = 2, n+1 for d = 3.
  int size() const { return static_cast<int>(rows_.size()); }
  /// 0-based row and column.
  Rational entry(int row, int column) const;
  const Row& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

 private:
  int degree_;
  int n_;
  std::vector<Row> rows_;
  std::vector<std::vector<double>> cached_;

  friend std::vector<double> apply_diff(const DiffMatrix& m, std::span<const double> samples, double h);
};

/// Tabulates (Q_d f)'(v_i) = sum_j mu_j(f) B_j'(v_i) symbolically, d in {2, 3}.
DiffMatrix diff_matrix(int degree, int n);

/// The same matrix assembled from its displayed closed form: three (d = 2) or
/// two (d = 3) boundary rows, a five-point interior row, and the
/// skew-persymmetric images of the boundary rows.
DiffMatrix closed_form_diff_matrix(int degree, int n);

/// (1/h) M y.
std::vector<double> apply_diff(const DiffMatrix& m, std::span<const double> samples, double h);

/// Second-order three-point derivative estimates at every node: centred at
/// interior nodes, one-sided at the two ends. Nodes may be unevenly spaced
/// (the ends of the T grid are).
std::vector<double> centered_diff(std::span<const double> nodes, std::span<const double> samples);

struct DiffRow {
  int n = 0;
  double qi_error = 0.0;
  double centered_error = 0.0;
};

struct DiffTable {
  int degree = 2;
  std::string function;
  std::vector<DiffRow> rows;
  double qi_order = 0.0;
  double centered_order = 0.0;
};

/// Max over the data sites of |f' - estimate| for the quasi-interpolant
/// matrix and for centred differences. Requires a closed-form derivative.
DiffTable diff_error_table(int degree, const RegisteredFunction& f, double a, double b, std::span<const int> ns);

}  // namespace splineqi
