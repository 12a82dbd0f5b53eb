#include "splineqi/differentiation.hpp"

#include "splineqi/convergence.hpp"
#include "splineqi/quasi_interp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace splineqi {

namespace {

void check_degree(int degree) {
  if (degree != 2 && degree != 3) {
    throw std::domain_error("differentiation matrices are defined for d = 2, 3 only");
  }
}

}  // namespace

DiffMatrix::DiffMatrix(int degree, int n, std::vector<Row> rows) : degree_(degree), n_(n), rows_(std::move(rows)) {
  cached_.reserve(rows_.size());
  for (const auto& r : rows_) {
    std::vector<double> v;
    v.reserve(r.entries.size());
    for (const auto& q : r.entries) v.push_back(to_double(q));
    cached_.push_back(std::move(v));
  }
}

Rational DiffMatrix::entry(int row, int column) const {
  const Row& r = rows_.at(static_cast<std::size_t>(row));
  const int offset = column - r.first_column;
  if (offset < 0 || offset >= static_cast<int>(r.entries.size())) return Rational(0);
  return r.entries[static_cast<std::size_t>(offset)];
}

DiffMatrix diff_matrix(int degree, int n) {
  check_degree(degree);
  const StencilTable table = build_stencils(degree, n);
  const auto nodes = sample_nodes_unit(table.grid(), n);
  std::vector<DiffMatrix::Row> rows;
  rows.reserve(nodes.size());
  for (const Rational& v : nodes) {
    // subinterval k containing v, closed on the right at the last one
    const boost::multiprecision::cpp_int whole =
        boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v);
    const int k = std::clamp(whole.convert_to<int>() + 1, 1, n);
    const auto dbasis = detail::active_basis<Rational>(degree, n, k, v, 1);

    std::map<int, Rational> acc;
    for (int s = 0; s <= degree; ++s) {
      const Stencil& st = table.stencil(k + s);
      for (std::size_t i = 0; i < st.weights.size(); ++i) {
        acc[st.sample_indices[i]] += st.weights[i] * dbasis[static_cast<std::size_t>(s)];
      }
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    DiffMatrix::Row row;
    if (!acc.empty()) {
      row.first_column = acc.begin()->first;
      row.entries.assign(static_cast<std::size_t>(acc.rbegin()->first - row.first_column + 1), Rational(0));
      for (const auto& [c, w] : acc) row.entries[static_cast<std::size_t>(c - row.first_column)] = w;
    }
    rows.push_back(std::move(row));
  }
  return DiffMatrix(degree, n, std::move(rows));
}

DiffMatrix closed_form_diff_matrix(int degree, int n) {
  check_degree(degree);
  require_min_subintervals(degree, n);
  std::vector<std::vector<Rational>> boundary;
  std::vector<Rational> interior;
  if (degree == 2) {
    boundary = {{ratio(-8, 3), 3, ratio(-1, 3)},
                {ratio(-7, 6), ratio(11, 16), ratio(13, 24), ratio(-1, 16)},
                {ratio(1, 6), ratio(-3, 4), ratio(1, 48), ratio(5, 8), ratio(-1, 16)}};
    interior = {ratio(1, 16), ratio(-5, 8), 0, ratio(5, 8), ratio(-1, 16)};
  } else {
    boundary = {{ratio(-11, 6), 3, ratio(-3, 2), ratio(1, 3)}, {ratio(-1, 3), ratio(-1, 2), 1, ratio(-1, 6)}};
    interior = {ratio(1, 12), ratio(-2, 3), 0, ratio(2, 3), ratio(-1, 12)};
  }
  const int size = degree == 2 ? n + 2 : n + 1;
  const int nb = static_cast<int>(boundary.size());
  std::vector<DiffMatrix::Row> rows(static_cast<std::size_t>(size));
  for (int i = 0; i < nb; ++i) {
    const auto& b = boundary[static_cast<std::size_t>(i)];
    rows[static_cast<std::size_t>(i)] = {0, b};
    // entry(N-1-i, N-1-j) = -entry(i, j)
    DiffMatrix::Row mirrored;
    mirrored.first_column = size - static_cast<int>(b.size());
    for (auto it = b.rbegin(); it != b.rend(); ++it) mirrored.entries.push_back(-*it);
    rows[static_cast<std::size_t>(size - 1 - i)] = std::move(mirrored);
  }
  for (int i = nb; i < size - nb; ++i) rows[static_cast<std::size_t>(i)] = {i - 2, interior};
  return DiffMatrix(degree, n, std::move(rows));
}

std::vector<double> apply_diff(const DiffMatrix& m, std::span<const double> samples, double h) {
  if (static_cast<int>(samples.size()) != m.size()) {
    throw std::domain_error("differentiation matrix of size " + std::to_string(m.size()) + " applied to " +
                            std::to_string(samples.size()) + " samples");
  }
  if (!(h > 0)) throw std::domain_error("step must be positive");
  std::vector<double> out;
  out.reserve(samples.size());
  for (int i = 0; i < m.size(); ++i) {
    const auto& w = m.cached_[static_cast<std::size_t>(i)];
    const int first = m.rows_[static_cast<std::size_t>(i)].first_column;
    double acc = 0.0;
    for (std::size_t c = 0; c < w.size(); ++c) acc += w[c] * samples[static_cast<std::size_t>(first) + c];
    out.push_back(acc / h);
  }
  return out;
}

namespace {

// derivative at x_at of the parabola through (x0,f0), (x1,f1), (x2,f2)
double three_point(double x0, double x1, double x2, double f0, double f1, double f2, double x_at) {
  const double l0 = ((x_at - x1) + (x_at - x2)) / ((x0 - x1) * (x0 - x2));
  const double l1 = ((x_at - x0) + (x_at - x2)) / ((x1 - x0) * (x1 - x2));
  const double l2 = ((x_at - x0) + (x_at - x1)) / ((x2 - x0) * (x2 - x1));
  return l0 * f0 + l1 * f1 + l2 * f2;
}

}  // namespace

std::vector<double> centered_diff(std::span<const double> nodes, std::span<const double> samples) {
  if (nodes.size() != samples.size()) throw std::domain_error("centered_diff: nodes and samples differ in size");
  const std::size_t m = samples.size();
  if (m < 3) throw PreconditionError("centered differences need at least 3 samples");
  std::vector<double> out(m);
  out[0] = three_point(nodes[0], nodes[1], nodes[2], samples[0], samples[1], samples[2], nodes[0]);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    out[i] = three_point(nodes[i - 1], nodes[i], nodes[i + 1], samples[i - 1], samples[i], samples[i + 1], nodes[i]);
  }
  out[m - 1] = three_point(nodes[m - 3], nodes[m - 2], nodes[m - 1], samples[m - 3], samples[m - 2],
                           samples[m - 1], nodes[m - 1]);
  return out;
}

DiffTable diff_error_table(int degree, const RegisteredFunction& f, double a, double b, std::span<const int> ns) {
  check_degree(degree);
  if (!f.has_derivative()) throw std::domain_error("no closed-form derivative for " + f.name);
  DiffTable table{degree, f.name, {}, 0.0, 0.0};
  std::vector<double> qi_errors;
  std::vector<double> fd_errors;
  for (int n : ns) {
    const UniformPartition part(a, b, n);
    const auto nodes = sample_nodes<double>(grid_kind(degree), a, b, n);
    std::vector<double> y;
    for (double x : nodes) y.push_back(f(x));
    const auto qi = apply_diff(diff_matrix(degree, n), y, part.h());
    const auto fd = centered_diff(nodes, y);
    DiffRow row{n, 0.0, 0.0};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double exact = static_cast<double>(f.derivative(nodes[i]));
      row.qi_error = std::max(row.qi_error, std::abs(exact - qi[i]));
      row.centered_error = std::max(row.centered_error, std::abs(exact - fd[i]));
    }
    table.rows.push_back(row);
    qi_errors.push_back(row.qi_error);
    fd_errors.push_back(row.centered_error);
  }
  auto order = [&](const std::vector<double>& errors) {
    const auto nonzero = std::count_if(errors.begin(), errors.end(), [](double e) { return e > 0.0; });
    return nonzero >= 2 ? fit_order(ns, errors) : std::nan("");
  };
  table.qi_order = order(qi_errors);
  table.centered_order = order(fd_errors);
  return table;
}

}  // namespace splineqi
