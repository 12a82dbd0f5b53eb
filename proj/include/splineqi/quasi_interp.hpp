#pragma once

#include "splineqi/bspline.hpp"

#include <functional>
#include <span>
#include <vector>

namespace splineqi {

/// Coefficient functional mu_j(f) = sum_i w_i f(node_{s_i}); sample
/// positions are 0-based into the SampleGrid.
struct Stencil {
  std::vector<int> sample_indices;
  std::vector<Rational> weights;
};

/// Coefficient functionals of the discrete quasi-interpolant of degree d on
/// n subintervals: one Stencil per B-spline j = 1..n+d. Geometry free, the
/// same table serves every interval [a, b].
class StencilTable {
 public:
  StencilTable(int degree, int n, std::vector<Stencil> stencils);

  int degree() const { return degree_; }
  int n() const { return n_; }
  GridKind grid() const { return grid_kind(degree_); }
  /// n+2 for even degree, n+1 for odd degree.
  std::size_t sample_count() const;
  /// Stencil of B_j, j = 1..n+d.
  const Stencil& stencil(int j) const { return stencils_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<Stencil>& stencils() const { return stencils_; }

 private:
  int degree_;
  int n_;
  std::vector<Stencil> stencils_;
};

/// Exact coefficient functionals of Q_2..Q_5. Boundary functionals on the
/// left are tabulated; right-end ones are their mirror images.
StencilTable build_stencils(int degree, int n);

/// c_j = mu_j(samples).
Spline apply_qi(const SplineSpace& space, const StencilTable& table, std::span<const double> samples);

/// Schoenberg-Marsden operator: c_j = f(theta_j). Exact on linear functions.
Spline schoenberg(const SplineSpace& space, std::span<const double> samples_at_greville);

/// A degree-d quasi-interpolant bound to an interval: space, stencils and
/// data sites together.
class QuasiInterpolant {
 public:
  QuasiInterpolant(int degree, const UniformPartition& partition);

  const SplineSpace& space() const { return space_; }
  const StencilTable& table() const { return table_; }
  const SampleGrid& grid() const { return grid_; }

  Spline apply(std::span<const double> samples) const { return apply_qi(space_, table_, samples); }
  Spline apply(const std::function<double(double)>& f) const;

 private:
  SplineSpace space_;
  StencilTable table_;
  SampleGrid grid_;
};

struct LebesgueProfile {
  std::vector<double> x;
  std::vector<double> values;
  double sup = 0.0;
  /// Leftmost sample attaining sup.
  double argmax = 0.0;
};

/// Lebesgue function sum_i |L_i(x)| of the quasi-Lagrange form Q f = sum_i
/// f_i L_i, sampled at `resolution` equispaced points per subinterval plus b.
LebesgueProfile lebesgue_profile(const QuasiInterpolant& qi, int resolution = 256);

struct ApproximationRow {
  int n = 0;
  double max_error = 0.0;
};

struct ApproximationReport {
  std::vector<ApproximationRow> rows;
  /// Least-squares slope of log(error) against log(h).
  double order = 0.0;
};

/// max |f - Q_d f| on a dense grid (`resolution` points per subinterval) for
/// each n.
ApproximationReport qi_error_report(int degree, const std::function<double(double)>& f, double a, double b,
                                    std::span<const int> ns, int resolution = 16);

}  // namespace splineqi
