#pragma once

#include "splineqi/bspline.hpp"

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace splineqi {

/// Bernstein coefficients of one quadratic piece on [left, right].
struct BernsteinQuadratic {
  double b0 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double left = 0.0;
  double right = 1.0;

  double operator()(double x) const;
};

/// Restriction of a quadratic spline to [x_{k-1}, x_k], k = 1..n:
/// b0 = s(x_{k-1}), b2 = s(x_k), b1 = b0 + (h/2) s'(x_{k-1}).
BernsteinQuadratic piece_bernstein(const Spline& s, int k);

struct PieceRoots {
  std::vector<double> roots;  // increasing, inside [left, right]
  bool tangency = false;      // double root (discriminant ~ 0)
  bool identically_zero = false;
};

/// Real zeros of a Bernstein quadratic in its closed interval, from the
/// cancellation-free form of the quadratic formula. A tangential double root
/// (|b1^2 - b0 b2| <= 1e-12 max|b_i|^2) is returned once with `tangency` set.
/// When every |b_i| <= zero_tol the piece is flagged identically zero and no
/// roots are listed.
PieceRoots solve_piece(const BernsteinQuadratic& piece, double zero_tol = 0.0);

struct Root {
  double x = 0.0;
  int interval = 0;  // k with x in [x_{k-1}, x_k]
  bool tangency = false;
  double residual = 0.0;  // value of the spline at x
};

struct RootReport {
  std::vector<Root> roots;
  /// Subintervals on which the spline vanishes identically.
  std::vector<int> zero_intervals;
};

/// All zeros of a quadratic spline, piece by piece. Zeros at a knot show up
/// in both adjacent pieces and are merged (tolerance 1e-12 (b - a)).
RootReport spline_zeros(const Spline& s);

/// Zeros of Q_2 f computed from samples of f on the T grid of `partition`.
RootReport find_zeros(std::span<const double> samples, const UniformPartition& partition);

/// Zero of the report nearest to `target`; ties go to the smaller zero.
/// Throws std::domain_error when the report is empty.
double nearest_root(const RootReport& report, double target);

/// Newton steps on f starting from each reported zero. Off by default in the
/// CLI; the plain report contains the zeros of Q_2 f.
std::vector<double> refine_roots(const RootReport& report, const std::function<double(double)>& f,
                                 const std::function<double(double)>& df, int iterations = 3);

}  // namespace splineqi
