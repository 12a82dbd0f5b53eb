#pragma once

#include "splineqi/rational.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <vector>

namespace splineqi {

/// Raised when a size requirement of a quasi-interpolant family is violated
/// (for example too few subintervals for the boundary stencils).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMinDegree = 2;
inline constexpr int kMaxDegree = 5;

/// Smallest subdivision count for which the boundary and interior stencils
/// of the degree-d quasi-interpolant do not overlap: 6, 8, 10, 12.
int min_subintervals(int degree);

/// Throws PreconditionError when n < min_subintervals(degree).
void require_min_subintervals(int degree, int n);

/// Uniform partition x_i = a + i h of [a, b] into n subintervals.
class UniformPartition {
 public:
  UniformPartition(double a, double b, int n);

  double a() const { return a_; }
  double b() const { return b_; }
  int n() const { return n_; }
  double h() const { return h_; }

  /// x_i with the index clamped to [0, n]; x_0 == a and x_n == b exactly.
  double node(int i) const;

  /// Index k in 1..n of the subinterval [x_{k-1}, x_k] containing x. The
  /// last subinterval is closed on the right.
  int interval_of(double x) const;

  /// (x - a) / h.
  double to_unit(double x) const { return (x - a_) / h_; }

  bool contains(double x) const { return x >= a_ && x <= b_; }

 private:
  double a_;
  double b_;
  int n_;
  double h_;
};

/// Splines of degree d and class C^{d-1} on a uniform partition with the end
/// knots repeated d+1 times. B-splines are indexed j = 1..n+d with
/// supp(B_j) = [x_{j-d-1}, x_j].
///
/// Knots are never stored: x_i for i outside [0, n] is the clamped node, so
/// all knot arithmetic in unit coordinates (h = 1, a = 0) is integer.
class SplineSpace {
 public:
  SplineSpace(int degree, UniformPartition partition);

  int degree() const { return degree_; }
  const UniformPartition& partition() const { return partition_; }
  int n() const { return partition_.n(); }
  /// Number of B-splines, n + d.
  int dimension() const { return partition_.n() + degree_; }

  double knot(int i) const { return partition_.node(i); }
  int unit_knot(int i) const { return std::clamp(i, 0, partition_.n()); }

  void check_index(int j) const;

 private:
  int degree_;
  UniformPartition partition_;
};

/// S = sum_j c_j B_j.
class Spline {
 public:
  Spline(SplineSpace space, std::vector<double> coefficients);

  const SplineSpace& space() const { return space_; }
  std::span<const double> coefficients() const { return coefficients_; }
  /// c_j for j in 1..n+d.
  double coefficient(int j) const { return coefficients_[static_cast<std::size_t>(j - 1)]; }

 private:
  SplineSpace space_;
  std::vector<double> coefficients_;
};

namespace detail {

/// de Boor evaluation of the deriv-th derivative (in unit coordinates) of a
/// spline on subinterval k, given its d+1 active coefficients c_k..c_{k+d}.
/// Knots are tau_i = clamp(i, 0, n) with B_j built on tau_{j-d-1}..tau_j.
/// Works for any field type, so the same kernel serves floating point
/// evaluation and exact rational tabulation.
template <class T>
T deboor_local(int degree, int n, int k, std::span<const T> active, const T& u, int deriv) {
  std::array<T, kMaxDegree + 1> p{};
  for (int s = 0; s <= degree; ++s) p[static_cast<std::size_t>(s)] = active[static_cast<std::size_t>(s)];
  auto tau = [n](int i) { return std::clamp(i, 0, n); };
  const int m = k - 1;  // knot index of the left end of the subinterval
  // p[s] holds the coefficient attached to basis index i = m - degree + s
  int deg = degree;
  for (int r = 0; r < deriv; ++r) {
    for (int s = deg; s >= 1; --s) {
      const int i = m - deg + s;
      const int span = tau(i + deg) - tau(i);
      p[static_cast<std::size_t>(s)] =
          T(deg) * (p[static_cast<std::size_t>(s)] - p[static_cast<std::size_t>(s - 1)]) / T(span);
    }
    for (int s = 0; s < deg; ++s) p[static_cast<std::size_t>(s)] = p[static_cast<std::size_t>(s + 1)];
    --deg;
  }
  // p[0..deg] now refers to basis indices m - deg .. m for degree deg
  for (int r = 1; r <= deg; ++r) {
    for (int s = deg; s >= r; --s) {
      const int i = m - deg + s;
      const T left = T(tau(i));
      const T width = T(tau(i + deg + 1 - r) - tau(i));
      const T alpha = (u - left) / width;
      p[static_cast<std::size_t>(s)] =
          (T(1) - alpha) * p[static_cast<std::size_t>(s - 1)] + alpha * p[static_cast<std::size_t>(s)];
    }
  }
  return p[static_cast<std::size_t>(deg)];
}

/// Values of the deriv-th derivatives of B_k..B_{k+d} at unit coordinate u
/// inside subinterval k.
template <class T>
std::array<T, kMaxDegree + 1> active_basis(int degree, int n, int k, const T& u, int deriv) {
  std::array<T, kMaxDegree + 1> out{};
  std::array<T, kMaxDegree + 1> unit{};
  for (int s = 0; s <= degree; ++s) {
    unit.fill(T(0));
    unit[static_cast<std::size_t>(s)] = T(1);
    out[static_cast<std::size_t>(s)] = deboor_local<T>(
        degree, n, k, std::span<const T>(unit.data(), static_cast<std::size_t>(degree + 1)), u, deriv);
  }
  return out;
}

}  // namespace detail

/// B_j(x). Zero outside supp(B_j).
double eval_basis(const SplineSpace& space, int j, double x);

/// Values of all B-splines that are nonzero on the subinterval containing x,
/// i.e. B_k..B_{k+d}; `first` receives k.
std::array<double, kMaxDegree + 1> eval_active_basis(const SplineSpace& space, double x, int& first);

/// d^r/dx^r S(x) for 0 <= r <= d.
double eval_spline(const Spline& s, double x, int deriv_order = 0);

/// Greville abscissae theta_j = (x_{j-1} + ... + x_{j-d}) / d, j = 1..n+d.
std::vector<double> greville(const SplineSpace& space);
/// Same in unit coordinates (a = 0, h = 1), exact.
std::vector<Rational> greville_unit(const SplineSpace& space);

/// Coefficients theta_j^{(r)} of x^r in the B-spline basis:
/// binom(d, r)^{-1} times the r-th elementary symmetric function of the
/// interior knots x_{j-d}..x_{j-1}.
std::vector<double> monomial_coeffs(const SplineSpace& space, int r);
/// Same in unit coordinates, exact.
std::vector<Rational> monomial_coeffs_unit(const SplineSpace& space, int r);

/// Integral of B_j over [a, b]: (x_j - x_{j-d-1}) / (d + 1).
double integral_basis(const SplineSpace& space, int j);
/// Integral of B_j in units of h, exact.
Rational integral_basis_unit(const SplineSpace& space, int j);

enum class GridKind { TGrid, XGrid };

/// Data sites of the discrete quasi-interpolant: midpoints plus endpoints
/// (TGrid, n+2 nodes, even degree) or the partition nodes (XGrid, n+1 nodes,
/// odd degree). Stencils address nodes by 0-based position.
struct SampleGrid {
  GridKind kind;
  std::vector<double> nodes;

  std::size_t size() const { return nodes.size(); }
};

GridKind grid_kind(int degree);
SampleGrid sample_grid(const SplineSpace& space);
/// Node positions in unit coordinates, exact.
std::vector<Rational> sample_nodes_unit(GridKind kind, int n);
/// Node positions for an arbitrary floating type.
template <std::floating_point T>
std::vector<T> sample_nodes(GridKind kind, T a, T b, int n) {
  const T h = (b - a) / T(n);
  std::vector<T> nodes;
  if (kind == GridKind::XGrid) {
    nodes.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) nodes.push_back(a + T(i) * h);
    nodes.push_back(b);
  } else {
    nodes.reserve(static_cast<std::size_t>(n + 2));
    nodes.push_back(a);
    for (int j = 2; j <= n + 1; ++j) nodes.push_back(a + (T(j) - T(1.5)) * h);
    nodes.push_back(b);
  }
  return nodes;
}

}  // namespace splineqi
