#include "splineqi/rootfind.hpp"

#include "splineqi/quasi_interp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace splineqi {

double BernsteinQuadratic::operator()(double x) const {
  const double t = (x - left) / (right - left);
  const double s = 1.0 - t;
  return b0 * s * s + 2.0 * b1 * s * t + b2 * t * t;
}

BernsteinQuadratic piece_bernstein(const Spline& s, int k) {
  const auto& space = s.space();
  if (space.degree() != 2) throw std::domain_error("piece_bernstein needs a quadratic spline");
  if (k < 1 || k > space.n()) {
    throw std::domain_error("interval index " + std::to_string(k) + " outside 1.." + std::to_string(space.n()));
  }
  const auto& part = space.partition();
  const double left = part.node(k - 1);
  const double right = part.node(k);
  // both ends evaluated with the polynomial of piece k
  const auto active = s.coefficients().subspan(static_cast<std::size_t>(k - 1), 3);
  const double u0 = static_cast<double>(k - 1);
  const double v0 = detail::deboor_local<double>(2, space.n(), k, active, u0, 0);
  const double dv0 = detail::deboor_local<double>(2, space.n(), k, active, u0, 1);
  const double v1 = detail::deboor_local<double>(2, space.n(), k, active, u0 + 1.0, 0);
  // dv0 is in unit coordinates: (h/2) s'(x_{k-1}) = dv0 / 2
  return {v0, v0 + 0.5 * dv0, v1, left, right};
}

PieceRoots solve_piece(const BernsteinQuadratic& piece, double zero_tol) {
  PieceRoots out;
  const double b0 = piece.b0;
  const double b1 = piece.b1;
  const double b2 = piece.b2;
  const double scale = std::max({std::abs(b0), std::abs(b1), std::abs(b2)});
  if (scale <= zero_tol) {
    out.identically_zero = true;
    return out;
  }
  // p(t) = a t^2 + b t + c on t in [0, 1]
  const double a = b0 - 2.0 * b1 + b2;
  const double b = 2.0 * (b1 - b0);
  const double c = b0;
  const double quarter_disc = b1 * b1 - b0 * b2;
  const double tol_disc = 1e-12 * scale * scale;
  const double width = piece.right - piece.left;
  constexpr double slack = 1e-12;

  std::vector<double> ts;
  if (a != 0.0 && std::abs(quarter_disc) <= tol_disc) {
    out.tangency = true;
    ts.push_back((b0 - b1) / a);
  } else if (quarter_disc < 0.0) {
    return out;
  } else {
    const double q = -0.5 * (b + std::copysign(2.0 * std::sqrt(quarter_disc), b));
    if (q != 0.0) {
      ts.push_back(c / q);
      if (a != 0.0) ts.push_back(q / a);
    }
  }
  std::sort(ts.begin(), ts.end());
  for (double t : ts) {
    if (!std::isfinite(t) || t < -slack || t > 1.0 + slack) continue;
    t = std::clamp(t, 0.0, 1.0);
    const double x = t == 1.0 ? piece.right : piece.left + t * width;
    if (out.roots.empty() || out.roots.back() != x) out.roots.push_back(x);
  }
  return out;
}

RootReport spline_zeros(const Spline& s) {
  const auto& space = s.space();
  const auto& part = space.partition();
  double cmax = 0.0;
  for (double c : s.coefficients()) cmax = std::max(cmax, std::abs(c));
  const double zero_tol = std::numeric_limits<double>::min() + 1e-14 * cmax;

  RootReport report;
  for (int k = 1; k <= part.n(); ++k) {
    const auto piece = piece_bernstein(s, k);
    const auto found = solve_piece(piece, zero_tol);
    if (found.identically_zero) {
      report.zero_intervals.push_back(k);
      continue;
    }
    for (double x : found.roots) report.roots.push_back({x, k, found.tangency, piece(x)});
  }
  std::stable_sort(report.roots.begin(), report.roots.end(),
                   [](const Root& l, const Root& r) { return l.x < r.x; });
  const double tol_dedup = 1e-12 * (part.b() - part.a());
  std::vector<Root> merged;
  for (const Root& r : report.roots) {
    if (!merged.empty() && r.x - merged.back().x <= tol_dedup) {
      merged.back().tangency = merged.back().tangency || r.tangency;
      continue;
    }
    merged.push_back(r);
  }
  report.roots = std::move(merged);
  return report;
}

RootReport find_zeros(std::span<const double> samples, const UniformPartition& partition) {
  const SplineSpace space(2, partition);
  return spline_zeros(apply_qi(space, build_stencils(2, partition.n()), samples));
}

double nearest_root(const RootReport& report, double target) {
  if (report.roots.empty()) throw std::domain_error("no zeros to match");
  double best = report.roots.front().x;
  for (const Root& r : report.roots) {
    if (std::abs(r.x - target) < std::abs(best - target)) best = r.x;
  }
  return best;
}

std::vector<double> refine_roots(const RootReport& report, const std::function<double(double)>& f,
                                 const std::function<double(double)>& df, int iterations) {
  std::vector<double> out;
  for (const Root& r : report.roots) {
    double x = r.x;
    for (int it = 0; it < iterations; ++it) {
      const double slope = df(x);
      if (slope == 0.0 || !std::isfinite(slope)) break;
      x -= f(x) / slope;
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace splineqi
