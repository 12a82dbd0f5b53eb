#pragma once

// Reference implementations used only by the tests. None of them shares code
// with the library kernels.

#include "splineqi/bspline.hpp"
#include "splineqi/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

/// Clamped uniform knot vector on [a, b]: a repeated d+1 times, the n-1
/// interior nodes, b repeated d+1 times.
inline std::vector<double> clamped_knots(int d, double a, double b, int n) {
  std::vector<double> t(static_cast<std::size_t>(d), a);
  for (int i = 0; i <= n; ++i) t.push_back(i == n ? b : a + (b - a) * i / n);
  t.insert(t.end(), static_cast<std::size_t>(d), b);
  return t;
}

/// Cox-de Boor recursion for the i-th (0-based) B-spline of degree d on
/// knots t, with 0/0 = 0. The last non-degenerate interval is closed.
inline double cox_de_boor(const std::vector<double>& t, int i, int d, double x) {
  const auto u = [&](int k) { return t[static_cast<std::size_t>(k)]; };
  if (d == 0) {
    if (u(i) < u(i + 1) && x >= u(i) && x < u(i + 1)) return 1.0;
    // right end: the interval ending at the last knot owns x = b
    if (x == t.back() && u(i + 1) == t.back() && u(i) < u(i + 1)) return 1.0;
    return 0.0;
  }
  double v = 0.0;
  if (u(i + d) > u(i)) v += (x - u(i)) / (u(i + d) - u(i)) * cox_de_boor(t, i, d - 1, x);
  if (u(i + d + 1) > u(i + 1)) v += (u(i + d + 1) - x) / (u(i + d + 1) - u(i + 1)) * cox_de_boor(t, i + 1, d - 1, x);
  return v;
}

/// Interior B-spline on d+2 distinct knots as a scaled divided difference of
/// the truncated power (s - x)_+^d: B(x) = (t_{d+1} - t_0) [t_0..t_{d+1}](. - x)_+^d.
inline double truncated_power_bspline(const std::vector<double>& knots, double x) {
  const int m = static_cast<int>(knots.size());
  std::vector<double> dd(knots.size());
  const int d = m - 2;
  for (int i = 0; i < m; ++i) dd[static_cast<std::size_t>(i)] = std::pow(std::max(knots[static_cast<std::size_t>(i)] - x, 0.0), d);
  for (int level = 1; level < m; ++level) {
    for (int i = m - 1; i >= level; --i) {
      dd[static_cast<std::size_t>(i)] = (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
                                        (knots[static_cast<std::size_t>(i)] - knots[static_cast<std::size_t>(i - level)]);
    }
  }
  return (knots.back() - knots.front()) * dd.back();
}

/// 10-point Gauss-Legendre rule on each of `pieces` equal panels.
inline long double gauss_integral(const std::function<long double(long double)>& f, long double a, long double b,
                                  int pieces) {
  static const long double x[5] = {0.1488743389816312108848260L, 0.4333953941292471907992659L,
                                   0.6794095682990244062343274L, 0.8650633666889845107320967L,
                                   0.9739065285171717200779640L};
  static const long double w[5] = {0.2955242247147528701738930L, 0.2692667193099963550912269L,
                                   0.2190863625159820439955349L, 0.1494513491505805931457763L,
                                   0.0666713443086881375935688L};
  long double sum = 0;
  const long double h = (b - a) / pieces;
  for (int p = 0; p < pieces; ++p) {
    const long double mid = a + (p + 0.5L) * h;
    for (int k = 0; k < 5; ++k) sum += w[k] * (f(mid - x[k] * h / 2) + f(mid + x[k] * h / 2));
  }
  return sum * h / 2;
}

/// de Casteljau evaluation of a Bernstein polynomial on [0, 1].
inline double de_casteljau(std::vector<double> b, double t) {
  for (std::size_t r = 1; r < b.size(); ++r) {
    for (std::size_t i = 0; i + r < b.size(); ++i) b[i] = (1 - t) * b[i] + t * b[i + 1];
  }
  return b.front();
}

/// Zeros of a quadratic q on [lo, hi] found by splitting at the vertex and
/// bisecting every monotone part with a sign change (or an endpoint zero).
inline std::vector<double> bisection_zeros(const std::function<double(double)>& q, double lo, double hi, double vertex) {
  std::vector<double> cuts{lo};
  if (vertex > lo && vertex < hi) cuts.push_back(vertex);
  cuts.push_back(hi);
  std::vector<double> zeros;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    double l = cuts[s];
    double r = cuts[s + 1];
    double fl = q(l);
    const double fr = q(r);
    if (fl == 0.0) {
      zeros.push_back(l);
      continue;
    }
    if (fr == 0.0) {
      zeros.push_back(r);
      continue;
    }
    if ((fl < 0) == (fr < 0)) continue;
    for (int it = 0; it < 200 && r - l > 0; ++it) {
      const double m = 0.5 * (l + r);
      if (m <= l || m >= r) break;
      const double fm = q(m);
      if (fm == 0.0) {
        l = r = m;
        break;
      }
      if ((fm < 0) == (fl < 0)) {
        l = m;
        fl = fm;
      } else {
        r = m;
      }
    }
    zeros.push_back(0.5 * (l + r));
  }
  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end(), [](double u, double v) { return std::abs(u - v) < 1e-12; }),
              zeros.end());
  return zeros;
}

/// All zeros of a quadratic spline, piece by piece, by bisection. Uses only
/// spline evaluation; zeros shared by adjacent pieces are merged.
inline std::vector<double> spline_zeros_by_bisection(const splineqi::Spline& s) {
  const auto& space = s.space();
  const double merge = 1e-12 * (space.partition().b() - space.partition().a());
  std::vector<double> zeros;
  for (int k = 1; k <= space.n(); ++k) {
    const double lo = space.knot(k - 1);
    const double hi = space.knot(k);
    // s' is linear on the piece
    const double d0 = splineqi::eval_spline(s, lo, 1);
    const double d1 = splineqi::eval_spline(s, hi, 1);
    const double vertex = d0 == d1 ? lo : lo + (hi - lo) * d0 / (d0 - d1);
    const auto piece = [&](double x) { return splineqi::eval_spline(s, std::clamp(x, lo, hi)); };
    for (double z : bisection_zeros(piece, lo, hi, vertex)) {
      if (zeros.empty() || std::abs(z - zeros.back()) > merge) zeros.push_back(z);
    }
  }
  return zeros;
}

/// Solves the square system A x = y exactly by Gauss-Jordan elimination.
inline std::vector<splineqi::Rational> solve_exact(std::vector<std::vector<splineqi::Rational>> A,
                                                   std::vector<splineqi::Rational> y) {
  const std::size_t m = y.size();
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (A[p][c] == 0) ++p;
    std::swap(A[p], A[c]);
    std::swap(y[p], y[c]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const splineqi::Rational f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < m; ++k) A[r][k] -= f * A[c][k];
      y[r] -= f * y[c];
    }
  }
  for (std::size_t r = 0; r < m; ++r) y[r] /= A[r][r];
  return y;
}

/// Deterministic generator for the randomized tests; SPLINE_QI_SEED overrides
/// the seed.
inline std::mt19937_64 rng() {
  unsigned long long seed = 20240601ULL;
  if (const char* env = std::getenv("SPLINE_QI_SEED")) seed = std::strtoull(env, nullptr, 10);
  return std::mt19937_64(seed);
}

}  // namespace oracle
