#include "oracles.hpp"
#include "splineqi/functions.hpp"
#include "splineqi/quasi_interp.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

using namespace splineqi;

namespace {

Rational power(const Rational& x, int r) {
  Rational p = 1;
  for (int k = 0; k < r; ++k) p *= x;
  return p;
}

}  // namespace

TEST_CASE("stencils satisfy the moment conditions exactly") {
  for (int d = kMinDegree; d <= kMaxDegree; ++d) {
    for (int n = min_subintervals(d); n <= min_subintervals(d) + 5; ++n) {
      const SplineSpace space(d, UniformPartition(0.0, static_cast<double>(n), n));
      const auto table = build_stencils(d, n);
      REQUIRE(table.stencils().size() == static_cast<std::size_t>(n + d));
      const auto nodes = sample_nodes_unit(table.grid(), n);
      for (int r = 0; r <= d; ++r) {
        const auto theta = monomial_coeffs_unit(space, r);
        for (int j = 1; j <= n + d; ++j) {
          const auto& st = table.stencil(j);
          Rational mu = 0;
          for (std::size_t i = 0; i < st.weights.size(); ++i) {
            mu += st.weights[i] * power(nodes[static_cast<std::size_t>(st.sample_indices[i])], r);
          }
          CAPTURE(d);
          CAPTURE(n);
          CAPTURE(j);
          CAPTURE(r);
          CHECK(mu == theta[static_cast<std::size_t>(j - 1)]);
        }
      }
    }
  }
}

TEST_CASE("stencils on d+1 sites agree with a Vandermonde solve") {
  // With d+1 sites the moment conditions determine the weights uniquely.
  for (int d = kMinDegree; d <= kMaxDegree; ++d) {
    const int n = min_subintervals(d) + 3;
    const SplineSpace space(d, UniformPartition(0.0, static_cast<double>(n), n));
    const auto table = build_stencils(d, n);
    const auto nodes = sample_nodes_unit(table.grid(), n);
    std::vector<std::vector<Rational>> theta;
    for (int r = 0; r <= d; ++r) theta.push_back(monomial_coeffs_unit(space, r));
    int solved = 0;
    for (int j = 1; j <= n + d; ++j) {
      const auto& st = table.stencil(j);
      if (st.weights.size() != static_cast<std::size_t>(d + 1)) continue;
      std::vector<std::vector<Rational>> A(static_cast<std::size_t>(d + 1));
      std::vector<Rational> y;
      for (int r = 0; r <= d; ++r) {
        for (int p : st.sample_indices) A[static_cast<std::size_t>(r)].push_back(power(nodes[static_cast<std::size_t>(p)], r));
        y.push_back(theta[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)]);
      }
      CAPTURE(d);
      CAPTURE(j);
      CHECK(oracle::solve_exact(A, y) == st.weights);
      ++solved;
    }
    CHECK(solved > 0);
  }
}

TEST_CASE("quartic second stencil from the Vandermonde system on f1..f5") {
  const int n = 12;
  const SplineSpace space(4, UniformPartition(0.0, 12.0, n));
  const auto nodes = sample_nodes_unit(GridKind::TGrid, n);
  std::vector<std::vector<Rational>> A(5);
  std::vector<Rational> y;
  for (int r = 0; r <= 4; ++r) {
    for (int p = 0; p < 5; ++p) A[static_cast<std::size_t>(r)].push_back(power(nodes[static_cast<std::size_t>(p)], r));
    y.push_back(monomial_coeffs_unit(space, r)[1]);
  }
  const auto w = oracle::solve_exact(A, y);
  const auto table = build_stencils(4, n);
  const auto& st = table.stencil(2);
  CHECK(st.sample_indices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(st.weights == w);
}

TEST_CASE("printed interior stencils") {
  const auto q2 = build_stencils(2, 10).stencil(5);
  CHECK(q2.weights == std::vector<Rational>{Rational(-1, 8), Rational(10, 8), Rational(-1, 8)});
  CHECK(q2.sample_indices == std::vector<int>{3, 4, 5});  // f_4, f_5, f_6
  const auto q3 = build_stencils(3, 10).stencil(6);
  CHECK(q3.weights == std::vector<Rational>{Rational(-1, 6), Rational(8, 6), Rational(-1, 6)});
  CHECK(q3.sample_indices == std::vector<int>{3, 4, 5});  // f_3, f_4, f_5
  const auto q4 = build_stencils(4, 14).stencil(7);
  CHECK(q4.weights == std::vector<Rational>{Rational(47, 1152), Rational(-107, 288), Rational(319, 192),
                                            Rational(-107, 288), Rational(47, 1152)});
  const auto q5 = build_stencils(5, 14).stencil(8);
  CHECK(q5.weights == std::vector<Rational>{Rational(13, 240), Rational(-7, 15), Rational(73, 40), Rational(-7, 15),
                                            Rational(13, 240)});
  // end functionals are the end values
  const auto t = build_stencils(2, 8);
  CHECK(t.stencil(1).sample_indices == std::vector<int>{0});
  CHECK(t.stencil(10).sample_indices == std::vector<int>{9});
}

TEST_CASE("right-end stencils mirror the left ones") {
  for (int d = kMinDegree; d <= kMaxDegree; ++d) {
    const int n = min_subintervals(d) + 4;
    const auto table = build_stencils(d, n);
    const int last = static_cast<int>(table.sample_count()) - 1;
    for (int j = 1; j <= n + d; ++j) {
      const auto& left = table.stencil(j);
      const auto& right = table.stencil(n + d + 1 - j);
      std::map<int, Rational> mirrored;
      for (std::size_t i = 0; i < right.weights.size(); ++i) mirrored[last - right.sample_indices[i]] = right.weights[i];
      std::map<int, Rational> direct;
      for (std::size_t i = 0; i < left.weights.size(); ++i) direct[left.sample_indices[i]] = left.weights[i];
      CAPTURE(d);
      CAPTURE(j);
      CHECK(direct == mirrored);
    }
  }
}

TEST_CASE("too few subintervals is a precondition error") {
  for (int d = kMinDegree; d <= kMaxDegree; ++d) {
    CHECK_THROWS_AS(build_stencils(d, min_subintervals(d) - 1), PreconditionError);
    CHECK_THROWS_AS(QuasiInterpolant(d, UniformPartition(0.0, 1.0, min_subintervals(d) - 1)), PreconditionError);
  }
}

TEST_CASE("random polynomials are reproduced") {
  auto gen = oracle::rng();
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int d = kMinDegree; d <= kMaxDegree; ++d) {
    const UniformPartition part(-1.3, 0.7, 16);
    const QuasiInterpolant qi(d, part);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> c(static_cast<std::size_t>(d + 1));
      for (auto& v : c) v = coeff(gen);
      auto p = [&](double x) {
        double v = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
      };
      const auto s = qi.apply(p);
      double norm = 0;
      double err = 0;
      for (int m = 0; m < 1000; ++m) {
        const double x = -1.3 + 2.0 * m / 999.0;
        norm = std::max(norm, std::abs(p(x)));
        err = std::max(err, std::abs(eval_spline(s, x) - p(x)));
      }
      CHECK(err <= 1e-11 * norm);
    }
  }
}

TEST_CASE("Lebesgue constants") {
  const UniformPartition part(-1.0, 1.0, 100);
  const auto q2 = lebesgue_profile(QuasiInterpolant(2, part));
  CHECK(std::abs(q2.sup - 1.4734) <= 5e-4);
  const auto q3 = lebesgue_profile(QuasiInterpolant(3, part));
  CHECK(std::abs(q3.sup - 1.631) <= 5e-3);
  // attained in the first subinterval (and its mirror image)
  CHECK(part.interval_of(q3.argmax) == 1);
  const auto q4 = lebesgue_profile(QuasiInterpolant(4, part));
  CHECK(q4.sup <= 2.881);
  const auto q5 = lebesgue_profile(QuasiInterpolant(5, part));
  CHECK(std::abs(q5.sup - 3.106) <= 5e-3);
  for (const auto* p : {&q2, &q3, &q4, &q5}) {
    CHECK(p->x.size() == 100u * 256u + 1u);
    for (double v : p->values) CHECK(v >= 1.0 - 1e-12);
  }
}

TEST_CASE("Lebesgue function of Q2 is symmetric") {
  const UniformPartition part(-1.0, 1.0, 20);
  const auto prof = lebesgue_profile(QuasiInterpolant(2, part), 16);
  const std::size_t m = prof.values.size();
  for (std::size_t i = 0; i < m; ++i) CHECK(prof.values[i] == doctest::Approx(prof.values[m - 1 - i]).epsilon(1e-12));
}

TEST_CASE("approximation order on a smooth function") {
  const auto f = lookup_function("runge16").as_double();
  const std::vector<int> ns = {64, 128, 256, 512};
  for (int d = kMinDegree; d <= kMaxDegree; ++d) {
    const auto report = qi_error_report(d, f, -1.0, 1.0, ns);
    CAPTURE(d);
    CAPTURE(report.order);
    CHECK(report.order >= d + 1 - 0.3);
    for (std::size_t i = 1; i < report.rows.size(); ++i) CHECK(report.rows[i].max_error < report.rows[i - 1].max_error);
  }
}

TEST_CASE("Schoenberg operator reproduces linear functions only") {
  const SplineSpace space(3, UniformPartition(0.0, 1.0, 10));
  const auto theta = greville(space);
  std::vector<double> lin;
  std::vector<double> quad;
  for (double t : theta) {
    lin.push_back(2.0 - 3.0 * t);
    quad.push_back(t * t);
  }
  const auto sl = schoenberg(space, lin);
  const auto sq = schoenberg(space, quad);
  CHECK(eval_spline(sl, 0.37) == doctest::Approx(2.0 - 3.0 * 0.37));
  CHECK(std::abs(eval_spline(sq, 0.37) - 0.37 * 0.37) > 1e-4);
}

TEST_CASE("sample count mismatch") {
  const QuasiInterpolant qi(2, UniformPartition(0.0, 1.0, 8));
  const std::vector<double> y(5, 1.0);
  CHECK_THROWS_AS(qi.apply(y), std::domain_error);
}
