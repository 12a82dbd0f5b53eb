#include "splineqi/quasi_interp.hpp"

#include "splineqi/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace splineqi {

StencilTable::StencilTable(int degree, int n, std::vector<Stencil> stencils)
    : degree_(degree), n_(n), stencils_(std::move(stencils)) {
  if (static_cast<int>(stencils_.size()) != n + degree) {
    throw std::domain_error("stencil table needs n+d stencils");
  }
}

std::size_t StencilTable::sample_count() const {
  return static_cast<std::size_t>(grid() == GridKind::TGrid ? n_ + 2 : n_ + 1);
}

namespace {

// Sample indices below follow the f_i numbering of the data sites: f_1..f_{n+2}
// on the T grid, f_0..f_n on the X grid.
struct Term {
  int sample;
  Rational weight;
};

struct Family {
  std::vector<std::vector<Term>> left;  // mu_1, mu_2, ...
  std::vector<Rational> interior;       // weights on consecutive samples
  int interior_shift;                   // first interior sample = j + interior_shift
};

Family quadratic_family() {
  return {{{{1, 1}},
           {{1, ratio(-2, 6)}, {2, ratio(9, 6)}, {3, ratio(-1, 6)}}},
          {ratio(-1, 8), ratio(10, 8), ratio(-1, 8)},
          -1};
}

Family cubic_family() {
  return {{{{0, 1}},
           {{0, ratio(7, 18)}, {1, ratio(18, 18)}, {2, ratio(-9, 18)}, {3, ratio(2, 18)}}},
          {ratio(-1, 6), ratio(8, 6), ratio(-1, 6)},
          -3};
}

Family quartic_family() {
  return {{{{1, 1}},
           {{1, ratio(17, 105)}, {2, ratio(35, 32)}, {3, ratio(-35, 96)}, {4, ratio(21, 160)}, {5, ratio(-5, 224)}},
           {{1, ratio(-19, 45)}, {2, ratio(377, 288)}, {3, ratio(61, 288)}, {4, ratio(-59, 480)}, {5, ratio(7, 288)}},
           {{1, ratio(47, 315)}, {2, ratio(-77, 144)}, {3, ratio(251, 144)}, {4, ratio(-97, 240)}, {5, ratio(47, 1008)}}},
          {ratio(47, 1152), ratio(-107, 288), ratio(319, 192), ratio(-107, 288), ratio(47, 1152)},
          // centred on f_{j-1}, the data site at the Greville point of B_j
          -3};
}

Family quintic_family() {
  return {{{{0, 1}},
           {{0, ratio(163, 300)}, {1, 1}, {2, -1}, {3, ratio(2, 3)}, {4, ratio(-1, 4)}, {5, ratio(1, 25)}},
           {{0, ratio(1, 200)},
            {1, ratio(103, 60)},
            {2, ratio(-73, 60)},
            {3, ratio(7, 10)},
            {4, ratio(-29, 120)},
            {5, ratio(11, 300)}},
           {{0, ratio(-41, 400)},
            {1, ratio(43, 60)},
            {2, ratio(103, 120)},
            {3, ratio(-7, 10)},
            {4, ratio(13, 48)},
            {5, ratio(-13, 300)}}},
          {ratio(13, 240), ratio(-7, 15), ratio(73, 40), ratio(-7, 15), ratio(13, 240)},
          -5};
}

Family family_for(int degree) {
  switch (degree) {
    case 2: return quadratic_family();
    case 3: return cubic_family();
    case 4: return quartic_family();
    case 5: return quintic_family();
    default: throw std::domain_error("degree must be in 2..5, got " + std::to_string(degree));
  }
}

}  // namespace

StencilTable build_stencils(int degree, int n) {
  require_min_subintervals(degree, n);
  const Family family = family_for(degree);
  const GridKind kind = grid_kind(degree);
  const int first_site = kind == GridKind::TGrid ? 1 : 0;
  const int count = kind == GridKind::TGrid ? n + 2 : n + 1;
  const int dim = n + degree;
  const int nb = static_cast<int>(family.left.size());

  std::vector<Stencil> stencils(static_cast<std::size_t>(dim));
  for (int j = 1; j <= nb; ++j) {
    Stencil left;
    Stencil right;
    for (const auto& term : family.left[static_cast<std::size_t>(j - 1)]) {
      const int pos = term.sample - first_site;
      left.sample_indices.push_back(pos);
      left.weights.push_back(term.weight);
      right.sample_indices.push_back(count - 1 - pos);
      right.weights.push_back(term.weight);
    }
    stencils[static_cast<std::size_t>(j - 1)] = std::move(left);
    stencils[static_cast<std::size_t>(dim - j)] = std::move(right);
  }
  for (int j = nb + 1; j <= dim - nb; ++j) {
    Stencil& s = stencils[static_cast<std::size_t>(j - 1)];
    const int start = j + family.interior_shift - first_site;
    for (std::size_t i = 0; i < family.interior.size(); ++i) {
      s.sample_indices.push_back(start + static_cast<int>(i));
      s.weights.push_back(family.interior[i]);
    }
  }
  return StencilTable(degree, n, std::move(stencils));
}

Spline apply_qi(const SplineSpace& space, const StencilTable& table, std::span<const double> samples) {
  if (space.degree() != table.degree() || space.n() != table.n()) {
    throw std::domain_error("stencil table does not match the spline space");
  }
  if (samples.size() != table.sample_count()) {
    throw std::domain_error("expected " + std::to_string(table.sample_count()) + " samples, got " +
                            std::to_string(samples.size()));
  }
  std::vector<double> coeffs;
  coeffs.reserve(table.stencils().size());
  for (const auto& st : table.stencils()) {
    double c = 0.0;
    for (std::size_t i = 0; i < st.weights.size(); ++i) {
      c += to_double(st.weights[i]) * samples[static_cast<std::size_t>(st.sample_indices[i])];
    }
    coeffs.push_back(c);
  }
  return Spline(space, std::move(coeffs));
}

Spline schoenberg(const SplineSpace& space, std::span<const double> samples_at_greville) {
  if (static_cast<int>(samples_at_greville.size()) != space.dimension()) {
    throw std::domain_error("Schoenberg operator needs one sample per B-spline");
  }
  return Spline(space, std::vector<double>(samples_at_greville.begin(), samples_at_greville.end()));
}

QuasiInterpolant::QuasiInterpolant(int degree, const UniformPartition& partition)
    : space_(degree, partition),
      table_(build_stencils(degree, partition.n())),
      grid_(sample_grid(space_)) {}

Spline QuasiInterpolant::apply(const std::function<double(double)>& f) const {
  std::vector<double> samples;
  samples.reserve(grid_.size());
  for (double x : grid_.nodes) samples.push_back(f(x));
  return apply(samples);
}

LebesgueProfile lebesgue_profile(const QuasiInterpolant& qi, int resolution) {
  if (resolution < 1) throw std::domain_error("resolution must be positive");
  const auto& space = qi.space();
  const auto& part = space.partition();
  const auto& table = qi.table();
  const int d = space.degree();

  // weights as doubles, and the fundamental function values per sample
  std::vector<std::vector<double>> weights;
  for (const auto& st : table.stencils()) {
    std::vector<double> w;
    for (const auto& q : st.weights) w.push_back(to_double(q));
    weights.push_back(std::move(w));
  }
  std::vector<double> fundamental(table.sample_count(), 0.0);
  std::vector<int> touched;

  LebesgueProfile profile;
  const auto total = static_cast<std::size_t>(part.n()) * static_cast<std::size_t>(resolution) + 1;
  profile.x.reserve(total);
  profile.values.reserve(total);
  for (std::size_t m = 0; m < total; ++m) {
    const double x = m + 1 == total ? part.b() : part.a() + part.h() * static_cast<double>(m) / resolution;
    int first = 0;
    const auto basis = eval_active_basis(space, x, first);
    touched.clear();
    for (int s = 0; s <= d; ++s) {
      const int j = first + s;
      const auto& st = table.stencil(j);
      const auto& w = weights[static_cast<std::size_t>(j - 1)];
      for (std::size_t i = 0; i < w.size(); ++i) {
        const int p = st.sample_indices[i];
        if (fundamental[static_cast<std::size_t>(p)] == 0.0) touched.push_back(p);
        fundamental[static_cast<std::size_t>(p)] += w[i] * basis[static_cast<std::size_t>(s)];
      }
    }
    double lambda = 0.0;
    for (int p : touched) {
      lambda += std::abs(fundamental[static_cast<std::size_t>(p)]);
      fundamental[static_cast<std::size_t>(p)] = 0.0;
    }
    profile.x.push_back(x);
    profile.values.push_back(lambda);
    if (lambda > profile.sup) {
      profile.sup = lambda;
      profile.argmax = x;
    }
  }
  return profile;
}

ApproximationReport qi_error_report(int degree, const std::function<double(double)>& f, double a, double b,
                                    std::span<const int> ns, int resolution) {
  ApproximationReport report;
  std::vector<double> errors;
  for (int n : ns) {
    const UniformPartition part(a, b, n);
    const QuasiInterpolant qi(degree, part);
    const Spline s = qi.apply(f);
    double err = 0.0;
    for (int m = 0; m <= n * resolution; ++m) {
      const double x = m == n * resolution ? b : a + part.h() * static_cast<double>(m) / resolution;
      err = std::max(err, std::abs(f(x) - eval_spline(s, x)));
    }
    report.rows.push_back({n, err});
    errors.push_back(err);
  }
  const auto nonzero = std::count_if(errors.begin(), errors.end(), [](double e) { return e > 0.0; });
  report.order = nonzero >= 2 ? fit_order(ns, errors) : std::numeric_limits<double>::quiet_NaN();
  return report;
}

}  // namespace splineqi
