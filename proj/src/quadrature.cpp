#include "splineqi/quadrature.hpp"

#include "splineqi/convergence.hpp"
#include "splineqi/quasi_interp.hpp"

#include <cmath>

namespace splineqi {

QuadratureRule::QuadratureRule(int degree, UniformPartition partition, std::vector<Rational> weights)
    : degree_(degree), partition_(partition), weights_(std::move(weights)) {
  const auto expected = static_cast<std::size_t>(grid() == GridKind::TGrid ? n() + 2 : n() + 1);
  if (weights_.size() != expected) throw std::domain_error("quadrature weights do not match the data sites");
}

SampleGrid QuadratureRule::nodes() const {
  return SampleGrid{grid(), sample_nodes<double>(grid(), partition_.a(), partition_.b(), n())};
}

QuadratureRule derive_rule(int degree, const UniformPartition& partition) {
  const SplineSpace space(degree, partition);
  const StencilTable table = build_stencils(degree, partition.n());
  std::vector<Rational> weights(table.sample_count(), Rational(0));
  for (int j = 1; j <= space.dimension(); ++j) {
    const Rational area = integral_basis_unit(space, j);
    const auto& st = table.stencil(j);
    for (std::size_t i = 0; i < st.weights.size(); ++i) {
      weights[static_cast<std::size_t>(st.sample_indices[i])] += st.weights[i] * area;
    }
  }
  return QuadratureRule(degree, partition, std::move(weights));
}

std::vector<Rational> closed_form_weights(int degree, int n) {
  require_min_subintervals(degree, n);
  std::vector<Rational> boundary;
  switch (degree) {
    case 2: boundary = {ratio(1, 9), ratio(7, 8), ratio(73, 72)}; break;
    case 3: boundary = {ratio(23, 72), ratio(4, 3), ratio(19, 24), ratio(19, 18)}; break;
    case 4:
      boundary = {ratio(206, 1575), ratio(107, 128), ratio(6019, 5760), ratio(9467, 9600), ratio(13469, 13440)};
      break;
    case 5:
      boundary = {ratio(157, 480), ratio(961, 720), ratio(133, 180),
                  ratio(271, 240), ratio(1393, 1440), ratio(361, 360)};
      break;
    default: throw std::domain_error("degree must be in 2..5");
  }
  const std::size_t count = static_cast<std::size_t>(grid_kind(degree) == GridKind::TGrid ? n + 2 : n + 1);
  std::vector<Rational> weights(count, Rational(1));
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    weights[i] = boundary[i];
    weights[count - 1 - i] = boundary[i];
  }
  return weights;
}

std::string RuleFamily::label() const {
  switch (kind) {
    case RuleKind::QuasiInterpolant: return "I" + std::to_string(degree);
    case RuleKind::Simpson: return "simpson";
    case RuleKind::NewtonCotes4: return "nc4";
    case RuleKind::ExtrapolatedI2: return "I2~";
  }
  return "?";
}

namespace {

std::vector<long double> sample(const RegisteredFunction& f, GridKind kind, long double a, long double b, int n) {
  std::vector<long double> values;
  for (long double x : sample_nodes<long double>(kind, a, b, n)) values.push_back(f.value(x));
  return values;
}

}  // namespace

long double apply_rule(const RuleFamily& family, const RegisteredFunction& f, long double a, long double b, int n) {
  const long double h = (b - a) / n;
  switch (family.kind) {
    case RuleKind::QuasiInterpolant: {
      const QuadratureRule rule = derive_rule(family.degree, UniformPartition(double(a), double(b), n));
      const auto values = sample(f, rule.grid(), a, b, n);
      return integrate<long double>(rule, values, h);
    }
    case RuleKind::Simpson: return simpson<long double>(sample(f, GridKind::XGrid, a, b, n), h);
    case RuleKind::NewtonCotes4: return newton_cotes4<long double>(sample(f, GridKind::XGrid, a, b, n), h);
    case RuleKind::ExtrapolatedI2: {
      const QuadratureRule rule = derive_rule(2, UniformPartition(double(a), double(b), n));
      return extrapolated_i2<long double>(rule, sample(f, GridKind::TGrid, a, b, n),
                                          sample(f, GridKind::XGrid, a, b, n), h);
    }
  }
  throw std::domain_error("unknown rule family");
}

QuadratureTable error_table(const RuleFamily& family, const RegisteredFunction& f, long double a, long double b,
                            std::span<const int> ns) {
  const long double exact = f.integral(a, b);
  QuadratureTable table{f.name, family, {}, 0.0};
  std::vector<double> errors;
  for (int n : ns) {
    const long double value = apply_rule(family, f, a, b, n);
    table.rows.push_back({n, value, exact - value});
    errors.push_back(static_cast<double>(exact - value));
  }
  std::size_t nonzero = 0;
  for (double e : errors) nonzero += e != 0.0 ? 1 : 0;
  table.order = nonzero >= 2 ? fit_order(ns, errors) : std::nan("");
  return table;
}

}  // namespace splineqi
