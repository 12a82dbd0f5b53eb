#pragma once

#include "splineqi/bspline.hpp"
#include "splineqi/functions.hpp"

#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace splineqi {

/// I_d(f) = integral of Q_d f = h * sum_i w_i f_i, with rational weights w_i
/// attached to the data sites of Q_d.
class QuadratureRule {
 public:
  QuadratureRule(int degree, UniformPartition partition, std::vector<Rational> weights);

  int degree() const { return degree_; }
  int n() const { return partition_.n(); }
  const UniformPartition& partition() const { return partition_; }
  GridKind grid() const { return grid_kind(degree_); }
  /// Weights in units of h, one per data site.
  const std::vector<Rational>& weights() const { return weights_; }
  SampleGrid nodes() const;

 private:
  int degree_;
  UniformPartition partition_;
  std::vector<Rational> weights_;
};

/// Rule obtained by integrating Q_d: w_i = sum_j mu_j[i] * int B_j / h.
QuadratureRule derive_rule(int degree, const UniformPartition& partition);

/// The same weights written out in closed form: tabulated weights on the
/// first d+1 data sites, their mirror images at the right end, 1 in between.
std::vector<Rational> closed_form_weights(int degree, int n);

/// h * sum_i w_i f_i, summed left to right.
template <std::floating_point T>
T integrate(const QuadratureRule& rule, std::span<const T> samples, T h) {
  if (samples.size() != rule.weights().size()) {
    throw std::domain_error("quadrature rule expects " + std::to_string(rule.weights().size()) + " samples, got " +
                            std::to_string(samples.size()));
  }
  T sum = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) sum += to_floating<T>(rule.weights()[i]) * samples[i];
  return h * sum;
}

inline double integrate(const QuadratureRule& rule, std::span<const double> samples) {
  return integrate<double>(rule, samples, rule.partition().h());
}

/// Composite Simpson rule on n+1 equispaced samples, n even.
template <std::floating_point T>
T simpson(std::span<const T> samples, T h) {
  const std::size_t n = samples.empty() ? 0 : samples.size() - 1;
  if (n < 2 || n % 2 != 0) throw PreconditionError("Simpson rule needs an even number of subintervals");
  T sum = samples[0];
  for (std::size_t i = 1; i < n; ++i) sum += T(i % 2 == 1 ? 4 : 2) * samples[i];
  sum += samples[n];
  return h * sum / T(3);
}

/// Composite Newton-Cotes rule of degree 4 (Boole), n a multiple of 4.
template <std::floating_point T>
T newton_cotes4(std::span<const T> samples, T h) {
  const std::size_t n = samples.empty() ? 0 : samples.size() - 1;
  if (n < 4 || n % 4 != 0) throw PreconditionError("Newton-Cotes degree-4 rule needs n divisible by 4");
  T sum = 0;
  for (std::size_t i = 0; i < n; i += 4) {
    sum += T(7) * samples[i] + T(32) * samples[i + 1] + T(12) * samples[i + 2] + T(32) * samples[i + 3] +
           T(7) * samples[i + 4];
  }
  return T(2) * h * sum / T(45);
}

/// (32 I_2 + 23 I_2^*) / 55 where I_2^* is Simpson's rule on the same
/// partition; the h^4 error terms of the two rules cancel.
template <std::floating_point T>
T extrapolated_i2(const QuadratureRule& rule, std::span<const T> t_samples, std::span<const T> x_samples, T h) {
  if (rule.degree() != 2) throw std::domain_error("extrapolation combines the quadratic rule with Simpson");
  if (x_samples.size() != static_cast<std::size_t>(rule.n() + 1)) {
    throw std::domain_error("Simpson samples must live on the same partition as the quadratic rule");
  }
  const T i2 = integrate<T>(rule, t_samples, h);
  const T i2s = simpson<T>(x_samples, h);
  return (T(32) * i2 + T(23) * i2s) / T(55);
}

enum class RuleKind { QuasiInterpolant, Simpson, NewtonCotes4, ExtrapolatedI2 };

struct RuleFamily {
  RuleKind kind = RuleKind::QuasiInterpolant;
  int degree = 2;  // used by RuleKind::QuasiInterpolant

  std::string label() const;
};

struct QuadratureRow {
  int n = 0;
  long double value = 0;
  long double error = 0;  // I(f) - rule(f)
};

struct QuadratureTable {
  std::string function;
  RuleFamily family;
  std::vector<QuadratureRow> rows;
  /// Least-squares order of |error| in h.
  double order = 0.0;
};

/// Applies a rule family to a registered function on [a, b] for each n.
/// Sampling and summation use long double so that errors down to 1e-17 are
/// resolved. Requires a closed-form integral.
QuadratureTable error_table(const RuleFamily& family, const RegisteredFunction& f, long double a, long double b,
                            std::span<const int> ns);

/// Value of one rule family on one partition, sampling f at its nodes.
long double apply_rule(const RuleFamily& family, const RegisteredFunction& f, long double a, long double b, int n);

}  // namespace splineqi
