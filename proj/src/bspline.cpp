#include "splineqi/bspline.hpp"

#include <cmath>
#include <string>

namespace splineqi {

int min_subintervals(int degree) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw std::domain_error("degree must be in 2..5, got " + std::to_string(degree));
  }
  return 2 * degree + 2;
}

void require_min_subintervals(int degree, int n) {
  const int n_min = min_subintervals(degree);
  if (n < n_min) {
    throw PreconditionError("degree " + std::to_string(degree) + " needs n >= " + std::to_string(n_min) +
                            ", got n = " + std::to_string(n));
  }
}

UniformPartition::UniformPartition(double a, double b, int n) : a_(a), b_(b), n_(n), h_(0.0) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw std::domain_error("partition needs finite a < b");
  }
  if (n < 1) throw std::domain_error("partition needs n >= 1");
  h_ = (b - a) / n;
}

double UniformPartition::node(int i) const {
  if (i <= 0) return a_;
  if (i >= n_) return b_;
  return a_ + i * h_;
}

int UniformPartition::interval_of(double x) const {
  if (!contains(x)) throw std::domain_error("point outside [a, b]");
  const int k = static_cast<int>(std::floor(to_unit(x))) + 1;
  return std::clamp(k, 1, n_);
}

SplineSpace::SplineSpace(int degree, UniformPartition partition) : degree_(degree), partition_(partition) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw std::domain_error("degree must be in 2..5, got " + std::to_string(degree));
  }
}

void SplineSpace::check_index(int j) const {
  if (j < 1 || j > dimension()) {
    throw std::domain_error("B-spline index " + std::to_string(j) + " outside 1.." + std::to_string(dimension()));
  }
}

Spline::Spline(SplineSpace space, std::vector<double> coefficients)
    : space_(space), coefficients_(std::move(coefficients)) {
  if (static_cast<int>(coefficients_.size()) != space_.dimension()) {
    throw std::domain_error("spline needs " + std::to_string(space_.dimension()) + " coefficients, got " +
                            std::to_string(coefficients_.size()));
  }
}

std::array<double, kMaxDegree + 1> eval_active_basis(const SplineSpace& space, double x, int& first) {
  const auto& part = space.partition();
  first = part.interval_of(x);
  return detail::active_basis<double>(space.degree(), space.n(), first, part.to_unit(x), 0);
}

double eval_basis(const SplineSpace& space, int j, double x) {
  space.check_index(j);
  int k = 0;
  const auto values = eval_active_basis(space, x, k);
  const int s = j - k;
  if (s < 0 || s > space.degree()) return 0.0;
  return values[static_cast<std::size_t>(s)];
}

double eval_spline(const Spline& s, double x, int deriv_order) {
  const auto& space = s.space();
  const int d = space.degree();
  if (deriv_order < 0 || deriv_order > d) {
    throw std::domain_error("derivative order must be in 0.." + std::to_string(d));
  }
  const auto& part = space.partition();
  const int k = part.interval_of(x);
  const auto active = s.coefficients().subspan(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(d + 1));
  const double value = detail::deboor_local<double>(d, space.n(), k, active, part.to_unit(x), deriv_order);
  return value / std::pow(part.h(), deriv_order);
}

std::vector<Rational> greville_unit(const SplineSpace& space) {
  const int d = space.degree();
  std::vector<Rational> theta;
  theta.reserve(static_cast<std::size_t>(space.dimension()));
  for (int j = 1; j <= space.dimension(); ++j) {
    long long sum = 0;
    for (int l = 1; l <= d; ++l) sum += space.unit_knot(j - l);
    theta.emplace_back(sum, d);
  }
  return theta;
}

std::vector<double> greville(const SplineSpace& space) {
  const auto& part = space.partition();
  std::vector<double> theta;
  theta.reserve(static_cast<std::size_t>(space.dimension()));
  for (const auto& u : greville_unit(space)) theta.push_back(part.a() + to_double(u) * part.h());
  // pin the ends so that theta_1 == a and theta_{n+d} == b exactly
  theta.front() = part.a();
  theta.back() = part.b();
  return theta;
}

namespace {

long long binomial(int n, int r) {
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// Elementary symmetric functions e_0..e_r of the given values.
template <class T>
std::vector<T> elementary_symmetric(std::span<const T> values, int r) {
  std::vector<T> e(static_cast<std::size_t>(r + 1), T(0));
  e[0] = T(1);
  for (const auto& v : values) {
    for (int q = r; q >= 1; --q) e[static_cast<std::size_t>(q)] += v * e[static_cast<std::size_t>(q - 1)];
  }
  return e;
}

void check_power(const SplineSpace& space, int r) {
  if (r < 0 || r > space.degree()) {
    throw std::domain_error("monomial power must be in 0.." + std::to_string(space.degree()));
  }
}

}  // namespace

std::vector<Rational> monomial_coeffs_unit(const SplineSpace& space, int r) {
  check_power(space, r);
  const int d = space.degree();
  const Rational scale(1, binomial(d, r));
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(space.dimension()));
  std::vector<Rational> interior(static_cast<std::size_t>(d));
  for (int j = 1; j <= space.dimension(); ++j) {
    for (int l = 0; l < d; ++l) interior[static_cast<std::size_t>(l)] = space.unit_knot(j - d + l);
    out.push_back(scale * elementary_symmetric<Rational>(interior, r)[static_cast<std::size_t>(r)]);
  }
  return out;
}

std::vector<double> monomial_coeffs(const SplineSpace& space, int r) {
  check_power(space, r);
  const int d = space.degree();
  const double scale = 1.0 / static_cast<double>(binomial(d, r));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(space.dimension()));
  std::vector<double> interior(static_cast<std::size_t>(d));
  for (int j = 1; j <= space.dimension(); ++j) {
    for (int l = 0; l < d; ++l) interior[static_cast<std::size_t>(l)] = space.knot(j - d + l);
    out.push_back(scale * elementary_symmetric<double>(interior, r)[static_cast<std::size_t>(r)]);
  }
  return out;
}

Rational integral_basis_unit(const SplineSpace& space, int j) {
  space.check_index(j);
  const int d = space.degree();
  return Rational(space.unit_knot(j) - space.unit_knot(j - d - 1), d + 1);
}

double integral_basis(const SplineSpace& space, int j) {
  return to_double(integral_basis_unit(space, j)) * space.partition().h();
}

GridKind grid_kind(int degree) { return degree % 2 == 0 ? GridKind::TGrid : GridKind::XGrid; }

SampleGrid sample_grid(const SplineSpace& space) {
  const auto& part = space.partition();
  const GridKind kind = grid_kind(space.degree());
  return SampleGrid{kind, sample_nodes<double>(kind, part.a(), part.b(), part.n())};
}

std::vector<Rational> sample_nodes_unit(GridKind kind, int n) {
  std::vector<Rational> nodes;
  if (kind == GridKind::XGrid) {
    for (int i = 0; i <= n; ++i) nodes.emplace_back(i);
  } else {
    nodes.emplace_back(0);
    for (int j = 2; j <= n + 1; ++j) nodes.emplace_back(2 * j - 3, 2);
    nodes.emplace_back(n);
  }
  return nodes;
}

}  // namespace splineqi
