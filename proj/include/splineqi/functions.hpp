#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace splineqi {

using RealFunction = std::function<long double(long double)>;

/// A test function with optional closed-form derivative and antiderivative.
/// Everything is evaluated in long double; callers working in double cast.
struct RegisteredFunction {
  std::string name;
  RealFunction value;
  RealFunction derivative;      // empty when unknown
  RealFunction antiderivative;  // empty when unknown

  bool has_derivative() const { return static_cast<bool>(derivative); }
  bool has_integral() const { return static_cast<bool>(antiderivative); }

  /// Exact integral over [a, b] from the antiderivative.
  long double integral(long double a, long double b) const;

  double operator()(double x) const { return static_cast<double>(value(x)); }
  std::function<double(double)> as_double() const;
};

/// Looks up "runge16" (1/(1+16x^2)), "expsin" (e^{-x} sin(5 pi x)),
/// "expsin5x" (e^{-x} sin(5x), the variant behind the published derivative
/// tables), "legendre8" or "poly:c0,c1,..." (c0 + c1 x + ...). Throws
/// std::domain_error for anything else.
RegisteredFunction lookup_function(std::string_view name);

std::vector<std::string> registered_function_names();

/// Integral of 1/(1+16x^2) over [-1, 1], i.e. arctan(4)/2.
long double runge16_reference_integral();
/// Integral of e^{-x} sin(5 pi x) over [-1, 1], i.e.
/// -10 pi sinh(1) / (1 + 25 pi^2).
long double expsin_reference_integral();

/// Legendre polynomial P_degree by the three-term recurrence
/// (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}. Works for any field type.
template <class T>
T legendre(int degree, const T& x) {
  if (degree == 0) return T(1);
  T prev = T(1);
  T cur = x;
  for (int k = 1; k < degree; ++k) {
    T next = (T(2 * k + 1) * x * cur - T(k) * prev) / T(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// P_8.
long double legendre_p8(long double x);

/// Positive zeros of P_8 to ten digits, increasing.
inline constexpr double kLegendreP8Zeros[4] = {0.1834346425, 0.5255324099, 0.7966664774, 0.9602898565};

}  // namespace splineqi
