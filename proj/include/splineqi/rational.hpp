#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <string>

namespace splineqi {

/// Exact rational scalar used for stencil tables, quadrature weights and
/// differentiation matrices.
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(long long num, long long den) { return Rational(num, den); }

template <std::floating_point T>
T to_floating(const Rational& q) {
  // numerator/denominator are converted separately so long double keeps its
  // extra precision
  return boost::multiprecision::numerator(q).convert_to<T>() /
         boost::multiprecision::denominator(q).convert_to<T>();
}

inline double to_double(const Rational& q) { return to_floating<double>(q); }

/// "p/q" or "p" (denominator 1).
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace splineqi
