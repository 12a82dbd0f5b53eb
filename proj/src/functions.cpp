#include "splineqi/functions.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace splineqi {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

RegisteredFunction runge16() {
  return {"runge16",
          [](long double x) { return 1.0L / (1.0L + 16.0L * x * x); },
          [](long double x) {
            const long double q = 1.0L + 16.0L * x * x;
            return -32.0L * x / (q * q);
          },
          [](long double x) { return std::atan(4.0L * x) / 4.0L; }};
}

// e^{-x} sin(w x)
RegisteredFunction damped_sine(std::string name, long double w) {
  return {std::move(name),
          [w](long double x) { return std::exp(-x) * std::sin(w * x); },
          [w](long double x) { return std::exp(-x) * (w * std::cos(w * x) - std::sin(w * x)); },
          [w](long double x) { return -std::exp(-x) * (std::sin(w * x) + w * std::cos(w * x)) / (1.0L + w * w); }};
}

// P_n' from P_{k+1}' = P_{k-1}' + (2k+1) P_k
long double legendre_derivative(int degree, long double x) {
  if (degree == 0) return 0.0L;
  long double d_prev = 0.0L;  // P_0'
  long double d_cur = 1.0L;   // P_1'
  for (int k = 1; k < degree; ++k) {
    const long double d_next = d_prev + (2 * k + 1) * legendre<long double>(k, x);
    d_prev = d_cur;
    d_cur = d_next;
  }
  return d_cur;
}

RegisteredFunction legendre8() {
  return {"legendre8", legendre_p8, [](long double x) { return legendre_derivative(8, x); },
          // int P_n = (P_{n+1} - P_{n-1}) / (2n+1)
          [](long double x) { return (legendre<long double>(9, x) - legendre<long double>(7, x)) / 17.0L; }};
}

std::vector<long double> parse_coefficients(std::string_view list) {
  std::vector<long double> coeffs;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string token(list.substr(0, comma));
    std::size_t used = 0;
    long double c = 0;
    try {
      c = std::stold(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) {
      throw std::domain_error("bad polynomial coefficient '" + token + "'");
    }
    coeffs.push_back(c);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (coeffs.empty()) throw std::domain_error("poly: needs at least one coefficient");
  return coeffs;
}

RegisteredFunction polynomial(std::string name, std::vector<long double> c) {
  auto horner = [](const std::vector<long double>& coeffs, long double x) {
    long double v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
  };
  std::vector<long double> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(static_cast<long double>(i) * c[i]);
  std::vector<long double> ic{0.0L};
  for (std::size_t i = 0; i < c.size(); ++i) ic.push_back(c[i] / static_cast<long double>(i + 1));
  return {std::move(name), [c, horner](long double x) { return horner(c, x); },
          [dc, horner](long double x) { return horner(dc, x); },
          [ic, horner](long double x) { return horner(ic, x); }};
}

}  // namespace

long double RegisteredFunction::integral(long double a, long double b) const {
  if (!has_integral()) throw std::domain_error("no closed-form integral for " + name);
  return antiderivative(b) - antiderivative(a);
}

std::function<double(double)> RegisteredFunction::as_double() const {
  return [f = value](double x) { return static_cast<double>(f(x)); };
}

long double legendre_p8(long double x) { return legendre<long double>(8, x); }

RegisteredFunction lookup_function(std::string_view name) {
  if (name == "runge16") return runge16();
  if (name == "expsin") return damped_sine("expsin", 5.0L * kPi);
  if (name == "expsin5x") return damped_sine("expsin5x", 5.0L);
  if (name == "legendre8") return legendre8();
  if (name.starts_with("poly:")) return polynomial(std::string(name), parse_coefficients(name.substr(5)));
  throw std::domain_error("unknown function '" + std::string(name) + "'");
}

std::vector<std::string> registered_function_names() { return {"runge16", "expsin", "expsin5x", "legendre8", "poly:<c0,c1,...>"}; }

long double runge16_reference_integral() { return std::atan(4.0L) / 2.0L; }

long double expsin_reference_integral() {
  return -10.0L * kPi * std::sinh(1.0L) / (1.0L + 25.0L * kPi * kPi);
}

}  // namespace splineqi
