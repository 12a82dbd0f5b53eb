#include "oracles.hpp"
#include "splineqi/convergence.hpp"
#include "splineqi/functions.hpp"

#include <doctest.h>

#include <cmath>

using namespace splineqi;

TEST_CASE("derivatives agree with central differences") {
  for (const char* name : {"runge16", "expsin", "expsin5x", "legendre8", "poly:1,-2,0.5,3"}) {
    const auto f = lookup_function(name);
    REQUIRE(f.has_derivative());
    for (long double x : {-0.9L, -0.31L, 0.0L, 0.42L, 0.97L}) {
      const long double e = 1e-6L;
      const long double fd = (f.value(x + e) - f.value(x - e)) / (2 * e);
      CAPTURE(name);
      CHECK(static_cast<double>(f.derivative(x)) == doctest::Approx(static_cast<double>(fd)).epsilon(1e-7));
    }
  }
}

TEST_CASE("antiderivatives agree with Gauss quadrature") {
  for (const char* name : {"runge16", "expsin", "expsin5x", "legendre8", "poly:1,-2,0.5,3"}) {
    const auto f = lookup_function(name);
    REQUIRE(f.has_integral());
    const long double g = oracle::gauss_integral(f.value, -0.8L, 0.9L, 64);
    CAPTURE(name);
    CHECK(std::abs(f.integral(-0.8L, 0.9L) - g) < 1e-15L);
  }
}

TEST_CASE("registry") {
  CHECK(lookup_function("poly:2")(5.0) == 2.0);
  CHECK(lookup_function("poly:0,0,1")(3.0) == 9.0);
  CHECK_THROWS_AS(lookup_function("nope"), std::domain_error);
  CHECK_THROWS_AS(lookup_function("poly:"), std::domain_error);
  CHECK_THROWS_AS(lookup_function("poly:1,x"), std::domain_error);
  CHECK(registered_function_names().size() == 5);
}

TEST_CASE("fitted order") {
  const std::vector<int> ns = {10, 20, 40, 80};
  std::vector<double> err;
  for (int n : ns) err.push_back(3.0 * std::pow(n, -4.0));
  CHECK(fit_order(ns, err) == doctest::Approx(4.0));
}
