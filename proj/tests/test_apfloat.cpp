#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "szego/apfloat.hpp"
#include "szego/errors.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace szego;

TEST_CASE("precision floor is enforced") {
  CHECK_THROWS_AS(ApReal(32U), ConfigError);
  CHECK_THROWS_AS(ApReal(1.0, 63), ConfigError);
  CHECK_NOTHROW(ApReal(1.0, 64));
  CHECK(default_precision_bits(10) == 128);
  CHECK(default_precision_bits(60) == 210);
  CHECK(default_precision_bits(121) == 424);
}

TEST_CASE("mixed precision rounds at the larger precision") {
  const ApReal a(1L, 64);
  const ApReal b(3L, 256);
  const ApReal q = a / b;
  CHECK(q.bits() == 256);
  CHECK((b + a).bits() == 256);
  // 1/3 at 256 bits is closer than 2^-250 to the true value
  const ApReal third = ApReal::parse("0.33333333333333333333333333333333333333333333333333333333333333333333333333333333", 256);
  CHECK(abs(q - third) < ApReal::pow2(-250, 256));
}

TEST_CASE("parse and print") {
  const ApReal x = ApReal::parse("-60.1", 128);
  CHECK(x.to_double() == doctest::Approx(-60.1));
  CHECK(x.to_string(5) == "-6.0100e+01");
  CHECK(ApReal::parse(" 1e-5 ", 128).to_double() == doctest::Approx(1e-5));
  CHECK(ApReal::parse("inf", 128).is_inf());
  CHECK_THROWS_AS(ApReal::parse("abc", 128), std::invalid_argument);
  CHECK_THROWS_AS(ApReal::parse("1.5x", 128), std::invalid_argument);
  CHECK_THROWS_AS(ApReal::parse("", 128), std::invalid_argument);
}

TEST_CASE("complex arithmetic agrees with std::complex") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::complex<double> a(u(rng), u(rng)), b(u(rng), u(rng));
    const ApComplex A(a.real(), a.imag(), 128), B(b.real(), b.imag(), 128);
    auto near = [](const ApComplex& x, std::complex<double> y) {
      return std::abs(std::complex<double>(x.real().to_double(), x.imag().to_double()) - y) <=
             1e-12 * (1.0 + std::abs(y));
    };
    CHECK(near(A * B, a * b));
    CHECK(near(A / B, a / b));
    CHECK(near(exp(A), std::exp(a)));
    CHECK(near(log(A), std::log(a)));
    CHECK(near(sqrt(A), std::sqrt(a)));
    CHECK(near(pow(A, 5), std::pow(a, 5)));
    CHECK(near(pow(A, -2), std::pow(a, -2)));
  }
}

TEST_CASE("move leaves a usable object") {
  ApReal a(2.5, 128);
  ApReal b = std::move(a);
  a = ApReal(1L, 128);
  CHECK(a == 1.0);
  CHECK(b == 2.5);
}
