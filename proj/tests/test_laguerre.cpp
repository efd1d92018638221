#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "szego/errors.hpp"
#include "szego/laguerre.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <random>

using namespace szego;
using boost::multiprecision::cpp_rational;

namespace {

ApReal R(const char* s, unsigned bits = 256) { return ApReal::parse(s, bits); }

ApReal from_rational(const cpp_rational& q, unsigned bits) {
  return ApReal::parse(numerator(q).str(), bits) / ApReal::parse(denominator(q).str(), bits);
}

// Exact oracle: binom(a, m) = a (a-1) ... (a-m+1) / m! in rational arithmetic.
cpp_rational falling_binomial(const cpp_rational& a, unsigned m) {
  cpp_rational out = 1;
  for (unsigned i = 0; i < m; ++i) out *= (a - i) / cpp_rational(i + 1);
  return out;
}

std::vector<cpp_rational> exact_coefficients(unsigned n, const cpp_rational& alpha) {
  std::vector<cpp_rational> c;
  cpp_rational fact = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    const cpp_rational sign = (k % 2 == 0) ? 1 : -1;
    c.push_back(falling_binomial(n + alpha, n - k) * sign / fact);
  }
  return c;
}

bool close(const ApReal& a, const ApReal& b, const ApReal& tol) { return abs(a - b) <= tol; }

}  // namespace

TEST_CASE("coefficients: documented examples") {
  SUBCASE("partial sums of exp: n=2, alpha=-3") {
    const CoeffList c = coefficients(LaguerreSpec::make(2, R("-3"), R("1")), 128);
    REQUIRE(c.coeffs.size() == 3);
    CHECK(c.coeffs[0].real() == 1.0);
    CHECK(c.coeffs[1].real() == 1.0);
    CHECK(c.coeffs[2].real() == 0.5);
    CHECK(!c.monic);
  }
  SUBCASE("multiple zero: n=3, alpha=-3") {
    const CoeffList c = coefficients(LaguerreSpec::make(3, R("-3"), R("1")), 128);
    CHECK(c.coeffs[0].is_zero());
    CHECK(c.coeffs[1].is_zero());
    CHECK(c.coeffs[2].is_zero());
    CHECK(close(c.coeffs[3].real(), R("-1") / 6L, ApReal::pow2(-120, 128)));
  }
  SUBCASE("n=1") {
    const ApReal alpha = R("2.75");
    const CoeffList c = coefficients(LaguerreSpec::make(1, alpha, R("1")), 128);
    CHECK(c.coeffs[0].real() == alpha + 1L);
    CHECK(c.coeffs[1].real() == -1.0);
  }
  CHECK_THROWS_AS(coefficients(LaguerreSpec::make(2, R("0"), R("1")), 32), ConfigError);
}

TEST_CASE("coefficients agree with exact rational arithmetic") {
  const std::vector<cpp_rational> alphas = {cpp_rational(-7, 3), cpp_rational(-61, 10), cpp_rational(5, 2),
                                            cpp_rational(-11), cpp_rational(1, 7)};
  for (const auto& a : alphas) {
    for (unsigned n = 1; n <= 12; ++n) {
      const auto exact = exact_coefficients(n, a);
      const CoeffList c = coefficients(LaguerreSpec::make(n, from_rational(a, 256), R("1")), 256);
      for (unsigned k = 0; k <= n; ++k) {
        const ApReal want = from_rational(exact[k], 256);
        CHECK(abs(c.coeffs[k].real() - want) <= ApReal::pow2(-240, 256) * (abs(want) + 1L));
      }
    }
  }
}

TEST_CASE("leading coefficient is (-1)^n / n! for every alpha") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ua(-15.0, 5.0);
  for (unsigned n = 1; n <= 15; ++n) {
    ApReal expected(1L, 128);
    for (unsigned k = 1; k <= n; ++k) expected /= -static_cast<long>(k);
    for (int t = 0; t < 5; ++t) {
      const CoeffList c = coefficients(LaguerreSpec::make(n, ApReal(ua(rng), 128), R("1", 128)), 128);
      CHECK(c.coeffs.back().real() == expected);
    }
  }
}

TEST_CASE("evaluate: documented examples") {
  CHECK(evaluate(LaguerreSpec::make(1, R("2.5"), R("1")), ApComplex(R("1"))).real() == 2.5);
  CHECK(evaluate(LaguerreSpec::make(2, R("-3"), R("1")), ApComplex(R("2"))).real() == 5.0);
  CHECK(evaluate(LaguerreSpec::make(3, R("-3"), R("1")), ApComplex(R("6"))).real() == -36.0);
}

TEST_CASE("recurrence and Horner-on-coefficients agree (random alpha, complex z)") {
  constexpr unsigned bits = 256;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ua(-15.0, 5.0);
  std::uniform_real_distribution<double> ur(0.0, 3.0), ut(0.0, 2 * M_PI);
  const ApReal tol = ApReal::pow2(-static_cast<long>(bits / 2), bits);
  for (unsigned n = 1; n <= 12; ++n) {
    for (int t = 0; t < 50; ++t) {
      const LaguerreSpec spec = LaguerreSpec::make(n, ApReal(ua(rng), bits), R("1"));
      const CoeffList c = coefficients(spec, bits);
      for (int p = 0; p < 20; ++p) {
        const double rad = ur(rng), th = ut(rng);
        const ApComplex z(rad * std::cos(th), rad * std::sin(th), bits);
        const ApComplex a = evaluate(spec, z);
        const ApComplex b = horner(c, z);
        CHECK(abs(a - b) <= tol * max(abs(a), abs(b)));
      }
    }
  }
}

TEST_CASE("scaled evaluation matches evaluation at scale*z") {
  const ApReal alpha = R("-60.1");
  const LaguerreSpec contracted = LaguerreSpec::contracted(60, alpha);
  const LaguerreSpec plain = LaguerreSpec::make(60, alpha, R("1"));
  const ApComplex z(0.3, -0.4, 256);
  const ApComplex a = evaluate(contracted, z);
  const ApComplex b = evaluate(plain, z * R("60"));
  CHECK(abs(a - b) <= ApReal::pow2(-200, 256) * abs(a));
}

TEST_CASE("degenerate identity L_n^(-k)(z) = (-z)^k (n-k)!/n! L_{n-k}^(k)(z)") {
  constexpr unsigned bits = 256;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const ApReal tol(1e-20, bits);
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      for (int t = 0; t < 4; ++t) {
        const ApComplex z(u(rng), u(rng), bits);
        const ApComplex lhs = laguerre_recurrence(n, ApReal(-static_cast<long>(k), bits), z);
        ApReal ratio(1L, bits);  // (n-k)!/n!
        for (unsigned j = n - k + 1; j <= n; ++j) ratio /= static_cast<long>(j);
        const ApComplex rhs =
            pow(-z, static_cast<long>(k)) * ratio * laguerre_recurrence(n - k, ApReal(static_cast<long>(k), bits), z);
        CHECK(abs(lhs - rhs) < tol);
      }
    }
  }
}

TEST_CASE("partial-sum identity L_n^(-n-1)(z) = (-1)^n sum z^k/k! holds coefficientwise") {
  for (unsigned n = 1; n <= 20; ++n) {
    const CoeffList c = coefficients(LaguerreSpec::make(n, ApReal(-static_cast<long>(n) - 1, 256), R("1")), 256);
    const auto exact = exact_coefficients(n, cpp_rational(-static_cast<long>(n) - 1));
    ApReal inv_fact(1L, 256);
    for (unsigned k = 0; k <= n; ++k) {
      if (k > 0) inv_fact /= static_cast<long>(k);
      const ApReal want = (n % 2 == 0) ? inv_fact : -inv_fact;
      CHECK(abs(c.coeffs[k].real() - want) <= ApReal::pow2(-245, 256) * abs(want));
      // and the exact rational oracle agrees with the closed form
      CHECK(abs(from_rational(exact[k], 256) - want) <= ApReal::pow2(-245, 256) * abs(want));
    }
  }
}

TEST_CASE("evaluate_at_zero") {
  CHECK(evaluate_at_zero(LaguerreSpec::make(2, R("-3"), R("1"))) == 1.0);
  CHECK(evaluate_at_zero(LaguerreSpec::make(3, R("-3"), R("1"))) == 0.0);
  CHECK(evaluate_at_zero(LaguerreSpec::make(1, R("-1.5"), R("1"))) == -0.5);

  SUBCASE("vanishes exactly on S_n and nowhere else") {
    for (unsigned n = 1; n <= 12; ++n) {
      for (long a = -2 * static_cast<long>(n); a <= 3; ++a) {
        const LaguerreSpec s = LaguerreSpec::make(n, ApReal(a, 128), R("1", 128));
        const bool in_s = a <= -1 && a >= -static_cast<long>(n);
        CHECK(evaluate_at_zero(s).is_zero() == in_s);
        CHECK(in_degenerate_set(n, s.alpha) == in_s);
      }
      // non-integers never vanish
      const LaguerreSpec s = LaguerreSpec::make(n, R("-3.25", 128), R("1", 128));
      CHECK(!evaluate_at_zero(s).is_zero());
    }
  }
  SUBCASE("matches the recurrence at z = 0") {
    const LaguerreSpec s = LaguerreSpec::make(9, R("-7.3"), R("9"));
    const ApReal a = evaluate_at_zero(s);
    const ApReal b = evaluate(s, ApComplex(256)).real();
    CHECK(abs(a - b) <= ApReal::pow2(-240, 256) * abs(a));
  }
}

TEST_CASE("monic_rescaled") {
  SUBCASE("n=1") {
    const ApReal alpha = R("-0.25");
    const CoeffList p = monic_rescaled(LaguerreSpec::contracted(1, alpha), 128);
    CHECK(p.monic);
    CHECK(p.coeffs[1].real() == 1.0);
    CHECK(p.coeffs[0].real() == -(alpha + 1L));
  }
  SUBCASE("n=2, alpha=-3 gives z^2 + z + 1/2") {
    const CoeffList p = monic_rescaled(LaguerreSpec::contracted(2, R("-3")), 128);
    CHECK(p.coeffs[0].real() == 0.5);
    CHECK(p.coeffs[1].real() == 1.0);
    CHECK(p.coeffs[2].real() == 1.0);
  }
  SUBCASE("n=3, alpha=-3 gives z^3") {
    const CoeffList p = monic_rescaled(LaguerreSpec::contracted(3, R("-3")), 128);
    CHECK(p.coeffs[0].is_zero());
    CHECK(p.coeffs[1].is_zero());
    CHECK(p.coeffs[2].is_zero());
    CHECK(p.coeffs[3].real() == 1.0);
  }
  SUBCASE("leading coefficient l_n = (-1)^n n^n / n!") {
    for (unsigned n : {1U, 2U, 5U, 17U, 60U}) {
      const CoeffList raw = coefficients(LaguerreSpec::contracted(n, R("-10.5")), 256);
      ApReal want = pow(ApReal(static_cast<long>(n), 256), static_cast<long>(n));
      for (unsigned k = 2; k <= n; ++k) want /= static_cast<long>(k);
      if (n % 2 == 1) want = -want;
      CHECK(abs(raw.coeffs.back().real() - want) <= ApReal::pow2(-240, 256) * abs(want));
      CHECK(raw.coeffs.back().real() == contracted_leading_coefficient(n, 256));
      CHECK(monic_rescaled(LaguerreSpec::contracted(n, R("-10.5")), 256).coeffs.back().real() == 1.0);
    }
  }
  CHECK_THROWS_AS(monic_rescaled(LaguerreSpec::make(3, R("-3"), R("1")), 128), InvalidParameter);
}

TEST_CASE("param_decomposition") {
  SUBCASE("n=60, alpha=-60.1") {
    const ParamDecomposition d = param_decomposition(60, R("-60.1"));
    CHECK(abs(d.dist - R("0.1")) < ApReal::pow2(-240, 256));
    CHECK(d.h == 60);
    CHECK(d.k == 60);
    CHECK(abs(d.delta - R("0.1")) < ApReal::pow2(-240, 256));
    CHECK(abs(d.r_eff - log(R("10")) / 60L) < ApReal::pow2(-240, 256));
  }
  SUBCASE("n=60, alpha=-60+1e-5") {
    const ParamDecomposition d = param_decomposition(60, R("-60") + R("1e-5"));
    CHECK(abs(d.dist - R("1e-5")) < ApReal::pow2(-240, 256));
    CHECK(abs(d.r_eff - log(R("10")) / 12L) < ApReal::pow2(-230, 256));
    CHECK(d.h == 60);
    CHECK(d.k == 59);
  }
  SUBCASE("tie at alpha=-30.5 picks the smaller |s|") {
    const ParamDecomposition d = param_decomposition(60, R("-30.5"));
    CHECK(d.dist == 0.5);
    CHECK(d.h == 30);
    CHECK(d.k == 30);
    CHECK(d.delta == 0.5);
  }
  SUBCASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(param_decomposition(60, R("-60")), DegenerateParameter);
    CHECK_THROWS_AS(param_decomposition(60, R("-1")), DegenerateParameter);
    CHECK_NOTHROW(param_decomposition(60, R("-61")));
  }
  SUBCASE("properties against brute force over S_60") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ua(-75.0, 3.0);
    for (int t = 0; t < 400; ++t) {
      const ApReal alpha(ua(rng), 256);
      if (in_degenerate_set(60, alpha)) continue;
      const ParamDecomposition d = param_decomposition(60, alpha);
      ApReal best = ApReal::infinity(256);
      for (long s = 1; s <= 60; ++s) best = min(best, abs(alpha + s));
      CHECK(d.dist == best);
      CHECK(-(d.delta + d.k) == alpha);  // exact reconstruction
      if (d.k < 60) {
        CHECK(d.delta > 0.0);
        CHECK(d.delta < 1.0);
      }
      if (alpha < -60.0) CHECK(d.dist == d.delta);
      if (alpha > -60.0 && alpha < -1.0) CHECK(d.dist == min(d.delta, 1L - d.delta));
    }
  }
}

TEST_CASE("askey_check") {
  SUBCASE("n=1, alpha=-0.5, beta=0, x=0") {
    const AskeyCheck a = askey_check(1, R("-0.5", 128), R("0", 128), R("0", 128));
    CHECK(a.lhs.to_double() == doctest::Approx(0.5));
    CHECK(a.abs_error < 1e-6);
    CHECK(a.tail_bound < 1e-10);
  }
  SUBCASE("n=0 integrates Gamma(beta - alpha) e^{-x}") {
    for (const char* x : {"0", "0.7", "3"}) {
      const AskeyCheck a = askey_check(0, R("-1.7", 128), R("0.4", 128), R(x, 128));
      CHECK(abs(a.lhs - exp(-R(x, 128))) < 1e-30);
      CHECK(a.abs_error < 1e-6);
    }
  }
  SUBCASE("n=4, alpha=-4.3, beta=-4, x=0.5") {
    const AskeyCheck a = askey_check(4, R("-4.3", 128), R("-4", 128), R("0.5", 128));
    const ApReal direct = exp(-R("0.5", 128)) * evaluate(LaguerreSpec::make(4, R("-4.3", 128), R("1", 128)),
                                                         ApComplex(R("0.5", 128))).real();
    CHECK(a.lhs == direct);
    CHECK(a.abs_error < 1e-6);
  }
  SUBCASE("large beta - alpha still converges") {
    const AskeyCheck a = askey_check(3, R("-2.5", 128), R("1.25", 128), R("1", 128));
    CHECK(a.abs_error < 1e-6);
  }
  CHECK_THROWS_AS(askey_check(2, R("1"), R("1"), R("0")), InvalidParameter);
  CHECK_THROWS_AS(askey_check(2, R("1"), R("2"), R("-1")), InvalidParameter);
}
