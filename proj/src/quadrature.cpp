#include "szego/quadrature.hpp"

#include "szego/errors.hpp"

#include <cmath>
#include <numbers>

namespace szego {

namespace {

// P_m(x) and P_m'(x) by the Bonnet recurrence.
void legendre(unsigned m, const ApReal& x, ApReal& p, ApReal& dp) {
  ApReal p0(1L, x.bits());
  ApReal p1 = x;
  for (unsigned k = 1; k < m; ++k) {
    ApReal p2 = (static_cast<long>(2 * k + 1) * x * p1 - static_cast<long>(k) * p0) / static_cast<long>(k + 1);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  p = p1;
  // (1 - x^2) P_m' = m (P_{m-1} - x P_m)
  dp = static_cast<long>(m) * (p0 - x * p1) / (1L - x * x);
}

}  // namespace

GaussRule gauss_legendre(unsigned m, unsigned precision_bits) {
  if (m < 1) throw ConfigError("Gauss-Legendre order must be >= 1");
  require_precision(precision_bits);
  GaussRule rule;
  rule.nodes.reserve(m);
  rule.weights.reserve(m);
  const ApReal tol = ApReal::pow2(-static_cast<long>(precision_bits) + 4, precision_bits);
  for (unsigned i = 1; i <= m; ++i) {
    // Tricomi initial guess, descending in x; stored ascending below.
    const double guess = std::cos(std::numbers::pi * (static_cast<double>(i) - 0.25) / (m + 0.5));
    ApReal x(guess, precision_bits);
    ApReal p(precision_bits), dp(precision_bits);
    if (m == 1) {
      x = ApReal(0L, precision_bits);
    } else {
      for (int it = 0; it < 100; ++it) {
        legendre(m, x, p, dp);
        const ApReal step = p / dp;
        x -= step;
        if (abs(step) <= tol) break;
      }
    }
    legendre(m, x, p, dp);
    ApReal w = m == 1 ? ApReal(2L, precision_bits) : 2L / ((1L - x * x) * dp * dp);
    rule.nodes.push_back(-x);
    rule.weights.push_back(std::move(w));
  }
  return rule;
}

}  // namespace szego
