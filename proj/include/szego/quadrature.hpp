#pragma once

#include "szego/apfloat.hpp"

#include <vector>

namespace szego {

struct GaussRule {
  std::vector<ApReal> nodes;    // ascending, in (-1, 1)
  std::vector<ApReal> weights;
};

/// m-point Gauss-Legendre rule on [-1, 1], nodes refined by Newton at the given precision.
GaussRule gauss_legendre(unsigned m, unsigned precision_bits);

/// Integral of f over [a, b] with the rule mapped affinely.
template <typename F>
ApReal integrate(const GaussRule& rule, const ApReal& a, const ApReal& b, F&& f) {
  const ApReal half = (b - a) / 2L;
  const ApReal mid = (a + b) / 2L;
  ApReal sum(0L, std::max(a.bits(), b.bits()));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

}  // namespace szego
