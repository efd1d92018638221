#pragma once
//
// Generalized Laguerre polynomials L_n^(alpha) for arbitrary real alpha.
//
//   L_n^(alpha)(z) = sum_{k=0}^n binom(n + alpha, n - k) (-z)^k / k!
//
// Nothing here goes through the Gamma function: the generalized binomial is
// always the finite product prod_{j=1}^{n-k} (alpha + k + j) / j, which stays
// finite and exact at negative integer alpha.
//

#include "szego/apfloat.hpp"

#include <vector>

namespace szego {

/// One rescaled polynomial z -> L_n^(alpha)(scale * z).
struct LaguerreSpec {
  unsigned n = 1;
  ApReal alpha;
  ApReal scale;

  /// Validates n >= 1 and scale > 0.
  static LaguerreSpec make(unsigned n, ApReal alpha, ApReal scale);
  /// The contraction used throughout: scale = n.
  static LaguerreSpec contracted(unsigned n, const ApReal& alpha);

  [[nodiscard]] unsigned bits() const { return std::max(alpha.bits(), scale.bits()); }
};

/// Ascending-degree coefficients, length degree + 1.
struct CoeffList {
  std::vector<ApComplex> coeffs;
  bool monic = false;

  [[nodiscard]] unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

/// binom(a, m) as prod_{j=1}^{m} (a - m + j) / j; m = 0 gives 1.
ApReal generalized_binomial(const ApReal& a, unsigned m);

/// coeffs[k] = binom(n + alpha, n - k) (-scale)^k / k!
CoeffList coefficients(const LaguerreSpec& spec, unsigned precision_bits);

/// L_n^(alpha)(scale z) by the three-term recurrence in w = scale z.
ApComplex evaluate(const LaguerreSpec& spec, const ApComplex& z);

/// Recurrence evaluation for any n >= 0 (n = 0 gives 1); no spec validation.
ApComplex laguerre_recurrence(unsigned n, const ApReal& alpha, const ApComplex& w);

/// L_n^(alpha)(0) = prod_{k=1}^{n} (alpha + k) / k.
ApReal evaluate_at_zero(const LaguerreSpec& spec);

/// Leading coefficient of L_n^(alpha)(n z): (-1)^n n^n / n!.
ApReal contracted_leading_coefficient(unsigned n, unsigned precision_bits);

/// Monic p_n(z) = L_n^(alpha)(n z) / l_n. Requires scale == n.
CoeffList monic_rescaled(const LaguerreSpec& spec, unsigned precision_bits);

/// Horner evaluation of a coefficient list.
ApComplex horner(const CoeffList& p, const ApComplex& z);

/// Position of alpha relative to S_n = {-n, ..., -1}.
struct ParamDecomposition {
  ApReal dist;     ///< min_{s in S_n} |alpha - s| = |alpha + h|
  unsigned h = 1;  ///< nearest index in {1..n}; ties go to the smaller |s|
  long k = 0;      ///< min(floor(-alpha), n)
  ApReal delta;    ///< alpha = -k - delta
  ApReal r_eff;    ///< -ln(dist) / n
};

/// Throws DegenerateParameter when alpha is in S_n.
ParamDecomposition param_decomposition(unsigned n, const ApReal& alpha);

/// True iff alpha is one of -1, ..., -n.
bool in_degenerate_set(unsigned n, const ApReal& alpha);

struct AskeyCheck {
  ApReal lhs;         ///< e^{-x} L_n^(alpha)(x)
  ApReal rhs;         ///< quadrature of the integral representation
  ApReal abs_error;   ///< |lhs - rhs|
  ApReal tail_bound;  ///< bound on the truncated part of the integral (already divided by Gamma)
};

/// Checks e^{-x} L_n^(alpha)(x) = 1/Gamma(beta - alpha) int_x^inf (t - x)^{beta - alpha - 1} e^{-t} L_n^(beta)(t) dt
/// along the real axis. `quad_nodes` is the Gauss-Legendre order per panel.
/// Throws InvalidParameter when beta <= alpha or x < 0.
AskeyCheck askey_check(unsigned n, const ApReal& alpha, const ApReal& beta, const ApReal& x,
                       unsigned quad_nodes = 32);

}  // namespace szego
