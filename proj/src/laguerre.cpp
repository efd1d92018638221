#include "szego/laguerre.hpp"

#include "szego/errors.hpp"
#include "szego/quadrature.hpp"

#include <algorithm>

namespace szego {

LaguerreSpec LaguerreSpec::make(unsigned n, ApReal alpha, ApReal scale) {
  if (n < 1) throw InvalidParameter("Laguerre degree must be >= 1");
  if (!(scale > 0.0) || !scale.is_finite()) throw InvalidParameter("contraction scale must be positive");
  if (!alpha.is_finite()) throw InvalidParameter("alpha must be finite");
  return LaguerreSpec{n, std::move(alpha), std::move(scale)};
}

LaguerreSpec LaguerreSpec::contracted(unsigned n, const ApReal& alpha) {
  return make(n, alpha, ApReal(static_cast<long>(n), alpha.bits()));
}

ApReal generalized_binomial(const ApReal& a, unsigned m) {
  ApReal out(1L, a.bits());
  const ApReal base = a - static_cast<long>(m);
  for (unsigned j = 1; j <= m; ++j) {
    out *= base + static_cast<long>(j);
    out /= static_cast<long>(j);
  }
  return out;
}

CoeffList coefficients(const LaguerreSpec& spec, unsigned precision_bits) {
  require_precision(precision_bits);
  const unsigned bits = std::max(precision_bits, spec.bits());
  const unsigned n = spec.n;
  const ApReal alpha = spec.alpha.with_bits(bits);
  const ApReal neg_scale = -spec.scale.with_bits(bits);

  CoeffList out;
  out.coeffs.reserve(n + 1);
  ApReal power(1L, bits);  // (-scale)^k / k!
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      power *= neg_scale;
      power /= static_cast<long>(k);
    }
    // binom(n + alpha, n - k) = prod_{j=1}^{n-k} (alpha + k + j) / j
    ApReal binom(1L, bits);
    for (unsigned j = 1; j <= n - k; ++j) {
      binom *= alpha + static_cast<long>(k + j);
      binom /= static_cast<long>(j);
    }
    out.coeffs.emplace_back(binom * power);
  }
  return out;
}

ApComplex laguerre_recurrence(unsigned n, const ApReal& alpha, const ApComplex& w) {
  const unsigned bits = std::max(alpha.bits(), w.bits());
  ApComplex prev(ApReal(1L, bits));
  if (n == 0) return prev;
  // L_1 = 1 + alpha - w
  ApComplex cur = (alpha.with_bits(bits) + 1L) - w;
  for (unsigned k = 1; k < n; ++k) {
    const long kk = static_cast<long>(k);
    ApComplex next = ((alpha + (2 * kk + 1)) - w) * cur - prev * (alpha + kk);
    next /= ApReal(kk + 1, bits);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ApComplex evaluate(const LaguerreSpec& spec, const ApComplex& z) {
  const unsigned bits = std::max(spec.bits(), z.bits());
  return laguerre_recurrence(spec.n, spec.alpha.with_bits(bits), z.with_bits(bits) * spec.scale);
}

ApReal evaluate_at_zero(const LaguerreSpec& spec) {
  ApReal out(1L, spec.alpha.bits());
  for (unsigned k = 1; k <= spec.n; ++k) {
    out *= spec.alpha + static_cast<long>(k);
    out /= static_cast<long>(k);
  }
  return out;
}

ApReal contracted_leading_coefficient(unsigned n, unsigned precision_bits) {
  // (-n)^n / n!, accumulated as prod_k (-n / k) so both forms round identically
  ApReal out(1L, precision_bits);
  for (unsigned k = 1; k <= n; ++k) {
    out *= -static_cast<long>(n);
    out /= static_cast<long>(k);
  }
  return out;
}

CoeffList monic_rescaled(const LaguerreSpec& spec, unsigned precision_bits) {
  if (spec.scale != static_cast<double>(spec.n))
    throw InvalidParameter("monic_rescaled requires scale == n");
  CoeffList raw = coefficients(spec, precision_bits);
  const ApReal lead = raw.coeffs.back().real();
  for (auto& c : raw.coeffs) c /= lead;
  raw.coeffs.back() = ApComplex(ApReal(1L, raw.coeffs.back().bits()));
  raw.monic = true;
  return raw;
}

ApComplex horner(const CoeffList& p, const ApComplex& z) {
  const unsigned bits = std::max(z.bits(), p.coeffs.back().bits());
  ApComplex acc = p.coeffs.back().with_bits(bits);
  for (auto it = p.coeffs.rbegin() + 1; it != p.coeffs.rend(); ++it) {
    acc = acc * z;
    acc += *it;
  }
  return acc;
}

bool in_degenerate_set(unsigned n, const ApReal& alpha) {
  return alpha.is_integer() && alpha <= -1.0 && alpha >= -static_cast<double>(n);
}

ParamDecomposition param_decomposition(unsigned n, const ApReal& alpha) {
  if (n < 1) throw InvalidParameter("degree must be >= 1");
  if (!alpha.is_finite()) throw InvalidParameter("alpha must be finite");
  if (in_degenerate_set(n, alpha))
    throw DegenerateParameter("alpha = " + alpha.to_string(20) + " lies in S_n = {-n, ..., -1}");

  const unsigned bits = alpha.bits();
  ParamDecomposition d;

  // nearest integer to -alpha, ties toward the smaller |s|: ceil(-alpha - 1/2)
  const ApReal nearest = ceil(-alpha - 0.5);
  long h = nearest.floor_to_long();
  if (nearest > static_cast<double>(n)) h = static_cast<long>(n);
  h = std::clamp<long>(h, 1, static_cast<long>(n));
  d.h = static_cast<unsigned>(h);
  d.dist = abs(alpha + h);

  const ApReal neg_floor = floor(-alpha);
  d.k = neg_floor > static_cast<double>(n) ? static_cast<long>(n) : neg_floor.floor_to_long();
  d.delta = -alpha - d.k;
  d.r_eff = -log(d.dist.with_bits(bits)) / static_cast<long>(n);
  return d;
}

AskeyCheck askey_check(unsigned n, const ApReal& alpha, const ApReal& beta, const ApReal& x, unsigned quad_nodes) {
  if (!(beta > alpha)) throw InvalidParameter("askey_check requires beta > alpha");
  if (x < 0.0) throw InvalidParameter("askey_check integrates along the real axis from x >= 0");
  if (quad_nodes < 2) throw ConfigError("quad_nodes must be >= 2");

  const unsigned bits = std::max({alpha.bits(), beta.bits(), x.bits()});
  const ApReal a = alpha.with_bits(bits);
  const ApReal b = beta.with_bits(bits);
  const ApReal x0 = x.with_bits(bits);
  const ApReal nu = b - a;
  const ApReal inv_nu = 1L / nu;
  const GaussRule rule = gauss_legendre(quad_nodes, bits);

  AskeyCheck out;
  out.lhs = exp(-x0) * laguerre_recurrence(n, a, ApComplex(x0)).real();

  auto laguerre_beta = [&](const ApReal& t) { return laguerre_recurrence(n, b, ApComplex(t)).real(); };

  // [x, x+1] with u = (t - x)^nu, so (t - x)^{nu-1} dt = du / nu. Panels graded toward u = 0
  // absorb the remaining u^{1/nu} endpoint behaviour.
  auto near_part = [&](const ApReal& u) {
    const ApReal t = x0 + (u.is_zero() ? u : pow(u, inv_nu));
    return exp(-t) * laguerre_beta(t);
  };
  ApReal integral(0L, bits);
  constexpr int kGradedPanels = 16;
  ApReal hi(1L, bits);
  for (int p = 0; p < kGradedPanels; ++p) {
    ApReal lo = hi / 4L;
    integral += integrate(rule, lo, hi, near_part);
    hi = std::move(lo);
  }
  integral += integrate(rule, ApReal(0L, bits), hi, near_part);
  integral *= inv_nu;

  // [x+1, T] in unit panels
  const long span = 40 + 4 * static_cast<long>(n);
  auto far_part = [&](const ApReal& t) { return pow(t - x0, nu - 1L) * exp(-t) * laguerre_beta(t); };
  for (long p = 1; p < span; ++p) integral += integrate(rule, x0 + p, x0 + (p + 1), far_part);

  // tail beyond T: f(t) <= f_env(T) exp(-(1 - lambda)(t - T)), with P the |coefficient| majorant of L_n^(beta)
  const ApReal big_t = x0 + span;
  ApReal majorant(1L, bits);
  if (n > 0) {
    const CoeffList cb = coefficients(LaguerreSpec{n, b, ApReal(1L, bits)}, bits);
    majorant = ApReal(0L, bits);
    for (auto it = cb.coeffs.rbegin(); it != cb.coeffs.rend(); ++it) majorant = majorant * big_t + abs(it->real());
  }
  const ApReal nu_minus_one_pos = max(nu - 1L, ApReal(0L, bits));
  const ApReal lambda = nu_minus_one_pos / (big_t - x0) + ApReal(static_cast<long>(n), bits) / big_t;
  const ApReal gamma_nu = gamma(nu);
  if (lambda < 1.0) {
    const ApReal env = pow(big_t - x0, nu - 1L) * exp(-big_t) * majorant;
    out.tail_bound = env / (1L - lambda) / abs(gamma_nu);
  } else {
    out.tail_bound = ApReal::infinity(bits);
  }

  out.rhs = integral / gamma_nu;
  out.abs_error = abs(out.lhs - out.rhs);
  return out;
}

}  // namespace szego
