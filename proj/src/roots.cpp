#include "szego/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace szego {

namespace {

struct HornerPair {
  ApComplex value;
  ApComplex derivative;
};

// p(z) and p'(z) in one pass over ascending coefficients.
HornerPair horner_with_derivative(const std::vector<ApComplex>& c, const ApComplex& z) {
  const unsigned bits = z.bits();
  ApComplex p = c.back().with_bits(bits);
  ApComplex dp(bits);
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    dp = dp * z;
    dp += p;
    p = p * z;
    p += *it;
  }
  return {std::move(p), std::move(dp)};
}

ApReal newton_ratio_size(const std::vector<ApComplex>& c, const ApComplex& z) {
  const HornerPair h = horner_with_derivative(c, z);
  if (h.value.is_zero()) return ApReal(0L, z.bits());
  if (h.derivative.is_zero()) return ApReal::infinity(z.bits());
  return abs(h.value / h.derivative);
}

std::string describe_failure(unsigned degree, unsigned sweeps, const ApReal& worst) {
  std::ostringstream os;
  os << "Aberth iteration did not converge for degree " << degree << " after " << sweeps
     << " sweeps (max residual " << worst.to_string(6) << "); increase the working precision";
  return os.str();
}

}  // namespace

ApReal ZeroSet::max_residual() const {
  ApReal worst(0L, residuals.empty() ? kDefaultPrecisionBits : residuals.front().bits());
  for (const auto& r : residuals) worst = max(worst, r);
  return worst;
}

ApReal DiscreteMeasure::total_mass() const {
  ApReal sum(0L, weights.empty() ? kDefaultPrecisionBits : weights.front().bits());
  for (const auto& w : weights) sum += w;
  return sum;
}

ApComplex DiscreteMeasure::moment(unsigned k) const {
  const unsigned bits = points.empty() ? kDefaultPrecisionBits : points.front().bits();
  ApComplex sum(bits);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (weights[i].is_zero()) continue;
    sum += pow(points[i], static_cast<long>(k)) * weights[i];
  }
  return sum;
}

ApReal default_root_tolerance(unsigned precision_bits) {
  return ApReal::pow2(-static_cast<long>(precision_bits / 2), precision_bits);
}

ZeroSet find_roots(const CoeffList& coeffs, unsigned precision_bits, const ApReal& tol, RootOptions opts) {
  require_precision(precision_bits);
  if (!coeffs.monic) throw InvalidParameter("find_roots expects a monic coefficient list");
  if (coeffs.coeffs.size() < 2) throw InvalidParameter("find_roots expects degree >= 1");
  if (!(tol > 0.0)) throw ConfigError("root tolerance must be positive");

  unsigned bits = precision_bits;
  for (const auto& c : coeffs.coeffs) bits = std::max(bits, c.bits());

  ZeroSet out;
  const unsigned n = coeffs.degree();

  // exact roots at the origin
  unsigned origin = 0;
  while (origin < n && coeffs.coeffs[origin].is_zero()) ++origin;
  out.origin_multiplicity = origin;
  for (unsigned i = 0; i < origin; ++i) {
    out.zeros.emplace_back(bits);
    out.residuals.emplace_back(0L, bits);
  }

  std::vector<ApComplex> q;
  q.reserve(n - origin + 1);
  for (unsigned k = origin; k <= n; ++k) q.push_back(coeffs.coeffs[k].with_bits(bits));
  const unsigned m = n - origin;
  if (m == 0) return out;

  if (m == 1) {
    out.zeros.push_back(-q[0]);
    out.residuals.push_back(newton_ratio_size(q, out.zeros.back()));
    return out;
  }

  // Start on a circle whose radius is the geometric mean of the root moduli, |q_0|^{1/m};
  // the phase offset keeps the guesses off the real axis.
  const ApReal radius = pow(abs(q[0]), ApReal(1L, bits) / static_cast<long>(m));
  const ApReal two_pi = ApReal::pi(bits) * 2L;
  const ApReal phase_shift = (sqrt(ApReal(5L, bits)) - 1L) / 2L;
  std::vector<ApComplex> z;
  z.reserve(m);
  for (unsigned j = 0; j < m; ++j) z.push_back(polar(radius, two_pi * (phase_shift + static_cast<long>(j)) / static_cast<long>(m)));

  std::vector<bool> done(m, false);
  unsigned converged = 0;
  unsigned sweep = 0;
  const ApReal one(1L, bits);
  for (; sweep < opts.max_sweeps && converged < m; ++sweep) {
    for (unsigned i = 0; i < m; ++i) {
      if (done[i]) continue;
      const HornerPair h = horner_with_derivative(q, z[i]);
      if (h.value.is_zero()) {
        done[i] = true;
        ++converged;
        continue;
      }
      const ApComplex ratio = h.value / h.derivative;
      ApComplex pull(bits);
      for (unsigned j = 0; j < m; ++j) {
        if (j == i) continue;
        pull += ApComplex(one) / (z[i] - z[j]);
      }
      const ApComplex correction = ratio / (ApComplex(one) - ratio * pull);
      z[i] -= correction;
      if (abs(correction) < tol && abs(ratio) < tol) {
        done[i] = true;
        ++converged;
      }
    }
  }
  out.sweeps = sweep;

  // Newton polish and final residuals
  std::vector<ApReal> res;
  res.reserve(m);
  ApReal worst(0L, bits);
  for (unsigned i = 0; i < m; ++i) {
    const HornerPair h = horner_with_derivative(q, z[i]);
    if (!h.value.is_zero() && !h.derivative.is_zero()) z[i] -= h.value / h.derivative;
    res.push_back(newton_ratio_size(q, z[i]));
    worst = max(worst, res.back());
  }
  if (converged < m || !(worst <= tol)) throw NonConvergence(describe_failure(m, sweep, worst), z, worst);

  // deterministic output order: by argument in [0, 2 pi), then modulus
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> key_arg(m), key_mod(m);
  for (unsigned i = 0; i < m; ++i) {
    double a = arg(z[i]).to_double();
    if (a < 0) a += 2 * M_PI;
    key_arg[i] = a;
    key_mod[i] = abs(z[i]).to_double();
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return key_arg[a] != key_arg[b] ? key_arg[a] < key_arg[b] : key_mod[a] < key_mod[b];
  });
  for (std::size_t i : order) {
    out.zeros.push_back(std::move(z[i]));
    out.residuals.push_back(std::move(res[i]));
  }
  return out;
}

ZeroSet contracted_zeros(unsigned n, const ApReal& alpha, unsigned precision_bits) {
  require_precision(precision_bits);
  const unsigned bits = std::max(precision_bits, alpha.bits());
  const LaguerreSpec spec = LaguerreSpec::contracted(n, alpha.with_bits(bits));
  ZeroSet zs = find_roots(monic_rescaled(spec, bits), bits, default_root_tolerance(bits));
  zs.spec = spec;
  return zs;
}

DiscreteMeasure counting_measure(const ZeroSet& zs) {
  DiscreteMeasure mu;
  const std::size_t n = zs.zeros.size();
  const unsigned bits = n == 0 ? kDefaultPrecisionBits : zs.zeros.front().bits();
  mu.points = zs.zeros;
  mu.weights.assign(n, ApReal(1L, bits) / static_cast<long>(n));
  std::ostringstream label;
  label << "nu(p_n)";
  if (zs.spec) label << " n=" << zs.spec->n << " alpha=" << zs.spec->alpha.to_string(17);
  mu.label = label.str();
  return mu;
}

}  // namespace szego
