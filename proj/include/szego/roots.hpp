#pragma once
//
// Simultaneous root finding for the monic contracted Laguerre polynomials and
// the counting measures built from their zeros.
//

#include "szego/apfloat.hpp"
#include "szego/errors.hpp"
#include "szego/laguerre.hpp"

#include <optional>
#include <string>
#include <vector>

namespace szego {

struct ZeroSet {
  std::vector<ApComplex> zeros;  ///< with multiplicity, origin roots first
  std::vector<ApReal> residuals;  ///< Newton-step size |p(z) / p'(z)| after polishing
  unsigned origin_multiplicity = 0;
  std::optional<LaguerreSpec> spec;
  unsigned sweeps = 0;

  [[nodiscard]] ApReal max_residual() const;
};

/// Point masses; normalized measures have nonnegative weights summing to 1.
struct DiscreteMeasure {
  std::vector<ApComplex> points;
  std::vector<ApReal> weights;
  std::string label;

  [[nodiscard]] std::size_t size() const { return points.size(); }
  [[nodiscard]] ApReal total_mass() const;
  /// sum_i w_i z_i^k
  [[nodiscard]] ApComplex moment(unsigned k) const;
};

/// Aberth-Ehrlich stagnated; carries the best iterate for diagnosis.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, std::vector<ApComplex> best, ApReal max_residual)
      : Error(what), best_(std::move(best)), max_residual_(std::move(max_residual)) {}

  [[nodiscard]] const std::vector<ApComplex>& best_iterate() const { return best_; }
  [[nodiscard]] const ApReal& max_residual() const { return max_residual_; }

 private:
  std::vector<ApComplex> best_;
  ApReal max_residual_;
};

struct RootOptions {
  unsigned max_sweeps = 200;
};

/// All roots of a monic polynomial. Exact trailing zero coefficients are deflated
/// as roots at the origin before iterating.
ZeroSet find_roots(const CoeffList& coeffs, unsigned precision_bits, const ApReal& tol, RootOptions opts = {});

/// Default root tolerance 2^{-precision/2}.
ApReal default_root_tolerance(unsigned precision_bits);

/// Zeros of L_n^(alpha)(n z); working precision is max(precision_bits, alpha.bits()).
ZeroSet contracted_zeros(unsigned n, const ApReal& alpha, unsigned precision_bits);

/// Uniform 1/n masses on the zeros.
DiscreteMeasure counting_measure(const ZeroSet& zs);

}  // namespace szego
