#pragma once
//
// Verification suites shared by the command line and the acceptance runner.
//

#include "szego/apfloat.hpp"

#include <string>
#include <vector>

namespace szego {

struct SuiteCheck {
  std::string name;
  double value = 0.0;      ///< measured error or statistic
  double tolerance = 0.0;  ///< pass iff value <= tolerance
  bool passed = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;

  [[nodiscard]] bool passed() const;
  /// Largest value / tolerance ratio among the checks (<= 1 when all pass).
  [[nodiscard]] double worst_ratio() const;
  void add(std::string name, double value, double tolerance);
};

/// Unit mass (1e-12), nonnegative pullback density, harmonic moments k = 0..6 (1e-10).
SuiteResult lemma1_suite(const ApReal& r, unsigned nodes);

/// Potential identities at the origin (1e-10), at exterior points 2, 3, -2, 1.5i and at interior
/// points at least 0.05 from Gamma_r (1e-8), and near-curve Robin values (1e-8).
SuiteResult balayage_suite(const ApReal& r, unsigned nodes);

/// Weighted Leja estimate -ln(t_N)/N within 5% of (r+1)/2, and the discrete energy estimate
/// at `energy_nodes` within 0.025 of (r+1)/2.
SuiteResult robin_suite(const ApReal& r, unsigned leja_count, unsigned grid_factor, unsigned energy_nodes);

/// Degenerate identity (1 <= k <= n <= 10, 256 bits), partial-sum coefficients (n <= 20),
/// recurrence against Horner (n <= 12, 50 parameters, 20 points), and the Askey examples.
SuiteResult laguerre_identity_suite();

/// Askey representation examples only, abs_error < 1e-6.
SuiteResult askey_suite();

/// Vieta mean and product of contracted zeros for n in {10, 30, 60} across the three schedules,
/// origin multiplicity of monic_rescaled(3, -3), and all residuals within tolerance. Vieta and
/// residual checks are reported relative to their tolerance (pass iff <= 1).
SuiteResult rootfinder_suite();

}  // namespace szego
