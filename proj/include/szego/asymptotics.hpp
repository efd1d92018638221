#pragma once
//
// Parameter schedules alpha_n -> -n and reports comparing contracted zeros of
// L_n^(alpha_n)(n z) against mu_r on Gamma_r.
//

#include "szego/apfloat.hpp"
#include "szego/laguerre.hpp"
#include "szego/roots.hpp"

#include <array>
#include <string>

namespace szego {

enum class ScheduleKind { Generic, Exponential, Superexponential };

const char* to_string(ScheduleKind kind);

/// generic(c):      alpha_n = -n - c,           c in (0, 1/2], limit r = 0
/// exponential(r):  alpha_n = -n + e^{-r n},    r > 0,         limit r
/// superexponential alpha_n = -n + e^{-n^2},                   limit r = infinity
struct AlphaSchedule {
  ScheduleKind kind = ScheduleKind::Generic;
  ApReal param;  ///< c or r; unused for the superexponential schedule

  /// Working precision base + log2(n+1) + 2 log2(1/dist): keeps alpha_n off S_n and leaves room
  /// for the cancellation in sums over zeros of size dist^{1/n}.
  [[nodiscard]] unsigned bits_for(unsigned n, unsigned base_bits) const;
  /// alpha_n at bits_for(n, base_bits). Throws InvalidSchedule if e^{-r n} >= 1/2.
  [[nodiscard]] ApReal alpha(unsigned n, unsigned base_bits) const;
  /// Limiting level r (infinity for the superexponential schedule).
  [[nodiscard]] ApReal limit_r(unsigned bits) const;
  [[nodiscard]] std::string describe() const;
};

/// Throws InvalidSchedule for c outside (0, 1/2] or r <= 0.
AlphaSchedule make_schedule(ScheduleKind kind, const ApReal& param = ApReal());

struct ConvergenceReport {
  unsigned n = 0;
  ApReal alpha;
  ApReal r_eff;
  double level_deviation = 0.0;       ///< max_i | -ln|phi(zeta_i)| - r_eff |
  double median_level = 0.0;          ///< median_i -ln|phi(zeta_i)|
  double ks_theta = 0.0;              ///< KS distance of arg phi(zeta_i) from the uniform law
  std::array<double, 5> moment_gaps{};  ///< |mean zeta^k - [k = 0]|, k = 0..4
  double supnorm_gap = 0.0;           ///< supnorm_extremality - e^{-r_eff}
  double origin_gap = 0.0;            ///< origin_extremality
  ZeroSet zeros;
};

/// Contracted zeros at `bits` (at least alpha.bits()) and their statistics; the sup-norm scan
/// uses `curve_nodes` samples of Gamma_{r_eff}. Throws DegenerateParameter for alpha in S_n.
ConvergenceReport zero_distribution_report(unsigned n, const ApReal& alpha, unsigned curve_nodes, unsigned bits);

/// max over samples of Gamma_r, except the three nearest theta = 0, of e^{-Re z} |L_n^(alpha)(n z)|^{1/n}.
ApReal supnorm_extremality(unsigned n, const ApReal& alpha, const ApReal& r, unsigned curve_nodes);

/// | |L_n^(alpha)(0)|^{1/n} - e^{-r_eff} |
ApReal origin_extremality(unsigned n, const ApReal& alpha);

}  // namespace szego
