#pragma once
//
// The map phi(z) = z e^{1-z} and its level curves
//
//   Gamma_r = { z : |z e^{1-z}| = e^{-r}, |z| <= 1 },  r >= 0,
//
// with Gamma_0 the Szego curve. phi maps the interior G_r conformally onto the
// disk |w| < e^{-r}, so Gamma_r is parametrized by w = e^{-r} e^{i theta}.
//

#include "szego/apfloat.hpp"

#include <vector>

namespace szego {

/// z e^{1-z}
ApComplex phi_map(const ApComplex& z);

/// Log phi(z) = Log z + 1 - z with the imaginary part continued from Log z.
ApComplex log_phi(const ApComplex& z);

struct CurveSample {
  ApReal theta;
  ApComplex z;
};

struct LevelCurve {
  ApReal r;
  std::vector<CurveSample> samples;  ///< ordered by theta in [0, 2 pi); last connects back to first
  bool closed = true;

  [[nodiscard]] unsigned bits() const { return r.bits(); }
  [[nodiscard]] std::size_t size() const { return samples.size(); }
};

struct RealCrossings {
  ApReal x0;     ///< in (0, 1]: x e^{1-x} = e^{-r}
  ApReal x_neg;  ///< < 0: |x| e^{1-x} = e^{-r}
};

/// Both real-axis crossings of Gamma_r by bisection to 2^{-precision/2} (relative).
RealCrossings real_crossings(const ApReal& r);

/// Points of Gamma_r at the given angles (ascending, in [0, 2 pi)), by Newton continuation
/// in theta from the positive crossing. Works at r.bits(). Throws TraceError.
std::vector<ApComplex> solve_level_curve(const ApReal& r, const std::vector<ApReal>& thetas);

/// M equally spaced samples theta_j = 2 pi j / M. Requires r >= 0 finite, M >= 16 and even.
LevelCurve trace_level_curve(const ApReal& r, unsigned nodes);

/// |ln|phi(z)| + r|, the defining-equation residual in logarithmic form.
ApReal level_residual(const ApComplex& z, const ApReal& r);

enum class RegionTag { Interior, OnCurve, Exterior };

const char* to_string(RegionTag tag);

/// Winding number of the sampled polyline around p.
int winding_number(const LevelCurve& curve, const ApComplex& p);

/// OnCurve when the defining equation holds within `tol` (relative, in log form) and |z| <= 1 + tol;
/// otherwise Interior iff the traced curve winds once around z.
RegionTag locate(const ApComplex& z, const LevelCurve& curve, double tol = 1e-10);

/// Smallest distance from p to any sample of the curve.
double distance_to_samples(const LevelCurve& curve, const ApComplex& p);

}  // namespace szego
