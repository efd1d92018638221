#include "szego/geometry.hpp"
#include "szego/errors.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

namespace szego {

namespace {

// Log phi(z) + r - i theta with the imaginary part reduced to (-pi, pi].
ApComplex level_equation(const ApComplex& z, const ApReal& r, const ApReal& theta, const ApReal& two_pi) {
  const ApComplex lp = log_phi(z);
  ApReal im = lp.imag() - theta;
  im -= two_pi * floor(im / two_pi + 0.5);
  return ApComplex(lp.real() + r, im);
}

struct NewtonResult {
  ApComplex z;
  bool converged = false;
};

NewtonResult newton_on_curve(ApComplex z, const ApReal& r, const ApReal& theta, const ApReal& two_pi) {
  const unsigned bits = r.bits();
  const ApReal eps = ApReal::pow2(-static_cast<long>(bits) + 16, bits);
  const ApComplex one(ApReal(1L, bits));
  for (int it = 0; it < 60; ++it) {
    if (z.is_zero() || !z.is_finite()) return {std::move(z), false};
    const ApComplex g = level_equation(z, r, theta, two_pi);
    const ApComplex dg = one / z - one;
    if (dg.is_zero()) return {std::move(z), false};
    const ApComplex step = g / dg;
    z -= step;
    // attainable accuracy: rounding in g is ~ eps (8 + |ln|z||), amplified by 1/|g'|
    if (abs(step) * abs(dg) <= eps * (abs(log(abs(z))) + 8L)) return {std::move(z), true};
  }
  return {std::move(z), false};
}

// Seed from the corner model phi(z) ~ 1 - (z-1)^2/2 at r = 0.
ApComplex corner_seed(const ApReal& theta, const ApReal& two_pi) {
  const unsigned bits = theta.bits();
  const ApReal one(1L, bits);
  if (theta * 2L < two_pi) {
    const ApReal s = sqrt(theta);
    return ApComplex(one - s, s);
  }
  const ApReal s = sqrt(two_pi - theta);
  return ApComplex(one - s, -s);
}

bool acceptable(const ApComplex& z, const ApReal& theta, const ApReal& two_pi) {
  if (!(abs(z) <= 1.0 + 1e-8)) return false;
  // upper half for theta in (0, pi), lower half for (pi, 2 pi)
  const ApReal half = two_pi / 2L;
  const int s = z.imag().sign();
  if (theta > 0.0 && theta < half && s < 0) return false;
  if (theta > half && s > 0) return false;
  return true;
}

}  // namespace

ApComplex phi_map(const ApComplex& z) {
  const ApReal one(1L, z.bits());
  return z * exp(ApComplex(one) - z);
}

ApComplex log_phi(const ApComplex& z) {
  const ApReal one(1L, z.bits());
  return log(z) + (ApComplex(one) - z);
}

ApReal level_residual(const ApComplex& z, const ApReal& r) {
  const unsigned bits = std::max(z.bits(), r.bits());
  if (z.is_zero()) return ApReal::infinity(bits);
  return abs(log(abs(z)) + 1L - z.real() + r);
}

RealCrossings real_crossings(const ApReal& r) {
  if (!(r >= 0.0) || !r.is_finite()) throw InvalidParameter("real_crossings requires finite r >= 0");
  const unsigned bits = r.bits();
  const ApReal tol = ApReal::pow2(-static_cast<long>(bits / 2), bits);
  const ApReal one(1L, bits);

  // f increasing on its bracket, f(lo) < 0 <= f(hi)
  auto bisect = [&](auto f, ApReal lo, ApReal hi) {
    while (hi - lo > tol * hi) {
      ApReal mid = (lo + hi) / 2L;
      if (f(mid) < 0.0) lo = std::move(mid);
      else hi = std::move(mid);
    }
    return (lo + hi) / 2L;
  };

  RealCrossings out;
  if (r.is_zero()) {
    out.x0 = one;
  } else {
    out.x0 = bisect([&](const ApReal& x) { return log(x) + 1L - x + r; }, exp(-(r + 1L)), one);
  }
  // a e^{1+a} = e^{-r}, x_neg = -a
  const ApReal a = bisect([&](const ApReal& x) { return log(x) + 1L + x + r; }, exp(-(r + 2L)), exp(-(r + 1L)));
  out.x_neg = -a;
  return out;
}

std::vector<ApComplex> solve_level_curve(const ApReal& r, const std::vector<ApReal>& thetas) {
  if (!(r >= 0.0) || !r.is_finite()) throw InvalidParameter("level curves need finite r >= 0");
  const unsigned bits = r.bits();
  const ApReal two_pi = ApReal::pi(bits) * 2L;
  const bool corner = r.is_zero();
  const ApReal corner_window(1e-2, bits);

  std::vector<ApComplex> out;
  out.reserve(thetas.size());

  ApReal theta_c(0L, bits);
  ApComplex z_c(real_crossings(r).x0);
  if (!corner) {
    NewtonResult nr = newton_on_curve(z_c, r, theta_c, two_pi);
    if (nr.converged) z_c = std::move(nr.z);
  }

  const ApComplex i_unit(ApReal(0L, bits), ApReal(1L, bits));
  const ApComplex one(ApReal(1L, bits));

  for (const ApReal& target_in : thetas) {
    const ApReal target = target_in.with_bits(bits);
    if (target < theta_c || !(target < two_pi)) throw InvalidParameter("angles must be ascending in [0, 2 pi)");
    if (target.is_zero()) {
      out.push_back(z_c);
      continue;
    }

    if (corner && (target < corner_window || two_pi - target < corner_window)) {
      NewtonResult nr = newton_on_curve(corner_seed(target, two_pi), r, target, two_pi);
      if (!nr.converged || !acceptable(nr.z, target, two_pi)) {
        std::ostringstream os;
        os << "corner seed failed on Gamma_0 at theta=" << target.to_string(10);
        throw TraceError(os.str());
      }
      z_c = std::move(nr.z);
      theta_c = target;
      out.push_back(z_c);
      continue;
    }

    // march theta_c -> target with adaptive sub-steps
    ApReal step = target - theta_c;
    const ApReal min_step = ApReal::pow2(-60, bits) * (target - theta_c + ApReal::pow2(-200, bits));
    while (theta_c < target) {
      if (step > target - theta_c) step = target - theta_c;
      ApReal next = theta_c + step;
      if (target - next < step * 1e-6) next = target;
      ApComplex seed;
      if (corner && next < corner_window) {
        seed = corner_seed(next, two_pi);
      } else {
        // tangent predictor dz/dtheta = i z / (1 - z)
        const ApComplex denom = one - z_c;
        seed = denom.is_zero() ? z_c : z_c + (i_unit * z_c / denom) * (next - theta_c);
      }
      NewtonResult nr = newton_on_curve(seed, r, next, two_pi);
      const bool ok = nr.converged && acceptable(nr.z, next, two_pi) &&
                      abs(nr.z - z_c) <= abs(seed - z_c) * 4L + abs(z_c) * 1e-30;
      if (ok) {
        z_c = std::move(nr.z);
        theta_c = std::move(next);
        step *= 2L;
      } else {
        step /= 2L;
        if (step < min_step) {
          std::ostringstream os;
          os << "Newton continuation stalled on Gamma_r, r=" << r.to_string(10) << " near theta="
             << theta_c.to_string(10);
          throw TraceError(os.str());
        }
      }
    }
    out.push_back(z_c);
  }
  return out;
}

LevelCurve trace_level_curve(const ApReal& r, unsigned nodes) {
  if (!(r >= 0.0) || !r.is_finite()) throw InvalidParameter("trace_level_curve requires finite r >= 0");
  if (nodes < 16 || nodes % 2 != 0) throw ConfigError("trace_level_curve requires an even node count >= 16");
  const unsigned bits = r.bits();
  const ApReal two_pi = ApReal::pi(bits) * 2L;
  std::vector<ApReal> thetas;
  thetas.reserve(nodes);
  for (unsigned j = 0; j < nodes; ++j) thetas.push_back(two_pi * static_cast<long>(j) / static_cast<long>(nodes));
  std::vector<ApComplex> zs = solve_level_curve(r, thetas);

  LevelCurve curve;
  curve.r = r;
  curve.samples.reserve(nodes);
  for (unsigned j = 0; j < nodes; ++j) curve.samples.push_back({std::move(thetas[j]), std::move(zs[j])});
  return curve;
}

const char* to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::Interior: return "interior";
    case RegionTag::OnCurve: return "on_curve";
    case RegionTag::Exterior: return "exterior";
  }
  return "?";
}

int winding_number(const LevelCurve& curve, const ApComplex& p) {
  const std::size_t m = curve.samples.size();
  if (m < 3) return 0;
  std::vector<std::complex<double>> d(m);
  for (std::size_t j = 0; j < m; ++j) {
    const ApComplex diff = curve.samples[j].z - p;
    d[j] = {diff.real().to_double(), diff.imag().to_double()};
  }
  double total = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& a = d[j];
    const auto& b = d[(j + 1) % m];
    total += std::atan2(a.real() * b.imag() - a.imag() * b.real(), a.real() * b.real() + a.imag() * b.imag());
  }
  return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

RegionTag locate(const ApComplex& z, const LevelCurve& curve, double tol) {
  if (!z.is_zero() && level_residual(z, curve.r) <= tol && abs(z) <= 1.0 + tol) return RegionTag::OnCurve;
  return winding_number(curve, z) == 1 ? RegionTag::Interior : RegionTag::Exterior;
}

double distance_to_samples(const LevelCurve& curve, const ApComplex& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : curve.samples) best = std::min(best, abs(s.z - p).to_double());
  return best;
}

}  // namespace szego
