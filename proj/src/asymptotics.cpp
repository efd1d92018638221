#include "szego/asymptotics.hpp"
#include "szego/errors.hpp"
#include "szego/geometry.hpp"
#include "szego/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace szego {

namespace {

constexpr double kLog2E = 1.4426950408889634;

// -log2 of the distance to S_n, as a double
double dist_bits(const AlphaSchedule& s, unsigned n) {
  switch (s.kind) {
    case ScheduleKind::Generic: return std::max(0.0, -std::log2(s.param.to_double()));
    case ScheduleKind::Exponential: return s.param.to_double() * n * kLog2E;
    case ScheduleKind::Superexponential: return static_cast<double>(n) * n * kLog2E;
  }
  return 0.0;
}

}  // namespace

const char* to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Generic: return "generic";
    case ScheduleKind::Exponential: return "exponential";
    case ScheduleKind::Superexponential: return "superexponential";
  }
  return "?";
}

AlphaSchedule make_schedule(ScheduleKind kind, const ApReal& param) {
  AlphaSchedule s;
  s.kind = kind;
  switch (kind) {
    case ScheduleKind::Generic:
      if (!(param > 0.0) || !(param <= 0.5)) throw InvalidSchedule("generic(c) needs c in (0, 1/2]");
      s.param = param;
      break;
    case ScheduleKind::Exponential:
      if (!(param > 0.0) || !param.is_finite()) throw InvalidSchedule("exponential(r) needs finite r > 0");
      s.param = param;
      break;
    case ScheduleKind::Superexponential:
      s.param = ApReal(0L, kMinPrecisionBits);
      break;
  }
  return s;
}

unsigned AlphaSchedule::bits_for(unsigned n, unsigned base_bits) const {
  // dist is resolved once in alpha itself and once more in the symmetric functions of the
  // zeros, e.g. sum zeta = n + alpha, which cancels down to size dist
  const double extra = std::ceil(std::log2(n + 1.0)) + 2.0 * std::ceil(dist_bits(*this, n));
  return std::max({base_bits, param.bits(), base_bits + static_cast<unsigned>(extra)});
}

ApReal AlphaSchedule::alpha(unsigned n, unsigned base_bits) const {
  if (n < 1) throw InvalidSchedule("schedules start at n = 1");
  const unsigned bits = bits_for(n, base_bits);
  const ApReal minus_n(-static_cast<long>(n), bits);
  switch (kind) {
    case ScheduleKind::Generic: return minus_n - param.with_bits(bits);
    case ScheduleKind::Exponential: {
      const ApReal eps = exp(-(param.with_bits(bits) * static_cast<long>(n)));
      if (!(eps < 0.5)) {
        std::ostringstream os;
        os << "exponential schedule: e^{-r n} = " << eps.to_string(6) << " is not below 1/2 at n=" << n;
        throw InvalidSchedule(os.str());
      }
      return minus_n + eps;
    }
    case ScheduleKind::Superexponential: {
      const long n2 = static_cast<long>(n) * static_cast<long>(n);
      return minus_n + exp(ApReal(-n2, bits));
    }
  }
  return minus_n;
}

ApReal AlphaSchedule::limit_r(unsigned bits) const {
  switch (kind) {
    case ScheduleKind::Generic: return ApReal(0L, bits);
    case ScheduleKind::Exponential: return param.with_bits(bits);
    case ScheduleKind::Superexponential: return ApReal::infinity(bits);
  }
  return ApReal(0L, bits);
}

std::string AlphaSchedule::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind != ScheduleKind::Superexponential) os << "(" << param.to_string(10) << ")";
  return os.str();
}

ApReal supnorm_extremality(unsigned n, const ApReal& alpha, const ApReal& r, unsigned curve_nodes) {
  if (in_degenerate_set(n, alpha)) throw DegenerateParameter("supnorm_extremality: alpha in S_n");
  const unsigned bits = std::max(alpha.bits(), r.bits());
  const LevelCurve curve = trace_level_curve(r.with_bits(bits), curve_nodes);
  const LaguerreSpec spec = LaguerreSpec::contracted(n, alpha.with_bits(bits));
  const long inv_n = static_cast<long>(n);
  const std::size_t m = curve.size();

  ApReal best(0L, bits);
  for (std::size_t j = 2; j + 1 < m; ++j) {
    const ApComplex& z = curve.samples[j].z;
    const ApReal mag = abs(evaluate(spec, z));
    if (mag.is_zero()) continue;
    const ApReal v = exp(-z.real() + log(mag) / inv_n);
    best = max(best, v);
  }
  return best;
}

ApReal origin_extremality(unsigned n, const ApReal& alpha) {
  const ParamDecomposition d = param_decomposition(n, alpha);
  const ApReal at0 = abs(evaluate_at_zero(LaguerreSpec::contracted(n, alpha)));
  const ApReal root = pow(at0, ApReal(1L, alpha.bits()) / static_cast<long>(n));
  return abs(root - exp(-d.r_eff));
}

ConvergenceReport zero_distribution_report(unsigned n, const ApReal& alpha, unsigned curve_nodes, unsigned bits) {
  const unsigned work = std::max(bits, alpha.bits());
  const ApReal a = alpha.with_bits(work);
  const ParamDecomposition d = param_decomposition(n, a);

  ConvergenceReport rep;
  rep.n = n;
  rep.alpha = a;
  rep.r_eff = d.r_eff;
  rep.zeros = contracted_zeros(n, a, work);

  const ApReal r_eff = d.r_eff;
  std::vector<double> levels, angles;
  for (const auto& z : rep.zeros.zeros) {
    const ApComplex lp = log_phi(z);
    const double level = -lp.real().to_double();
    levels.push_back(level);
    rep.level_deviation = std::max(rep.level_deviation, std::fabs((-lp.real() - r_eff).to_double()));
    angles.push_back(arg(phi_map(z)).to_double());
  }
  std::vector<double> sorted = levels;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t h = sorted.size() / 2;
  rep.median_level = sorted.size() % 2 ? sorted[h] : 0.5 * (sorted[h - 1] + sorted[h]);
  rep.ks_theta = ks_uniform_angles(angles);

  const DiscreteMeasure nu = counting_measure(rep.zeros);
  for (unsigned k = 0; k < rep.moment_gaps.size(); ++k) {
    ApComplex m = nu.moment(k);
    if (k == 0) m -= ApReal(1L, work);
    rep.moment_gaps[k] = abs(m).to_double();
  }

  rep.supnorm_gap = (supnorm_extremality(n, a, r_eff, curve_nodes) - exp(-r_eff)).to_double();
  rep.origin_gap = origin_extremality(n, a).to_double();
  return rep;
}

}  // namespace szego
