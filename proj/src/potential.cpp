#include "szego/potential.hpp"
#include "szego/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

namespace szego {

namespace {

// Fixed-order pairwise summation; the result does not depend on how terms were produced.
ApReal pairwise_sum(std::vector<ApReal>& terms, std::size_t lo, std::size_t hi, unsigned bits) {
  if (hi - lo == 0) return ApReal(0L, bits);
  if (hi - lo == 1) return terms[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(terms, lo, mid, bits) + pairwise_sum(terms, mid, hi, bits);
}

ApReal pairwise_sum(std::vector<ApReal>& terms, unsigned bits) { return pairwise_sum(terms, 0, terms.size(), bits); }

std::string measure_label(const ApReal& r, unsigned nodes, bool graded) {
  std::ostringstream os;
  os << "mu_r r=" << r.to_string(17) << " M=" << nodes << (graded ? " graded" : " uniform");
  return os.str();
}

// theta_j = s_j - sin s_j, s_j = 2 pi j / M
std::vector<ApReal> graded_angles(unsigned nodes, unsigned bits) {
  const ApReal two_pi = ApReal::pi(bits) * 2L;
  std::vector<ApReal> thetas;
  thetas.reserve(nodes);
  for (unsigned j = 0; j < nodes; ++j) {
    const ApReal s = two_pi * static_cast<long>(j) / static_cast<long>(nodes);
    thetas.push_back(s - sin(s));
  }
  return thetas;
}

bool use_graded(const ApReal& r, unsigned nodes, MuRule rule) {
  return rule == MuRule::Graded || (rule == MuRule::Auto && r * static_cast<long>(nodes) < 40.0);
}

}  // namespace

ApReal ExternalField::value(const ApComplex& z) const {
  if (!active) return ApReal(0L, z.bits());
  return (log(abs(z)) + z.real()) / 2L;
}

ApReal ExternalField::weight(const ApComplex& z) const { return exp(-value(z)); }

MuDiscretization discretize(const ApReal& r, unsigned nodes, MuRule rule) {
  MuDiscretization out;
  const unsigned bits = r.bits();
  if (r.is_inf() && r > 0.0) {
    out.curve.r = r;
    out.curve.closed = false;
    out.measure.points.emplace_back(bits);
    out.measure.weights.emplace_back(1L, bits);
    out.measure.label = "delta_0";
    return out;
  }
  if (!(r >= 0.0) || !r.is_finite()) throw InvalidParameter("mu_r needs r >= 0");
  if (nodes < 16 || nodes % 2 != 0) throw ConfigError("mu_r discretization requires an even node count >= 16");

  out.graded = use_graded(r, nodes, rule);
  if (!out.graded) {
    out.curve = trace_level_curve(r, nodes);
    out.measure.weights.assign(nodes, ApReal(1L, bits) / static_cast<long>(nodes));
  } else {
    const ApReal two_pi = ApReal::pi(bits) * 2L;
    std::vector<ApReal> thetas = graded_angles(nodes, bits);
    for (unsigned j = 0; j < nodes; ++j) {
      const ApReal s = two_pi * static_cast<long>(j) / static_cast<long>(nodes);
      out.measure.weights.push_back((1L - cos(s)) / static_cast<long>(nodes));
    }
    std::vector<ApComplex> zs = solve_level_curve(r, thetas);
    out.curve.r = r;
    for (unsigned j = 0; j < nodes; ++j) out.curve.samples.push_back({std::move(thetas[j]), std::move(zs[j])});
  }
  for (const auto& s : out.curve.samples) out.measure.points.push_back(s.z);
  out.measure.label = measure_label(r, nodes, out.graded);
  return out;
}

DiscreteMeasure discretize_mu_r(const ApReal& r, unsigned nodes, MuRule rule) {
  return discretize(r, nodes, rule).measure;
}

ApReal log_potential(const DiscreteMeasure& mu, const ApComplex& z) {
  const unsigned bits = std::max(z.bits(), mu.points.empty() ? kMinPrecisionBits : mu.points.front().bits());
  std::vector<ApReal> terms;
  terms.reserve(mu.points.size());
  for (std::size_t i = 0; i < mu.points.size(); ++i) {
    if (mu.weights[i].is_zero()) continue;
    const ApReal d = abs(z - mu.points[i]);
    if (d <= 1e-30) {
      std::ostringstream os;
      os << "potential evaluated at an atom of " << mu.label << " (distance " << d.to_string(3) << ")";
      throw SingularEvaluation(os.str());
    }
    terms.push_back(-(mu.weights[i] * log(d)));
  }
  return pairwise_sum(terms, bits);
}

ApReal pullback_density(const ApComplex& z) {
  const unsigned bits = z.bits();
  const ApReal two_pi = ApReal::pi(bits) * 2L;
  const ApComplex one(ApReal(1L, bits));
  const ApComplex dphi = (one - z) * exp(one - z);
  if (dphi.is_zero()) return ApReal(1L, bits) / two_pi;
  const ApComplex zp = mul_i(phi_map(z) / dphi);
  // Re[X / (2 pi i)] = Im X / (2 pi)
  const ApComplex x = (one - z) / z * zp;
  return x.imag() / two_pi;
}

bool BalayageReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

BalayageReport verify_balayage(const ApReal& r, unsigned nodes, const std::vector<ApComplex>& interior,
                               const std::vector<ApComplex>& exterior, BalayageOptions opts) {
  const unsigned bits = r.bits();
  const MuDiscretization disc = discretize(r, nodes);
  if (!disc.curve.closed) throw InvalidParameter("verify_balayage needs a finite r");
  const DiscreteMeasure& mu = disc.measure;
  const ExternalField field;
  const ApReal r1 = r + 1L;

  BalayageReport rep;
  rep.r = r;
  rep.nodes = nodes;
  auto add = [&](const ApComplex& p, const char* name, ApReal lhs, ApReal rhs, double tol) {
    ApReal err = abs(lhs - rhs);
    rep.checks.push_back({p, name, std::move(lhs), std::move(rhs), std::move(err), tol});
  };

  for (const auto& p0 : interior) {
    const ApComplex p = p0.with_bits(bits);
    if (locate(p, disc.curve) != RegionTag::Interior) {
      std::ostringstream os;
      os << "interior test point " << p.real().to_string(8) << (p.imag() < 0.0 ? "" : "+") << p.imag().to_string(8)
         << "i is not inside Gamma_r";
      throw InvalidTestPoint(os.str());
    }
    add(p, "interior_re", log_potential(mu, p) + p.real(), r1, opts.tolerance);
  }
  for (const auto& p0 : exterior) {
    const ApComplex p = p0.with_bits(bits);
    if (locate(p, disc.curve) != RegionTag::Exterior) {
      std::ostringstream os;
      os << "exterior test point " << p.real().to_string(8) << (p.imag() < 0.0 ? "" : "+") << p.imag().to_string(8)
         << "i is not outside Gamma_r";
      throw InvalidTestPoint(os.str());
    }
    add(p, "exterior_log", log_potential(mu, p) + log(abs(p)), ApReal(0L, bits), opts.tolerance);
  }
  add(ApComplex(bits), "origin", log_potential(mu, ApComplex(bits)), r1, opts.origin_tolerance);

  // near-curve points: V + ext_field = (r+1)/2 on Gamma_r, carried off the curve by the
  // harmonic continuations V + Re z (inside) and V + ln|z| (outside)
  const ApReal pi = ApReal::pi(bits);
  const std::vector<ApReal> angles = {pi / 2L, pi, pi * 3L / 2L};
  const std::vector<ApComplex> on_curve = solve_level_curve(r, angles);
  const ApComplex one(ApReal(1L, bits));
  const ApReal half_r1 = r1 / 2L;
  for (const ApComplex& zc : on_curve) {
    const ApComplex tangent = mul_i(zc / (one - zc));
    const ApReal speed = abs(tangent);
    const ApComplex outward = -mul_i(tangent) / speed;
    const ApReal spacing = speed * (pi * 2L) / static_cast<long>(nodes) * (disc.graded ? 2L : 1L);
    const ApReal d = spacing * opts.offset_spacings;
    const ApReal on_curve_field = field.value(zc);

    const ApComplex zin = zc - outward * d;
    const ApComplex zout = zc + outward * d;
    if (locate(zin, disc.curve) != RegionTag::Interior || locate(zout, disc.curve) != RegionTag::Exterior)
      throw InvalidTestPoint("near-curve offset points landed on the wrong side; increase the node count");
    add(zin, "robin_interior", log_potential(mu, zin) + zin.real() - zc.real() + on_curve_field, half_r1,
        opts.tolerance);
    add(zout, "robin_exterior", log_potential(mu, zout) + log(abs(zout)) - log(abs(zc)) + on_curve_field, half_r1,
        opts.tolerance);
  }
  return rep;
}

EnergyReport weighted_energy(const DiscreteMeasure& mu, const ExternalField& field) {
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < mu.points.size(); ++i)
    if (!mu.weights[i].is_zero()) live.push_back(i);
  if (live.size() < 2) throw InvalidParameter("weighted_energy needs at least two weighted atoms");
  const unsigned bits = mu.points[live.front()].bits();

  std::vector<ApReal> pair_terms;
  pair_terms.reserve(live.size() * (live.size() - 1) / 2);
  for (std::size_t a = 0; a < live.size(); ++a) {
    for (std::size_t b = a + 1; b < live.size(); ++b) {
      const std::size_t i = live[a], j = live[b];
      const ApReal d = abs(mu.points[i] - mu.points[j]);
      if (d.is_zero()) throw SingularEvaluation("weighted_energy: coincident atoms");
      pair_terms.push_back(-(mu.weights[i] * mu.weights[j] * log(d) * 2L));
    }
  }
  std::vector<ApReal> field_terms;
  for (std::size_t i : live) field_terms.push_back(mu.weights[i] * field.value(mu.points[i]));

  const ApReal self = pairwise_sum(pair_terms, bits);
  const ApReal q = pairwise_sum(field_terms, bits);
  EnergyReport rep;
  rep.energy = self + q * 2L;
  rep.robin_hat = rep.energy - q;
  return rep;
}

LejaResult weighted_leja(const ApReal& r, unsigned count, unsigned grid_nodes) {
  if (count < 1) throw ConfigError("weighted_leja needs N >= 1");
  if (grid_nodes < 8 * count) throw ConfigError("weighted_leja needs at least 8N grid nodes");
  const unsigned m = grid_nodes + (grid_nodes % 2);
  LevelCurve grid;
  if (use_graded(r, m, MuRule::Auto)) {
    std::vector<ApReal> thetas = graded_angles(m, r.bits());
    std::vector<ApComplex> zs = solve_level_curve(r, thetas);
    grid.r = r;
    for (unsigned j = 0; j < m; ++j) grid.samples.push_back({std::move(thetas[j]), std::move(zs[j])});
  } else {
    grid = trace_level_curve(r, m);
  }

  std::vector<std::complex<double>> z(m);
  std::vector<double> q(m), theta(m);
  for (unsigned j = 0; j < m; ++j) {
    const auto& s = grid.samples[j];
    z[j] = {s.z.real().to_double(), s.z.imag().to_double()};
    q[j] = ExternalField{}.value(s.z).to_double();
    theta[j] = s.theta.to_double();
  }

  LejaResult out;
  std::vector<double> logprod(m, 0.0);
  auto best_index = [&](unsigned power) {
    unsigned best = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    for (unsigned j = 0; j < m; ++j) {
      const double v = logprod[j] - power * q[j];
      if (v > best_v) {
        best_v = v;
        best = j;
      }
    }
    return std::pair{best, best_v};
  };

  for (unsigned k = 0; k < count; ++k) {
    // k = 0 maximizes the weight itself
    const unsigned pick = best_index(std::max(k, 1U)).first;
    out.grid_index.push_back(pick);
    out.theta.push_back(theta[pick]);
    for (unsigned j = 0; j < m; ++j) logprod[j] += std::log(std::abs(z[j] - z[pick]));
  }
  out.log_t_hat = best_index(count).second;
  out.robin_estimate = -out.log_t_hat / count;

  const unsigned bits = r.bits();
  for (unsigned idx : out.grid_index) {
    out.measure.points.push_back(grid.samples[idx].z);
    out.measure.weights.push_back(ApReal(1L, bits) / static_cast<long>(count));
  }
  std::ostringstream os;
  os << "weighted Leja r=" << r.to_string(17) << " N=" << count;
  out.measure.label = os.str();
  return out;
}

double ks_uniform_angles(std::vector<double> angles) {
  if (angles.empty()) return 0.0;
  const double two_pi = 2.0 * M_PI;
  for (double& a : angles) {
    a = std::fmod(a, two_pi);
    if (a < 0) a += two_pi;
    a /= two_pi;
  }
  std::sort(angles.begin(), angles.end());
  const double n = static_cast<double>(angles.size());
  double d = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - angles[i]);
    d = std::max(d, angles[i] - static_cast<double>(i) / n);
  }
  return d;
}

}  // namespace szego
