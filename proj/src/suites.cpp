#include "szego/suites.hpp"
#include "szego/asymptotics.hpp"
#include "szego/geometry.hpp"
#include "szego/laguerre.hpp"
#include "szego/potential.hpp"
#include "szego/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace szego {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

double SuiteResult::worst_ratio() const {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.tolerance > 0 ? c.value / c.tolerance : (c.passed ? 0.0 : INFINITY));
  return w;
}

void SuiteResult::add(std::string name, double value, double tolerance) {
  checks.push_back({std::move(name), value, tolerance, value <= tolerance});
}

SuiteResult lemma1_suite(const ApReal& r, unsigned nodes) {
  SuiteResult out;
  out.suite = "lemma1";
  const unsigned bits = r.bits();
  const MuDiscretization d = discretize(r, nodes);
  out.add("total_mass", abs(d.measure.total_mass() - 1L).to_double(), 1e-12);

  double most_negative = 0.0;
  for (const auto& s : d.curve.samples) most_negative = std::max(most_negative, -pullback_density(s.z).to_double());
  out.add("density_nonnegative", most_negative, 0.0);

  for (unsigned k = 0; k <= 6; ++k) {
    ApComplex m = d.measure.moment(k);
    if (k == 0) m -= ApReal(1L, bits);
    out.add("moment_" + std::to_string(k), abs(m).to_double(), 1e-10);
  }
  return out;
}

SuiteResult balayage_suite(const ApReal& r, unsigned nodes) {
  SuiteResult out;
  out.suite = "balayage";
  const unsigned bits = r.bits();
  const LevelCurve probe = trace_level_curve(r, 256);
  const RealCrossings x = real_crossings(r);

  // interior candidates well inside, kept only at distance >= 0.05 from the curve
  std::vector<ApComplex> candidates = {ApComplex(bits), ApComplex(x.x_neg / 2L), ApComplex(x.x0 / 2L)};
  for (unsigned j : {64U, 96U, 160U, 192U}) candidates.push_back(probe.samples[j].z * ApReal(0.5, bits));
  std::vector<ApComplex> interior;
  for (auto& c : candidates)
    if (distance_to_samples(probe, c) >= 0.06 && locate(c, probe) == RegionTag::Interior) interior.push_back(std::move(c));

  const std::vector<ApComplex> exterior = {ApComplex(2.0, 0.0, bits), ApComplex(3.0, 0.0, bits),
                                           ApComplex(-2.0, 0.0, bits), ApComplex(0.0, 1.5, bits)};
  const BalayageReport rep = verify_balayage(r, nodes, interior, exterior);
  for (const auto& c : rep.checks) {
    std::ostringstream name;
    name << c.identity << "@(" << c.point.real().to_string(4) << "," << c.point.imag().to_string(4) << ")";
    out.add(name.str(), c.abs_error.to_double(), c.tolerance);
  }
  return out;
}

SuiteResult robin_suite(const ApReal& r, unsigned leja_count, unsigned grid_factor, unsigned energy_nodes) {
  SuiteResult out;
  out.suite = "robin";
  const double want = ((r + 1L) / 2L).to_double();
  const LejaResult l = weighted_leja(r, leja_count, leja_count * grid_factor);
  out.add("leja_relative_error", std::fabs(l.robin_estimate - want) / want, 0.05);
  const EnergyReport e = weighted_energy(discretize_mu_r(r, energy_nodes), ExternalField::szego());
  out.add("energy_robin_error", std::fabs(e.robin_hat.to_double() - want), 0.025);
  return out;
}

namespace {

void degenerate_identity(SuiteResult& out) {
  constexpr unsigned bits = 256;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      for (int t = 0; t < 4; ++t) {
        const ApComplex z(u(rng), u(rng), bits);
        const ApComplex lhs = laguerre_recurrence(n, ApReal(-static_cast<long>(k), bits), z);
        ApReal ratio(1L, bits);
        for (unsigned j = n - k + 1; j <= n; ++j) ratio /= static_cast<long>(j);
        const ApComplex rhs =
            pow(-z, static_cast<long>(k)) * ratio * laguerre_recurrence(n - k, ApReal(static_cast<long>(k), bits), z);
        worst = std::max(worst, abs(lhs - rhs).to_double());
      }
    }
  }
  out.add("degenerate_identity", worst, 1e-20);
}

void partial_sums(SuiteResult& out) {
  constexpr unsigned bits = 256;
  double worst = 0.0;
  for (unsigned n = 1; n <= 20; ++n) {
    const CoeffList c =
        coefficients(LaguerreSpec::make(n, ApReal(-static_cast<long>(n) - 1, bits), ApReal(1L, bits)), bits);
    ApReal inv_fact(1L, bits);
    for (unsigned k = 0; k <= n; ++k) {
      if (k > 0) inv_fact /= static_cast<long>(k);
      const ApReal want = n % 2 == 0 ? inv_fact : -inv_fact;
      worst = std::max(worst, (abs(c.coeffs[k].real() - want) / abs(want)).to_double());
      if (!c.coeffs[k].imag().is_zero()) worst = INFINITY;
    }
  }
  // coefficientwise agreement to the last few bits of 256
  out.add("partial_sum_coefficients", worst, std::ldexp(1.0, -245));
}

void recurrence_vs_horner(SuiteResult& out) {
  constexpr unsigned bits = 256;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ua(-15.0, 5.0), ur(0.0, 3.0), ut(0.0, 2 * M_PI);
  double worst = 0.0;
  for (unsigned n = 1; n <= 12; ++n) {
    for (int t = 0; t < 50; ++t) {
      const LaguerreSpec spec = LaguerreSpec::make(n, ApReal(ua(rng), bits), ApReal(1L, bits));
      const CoeffList c = coefficients(spec, bits);
      for (int p = 0; p < 20; ++p) {
        const double rad = ur(rng), th = ut(rng);
        const ApComplex z(rad * std::cos(th), rad * std::sin(th), bits);
        const ApComplex a = evaluate(spec, z);
        const ApComplex b = horner(c, z);
        const ApReal scale = max(abs(a), abs(b));
        if (!scale.is_zero()) worst = std::max(worst, (abs(a - b) / scale).to_double());
      }
    }
  }
  out.add("recurrence_vs_horner_relative", worst, std::ldexp(1.0, -static_cast<int>(bits / 2)));
}

void askey_examples(SuiteResult& out) {
  constexpr unsigned bits = 128;
  auto R = [](const char* s) { return ApReal::parse(s, bits); };
  out.add("askey_n1", askey_check(1, R("-0.5"), R("0"), R("0")).abs_error.to_double(), 1e-6);
  double worst = 0.0;
  for (const char* x : {"0", "0.7", "3"})
    worst = std::max(worst, askey_check(0, R("-1.7"), R("0.4"), R(x)).abs_error.to_double());
  out.add("askey_n0", worst, 1e-6);
  out.add("askey_n4", askey_check(4, R("-4.3"), R("-4"), R("0.5")).abs_error.to_double(), 1e-6);
}

}  // namespace

SuiteResult laguerre_identity_suite() {
  SuiteResult out;
  out.suite = "laguerre-identities";
  degenerate_identity(out);
  partial_sums(out);
  recurrence_vs_horner(out);
  askey_examples(out);
  return out;
}

SuiteResult askey_suite() {
  SuiteResult out;
  out.suite = "askey";
  askey_examples(out);
  return out;
}

SuiteResult rootfinder_suite() {
  SuiteResult out;
  out.suite = "rootfinder";
  const std::vector<AlphaSchedule> schedules = {
      make_schedule(ScheduleKind::Generic, ApReal(0.1, 128)),
      make_schedule(ScheduleKind::Exponential, log(ApReal(10L, 128)) / 12L),
      make_schedule(ScheduleKind::Superexponential),
  };
  for (const auto& s : schedules) {
    for (unsigned n : {10U, 30U, 60U}) {
      const ApReal alpha = s.alpha(n, default_precision_bits(n));
      const unsigned bits = alpha.bits();
      const ZeroSet zs = contracted_zeros(n, alpha, bits);
      // relative residuals measured in units of 2^{-bits/4}; pass iff <= 1
      const ApReal unit = ApReal::pow2(-static_cast<long>(bits / 4), bits);
      const std::string tag = s.describe() + " n=" + std::to_string(n);

      ApComplex sum(bits), prod(ApReal(1L, bits));
      for (const auto& z : zs.zeros) {
        sum += z;
        prod *= z;
      }
      const ApReal want_mean = (alpha + static_cast<long>(n)) / static_cast<long>(n);
      const ApComplex mean = sum / ApReal(static_cast<long>(n), bits);
      out.add("vieta_sum " + tag, (abs(mean - ApComplex(want_mean)) / abs(want_mean) / unit).to_double(), 1.0);

      ApReal want_prod = evaluate_at_zero(LaguerreSpec::contracted(n, alpha)) / contracted_leading_coefficient(n, bits);
      if (n % 2 == 1) want_prod = -want_prod;
      out.add("vieta_product " + tag, (abs(prod / want_prod - ApReal(1L, bits)) / unit).to_double(), 1.0);

      const double res_ratio = (zs.max_residual() / default_root_tolerance(bits)).to_double();
      out.add("residuals " + tag, res_ratio, 1.0);
    }
  }
  const ZeroSet triple = find_roots(monic_rescaled(LaguerreSpec::contracted(3, ApReal(-3L, 128)), 128), 128,
                                    default_root_tolerance(128));
  out.add("origin_multiplicity(3,-3)", std::fabs(static_cast<double>(triple.origin_multiplicity) - 3.0), 0.0);
  return out;
}

}  // namespace szego
