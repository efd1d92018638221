#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "szego/asymptotics.hpp"
#include "szego/errors.hpp"
#include "szego/geometry.hpp"

#include <cmath>

using namespace szego;

namespace {

ApReal R(const char* s, unsigned bits = 128) { return ApReal::parse(s, bits); }

}  // namespace

TEST_CASE("make_schedule examples and errors") {
  const AlphaSchedule g = make_schedule(ScheduleKind::Generic, R("0.1"));
  CHECK(abs(g.alpha(60, 128) + R("60.1")) < 1e-35);

  // e^{-60 r} = 1e-5
  const ApReal r = log(ApReal(10L, 256)) / 12L;
  const AlphaSchedule e = make_schedule(ScheduleKind::Exponential, r);
  const ApReal a60 = e.alpha(60, 128);
  CHECK(abs(a60 + 60L - R("1e-5", a60.bits())) < 1e-30);
  CHECK(abs(param_decomposition(60, a60).r_eff - r) < 1e-30);

  const AlphaSchedule s = make_schedule(ScheduleKind::Superexponential);
  const ApReal a10 = s.alpha(10, 128);
  CHECK(a10.bits() >= 128 + 144);
  const ParamDecomposition d10 = param_decomposition(10, a10);
  const ApReal e100 = exp(ApReal(-100L, a10.bits()));
  CHECK(abs(d10.dist - e100) < ApReal::pow2(-120, a10.bits()) * e100);
  CHECK(abs(d10.r_eff - 10L) < 1e-30);
  CHECK(s.limit_r(128).is_inf());

  CHECK_THROWS_AS(make_schedule(ScheduleKind::Generic, R("0")), InvalidSchedule);
  CHECK_THROWS_AS(make_schedule(ScheduleKind::Generic, R("0.6")), InvalidSchedule);
  CHECK_THROWS_AS(make_schedule(ScheduleKind::Exponential, R("-1")), InvalidSchedule);
  CHECK_THROWS_AS(make_schedule(ScheduleKind::Exponential, R("0")), InvalidSchedule);
  // e^{-r n} must be below 1/2
  CHECK_THROWS_AS(make_schedule(ScheduleKind::Exponential, R("0.01")).alpha(10, 128) == 0.0, InvalidSchedule);
  CHECK_NOTHROW(make_schedule(ScheduleKind::Exponential, R("0.01")).alpha(100, 128) < 0.0);
}

TEST_CASE("origin_extremality examples") {
  for (unsigned n : {1U, 5U, 17U, 40U}) CHECK(origin_extremality(n, ApReal(-static_cast<long>(n) - 1, 128)).is_zero());

  // |binom(-0.5, 3)|^{1/3} = 0.3125^{1/3} against e^{-r_eff} = 0.5^{1/3}
  const double want = std::fabs(std::cbrt(0.3125) - std::cbrt(0.5));
  CHECK(origin_extremality(3, R("-3.5")).to_double() == doctest::Approx(want).epsilon(1e-14));

  const AlphaSchedule half = make_schedule(ScheduleKind::Exponential, R("0.5"));
  CHECK(origin_extremality(200, half.alpha(200, 128)) <= 0.05);
  CHECK_THROWS_AS(origin_extremality(4, R("-2")), DegenerateParameter);
}

TEST_CASE("supnorm_extremality for the partial-sum case") {
  double prev = 1.0;
  for (unsigned n : {30U, 60U, 120U}) {
    const unsigned bits = default_precision_bits(n);
    const double gap = (supnorm_extremality(n, ApReal(-static_cast<long>(n) - 1, bits), ApReal(0L, bits), 512) - 1L).to_double();
    CAPTURE(n);
    CHECK(gap > 0.0);
    CHECK(gap < 0.01);
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("zero_distribution_report") {
  SUBCASE("n = 60, alpha = -60.1") {
    const ConvergenceReport rep = zero_distribution_report(60, R("-60.1", 512), 512, 512);
    CHECK(rep.zeros.zeros.size() == 60);
    CHECK(std::fabs(rep.moment_gaps[1] - 0.1 / 60) < 1e-18);
    CHECK(rep.moment_gaps[0] < 1e-100);
    CHECK(rep.ks_theta >= 0.0);
    CHECK(rep.ks_theta <= 1.0);
    CHECK(rep.level_deviation >= 0.0);
  }
  SUBCASE("n = 60, alpha = -60 + 1e-5 tracks Gamma_{ln 10 / 12}") {
    const ApReal alpha = ApReal(-60L, 512) + R("1e-5", 512);
    const ConvergenceReport rep = zero_distribution_report(60, alpha, 512, 512);
    CHECK(abs(rep.r_eff - log(ApReal(10L, 512)) / 12L) < ApReal::pow2(-256, 512));
    CHECK(std::fabs(rep.median_level - 0.19188) <= 0.15 * 0.19188);
  }
  CHECK_THROWS_AS(zero_distribution_report(5, R("-3"), 64, 128), DegenerateParameter);
}

TEST_CASE("first moment equals the Vieta mean exactly") {
  for (unsigned n : {7U, 20U, 45U}) {
    const unsigned bits = default_precision_bits(n);
    const ApReal alpha = ApReal(-static_cast<long>(n), bits) - R("0.37", bits);
    const ConvergenceReport rep = zero_distribution_report(n, alpha, 64, bits);
    const double want = std::fabs(((alpha + static_cast<long>(n)) / static_cast<long>(n)).to_double());
    CHECK(std::fabs(rep.moment_gaps[1] - want) <= std::ldexp(want, -static_cast<int>(bits / 4)) + 1e-300);
  }
}

TEST_CASE("trends along generic(0.1)") {
  const AlphaSchedule g = make_schedule(ScheduleKind::Generic, R("0.1"));
  std::vector<ConvergenceReport> reps;
  for (unsigned n : {30U, 60U, 120U}) reps.push_back(zero_distribution_report(n, g.alpha(n, default_precision_bits(n)), 256, default_precision_bits(n)));
  for (std::size_t i = 1; i < reps.size(); ++i) {
    CHECK(reps[i].ks_theta < reps[i - 1].ks_theta);
    for (unsigned k = 1; k <= 4; ++k) CHECK(reps[i].moment_gaps[k] < reps[i - 1].moment_gaps[k]);
    CHECK(reps[i].origin_gap < reps[i - 1].origin_gap);
  }
}

TEST_CASE("superexponential schedule collapses to the origin") {
  const AlphaSchedule s = make_schedule(ScheduleKind::Superexponential);
  const ApReal alpha = s.alpha(40, default_precision_bits(40));
  const ZeroSet zs = contracted_zeros(40, alpha, alpha.bits());
  ApReal gamma3(0L, 128);
  for (const auto& p : trace_level_curve(R("3"), 256).samples) gamma3 = max(gamma3, abs(p.z));
  for (const auto& z : zs.zeros) CHECK(abs(z) < gamma3);

  double prev = 1.0;
  for (unsigned n : {10U, 20U, 40U}) {
    const double gap = origin_extremality(n, s.alpha(n, 128)).to_double();
    CHECK(gap < prev);
    prev = gap;
  }
}
