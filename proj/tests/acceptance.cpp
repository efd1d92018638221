// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "szego/asymptotics.hpp"
#include "szego/cli.hpp"
#include "szego/geometry.hpp"
#include "szego/potential.hpp"
#include "szego/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace szego;
namespace fs = std::filesystem;

namespace {

// Regression thresholds for n=60, alpha=-60.1, pinned from the first verified build
// (observed level_deviation 0.0121298, ks_theta 0.0103558).
constexpr double kFig2LevelDeviation = 0.0122;
constexpr double kFig2Ks = 0.0104;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

void fold(Outcome& o, const SuiteResult& s, const std::string& tag) {
  if (!s.passed()) {
    o.passed = false;
    for (const auto& c : s.checks)
      if (!c.passed) o.detail += " FAILED " + tag + ":" + c.name + "=" + fmt(c.value) + ">" + fmt(c.tolerance);
  }
  o.detail += " " + tag + " worst=" + fmt(s.worst_ratio());
}

std::size_t count_lines(const fs::path& p) {
  std::ifstream f(p);
  std::size_t n = 0;
  for (std::string l; std::getline(f, l);) ++n;
  return n;
}

Outcome lemma1() {
  Outcome o{true, ""};
  for (const char* r : {"0", "0.1919", "1"}) fold(o, lemma1_suite(ApReal::parse(r, 128), 4096), std::string("r=") + r);
  return o;
}

Outcome balayage_robin() {
  Outcome o{true, ""};
  for (const char* r : {"0", "0.1919", "1"}) {
    const ApReal rr = ApReal::parse(r, 128);
    fold(o, balayage_suite(rr, 4096), std::string("balayage r=") + r);
    fold(o, robin_suite(rr, 128, kDefaultLejaGridFactor, 512), std::string("robin r=") + r);
  }
  return o;
}

Outcome laguerre_identities() {
  Outcome o{true, ""};
  fold(o, laguerre_identity_suite(), "identities");
  return o;
}

Outcome rootfinder() {
  Outcome o{true, ""};
  fold(o, rootfinder_suite(), "rootfinder");
  return o;
}

Outcome figure2() {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr unsigned n = 60, bits = 512;
  const ApReal alpha = ApReal::parse("-60.1", bits);
  const ConvergenceReport rep = zero_distribution_report(n, alpha, 1024, bits);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  ApComplex sum(bits);
  for (const auto& z : rep.zeros.zeros) sum += z;
  const ApComplex mean = sum / ApReal(static_cast<long>(n), bits);
  const ApReal want = (alpha + static_cast<long>(n)) / static_cast<long>(n);
  const double mean_err = abs(mean - ApComplex(want)).to_double();

  Outcome o;
  o.passed = rep.zeros.zeros.size() == n && mean_err <= std::ldexp(1.0, -64) &&
             rep.level_deviation <= kFig2LevelDeviation && rep.ks_theta <= kFig2Ks && seconds < 60.0;
  o.detail = " zeros=" + std::to_string(rep.zeros.zeros.size()) + " |mean+1/600|=" + fmt(mean_err) +
             " level_deviation=" + fmt(rep.level_deviation) + "<=" + fmt(kFig2LevelDeviation) +
             " ks_theta=" + fmt(rep.ks_theta) + "<=" + fmt(kFig2Ks) + " time=" + fmt(seconds) + "s";
  return o;
}

Outcome figure3() {
  constexpr unsigned n = 60, bits = 512;
  const ApReal alpha = ApReal(-60L, bits) + ApReal::parse("1e-5", bits);
  const ConvergenceReport rep = zero_distribution_report(n, alpha, 1024, bits);
  const ApReal exact = log(ApReal(10L, bits)) / 12L;
  const double r_err = abs(rep.r_eff - exact).to_double();
  // alpha = -60 + 1e-5 is itself rounded to 512 bits; that half-ulp of 60 moves dist by a relative
  // ulp(60) / dist and r_eff by ulp(60) / (n dist), on top of the rounding of the logarithm
  const double ulp60 = std::ldexp(1.0, 6 - static_cast<int>(bits));
  const double r_tol = ulp60 / (n * 1e-5) + std::ldexp(1.0, -static_cast<int>(bits) + 8);
  const double median_rel = std::fabs(rep.median_level - 0.19188) / 0.19188;

  // overlay data through the command line
  const fs::path dir = fs::temp_directory_path() / ("szego_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string dir_s = dir.string();
  const char* argv[] = {"szego", "experiment", "--fig", "3", "--out-dir", dir_s.c_str()};
  std::ostringstream out, err;
  const int code = run_cli(6, argv, out, err);
  const bool overlay = code == 0 && count_lines(dir / "fig3_zeros.csv") == n + 1 &&
                       count_lines(dir / "fig3_curve.csv") == 1025 && fs::exists(dir / "fig3_report.json");
  fs::remove_all(dir);

  Outcome o;
  o.passed = r_err <= r_tol && median_rel <= 0.15 && overlay;
  o.detail = " |r_eff-ln10/12|=" + fmt(r_err) + "<=" + fmt(r_tol) + " median=" + fmt(rep.median_level) +
             " rel_to_0.19188=" + fmt(median_rel) + "<=0.15 overlay=" + (overlay ? "written" : "missing");
  return o;
}

Outcome trends() {
  const AlphaSchedule g = make_schedule(ScheduleKind::Generic, ApReal(0.1, 128));
  std::vector<ConvergenceReport> reps;
  for (unsigned n : {30U, 60U, 120U}) {
    const ApReal alpha = g.alpha(n, default_precision_bits(n));
    reps.push_back(zero_distribution_report(n, alpha, 256, alpha.bits()));
  }
  auto decreasing = [&](const std::function<double(const ConvergenceReport&)>& f) {
    return f(reps[0]) > f(reps[1]) && f(reps[1]) > f(reps[2]);
  };
  Outcome o{true, ""};
  auto note = [&](const std::string& name, const std::function<double(const ConvergenceReport&)>& f) {
    const bool ok = decreasing(f);
    o.passed = o.passed && ok;
    o.detail += " " + name + "=" + fmt(f(reps[0])) + ">" + fmt(f(reps[1])) + ">" + fmt(f(reps[2])) + (ok ? "" : "(!)");
  };
  note("ks", [](const ConvergenceReport& r) { return r.ks_theta; });
  for (unsigned k = 1; k <= 4; ++k)
    note("m" + std::to_string(k), [k](const ConvergenceReport& r) { return r.moment_gaps[k]; });
  note("origin", [](const ConvergenceReport& r) { return r.origin_gap; });

  const AlphaSchedule s = make_schedule(ScheduleKind::Superexponential);
  const ApReal alpha = s.alpha(40, default_precision_bits(40));
  const ZeroSet zs = contracted_zeros(40, alpha, alpha.bits());
  double max_zeta = 0.0;
  for (const auto& z : zs.zeros) max_zeta = std::max(max_zeta, abs(z).to_double());
  const LevelCurve g3 = trace_level_curve(ApReal(3L, 128), 1024);
  double max_curve = 0.0;
  for (const auto& smp : g3.samples) max_curve = std::max(max_curve, abs(smp.z).to_double());
  const bool collapse = zs.zeros.size() == 40 && max_zeta < max_curve;
  o.passed = o.passed && collapse;
  o.detail += " superexp n=40 max|zeta|=" + fmt(max_zeta) + "<max|Gamma_3|=" + fmt(max_curve);
  return o;
}

Outcome askey() {
  Outcome o{true, ""};
  fold(o, askey_suite(), "askey");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "lemma1 suite", lemma1},
      {2, "balayage/robin suite", balayage_robin},
      {3, "laguerre identity suite", laguerre_identities},
      {4, "root-finder suite", rootfinder},
      {5, "fig2 experiment (n=60, alpha=-60.1)", figure2},
      {6, "fig3 experiment (n=60, alpha=-60+1e-5)", figure3},
      {7, "convergence trends", trends},
      {8, "askey representation", askey},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << fmt(sec) << "s)"
              << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
