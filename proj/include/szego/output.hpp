#pragma once
//
// CSV and JSON serialization of results, and atomic file writes.
//

#include "szego/asymptotics.hpp"
#include "szego/geometry.hpp"
#include "szego/roots.hpp"
#include "szego/suites.hpp"

#include <filesystem>
#include <string>

namespace szego {

/// ceil(bits * 0.301) + 2 significant decimal digits.
int decimal_digits(unsigned bits);

/// Scientific decimal with `digits` significant digits.
std::string format_real(const ApReal& x, int digits);

/// Writes to a temporary file in the same directory, then renames over `path`.
/// Throws std::runtime_error on I/O failure.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// re,im,residual
std::string zeros_csv(const ZeroSet& zs, int digits);
/// theta,re,im
std::string curve_csv(const LevelCurve& curve, int digits);
/// theta,re,im,weight
std::string measure_csv(const LevelCurve& curve, const DiscreteMeasure& mu, int digits);

/// Keys n, alpha, r_eff, level_deviation, ks_theta, moment_gaps, supnorm_gap, origin_gap.
std::string report_json(const ConvergenceReport& rep, int digits);
std::string suite_json(const SuiteResult& suite);

}  // namespace szego
