#include "szego/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

namespace szego {

namespace {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// JSON number token for an ApReal; non-finite values become null
std::string json_real(const ApReal& x, int digits) {
  if (!x.is_finite()) return "null";
  return format_real(x, digits);
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

}  // namespace

int decimal_digits(unsigned bits) { return static_cast<int>(std::ceil(bits * 0.301)) + 2; }

std::string format_real(const ApReal& x, int digits) { return x.to_string(digits); }

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw std::runtime_error("output directory does not exist: " + dir.string());

  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

std::string zeros_csv(const ZeroSet& zs, int digits) {
  std::ostringstream os;
  os << "re,im,residual\n";
  for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
    os << format_real(zs.zeros[i].real(), digits) << ',' << format_real(zs.zeros[i].imag(), digits) << ','
       << format_real(zs.residuals[i], digits) << '\n';
  }
  return os.str();
}

std::string curve_csv(const LevelCurve& curve, int digits) {
  std::ostringstream os;
  os << "theta,re,im\n";
  for (const auto& s : curve.samples)
    os << format_real(s.theta, digits) << ',' << format_real(s.z.real(), digits) << ','
       << format_real(s.z.imag(), digits) << '\n';
  return os.str();
}

std::string measure_csv(const LevelCurve& curve, const DiscreteMeasure& mu, int digits) {
  if (curve.size() != mu.size()) throw std::invalid_argument("measure_csv: curve and measure sizes differ");
  std::ostringstream os;
  os << "theta,re,im,weight\n";
  for (std::size_t i = 0; i < mu.size(); ++i)
    os << format_real(curve.samples[i].theta, digits) << ',' << format_real(mu.points[i].real(), digits) << ','
       << format_real(mu.points[i].imag(), digits) << ',' << format_real(mu.weights[i], digits) << '\n';
  return os.str();
}

std::string report_json(const ConvergenceReport& rep, int digits) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"n\": " << rep.n << ",\n";
  os << "  \"alpha\": " << json_real(rep.alpha, digits) << ",\n";
  os << "  \"r_eff\": " << json_real(rep.r_eff, digits) << ",\n";
  os << "  \"level_deviation\": " << format_double(rep.level_deviation) << ",\n";
  os << "  \"median_level\": " << format_double(rep.median_level) << ",\n";
  os << "  \"ks_theta\": " << format_double(rep.ks_theta) << ",\n";
  os << "  \"moment_gaps\": [";
  for (std::size_t k = 0; k < rep.moment_gaps.size(); ++k)
    os << (k ? ", " : "") << format_double(rep.moment_gaps[k]);
  os << "],\n";
  os << "  \"supnorm_gap\": " << format_double(rep.supnorm_gap) << ",\n";
  os << "  \"origin_gap\": " << format_double(rep.origin_gap) << "\n";
  os << "}";
  return os.str();
}

std::string suite_json(const SuiteResult& suite) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"suite\": " << json_string(suite.suite) << ",\n";
  os << "  \"passed\": " << (suite.passed() ? "true" : "false") << ",\n";
  os << "  \"checks\": [";
  for (std::size_t i = 0; i < suite.checks.size(); ++i) {
    const auto& c = suite.checks[i];
    os << (i ? "," : "") << "\n    {\"name\": " << json_string(c.name) << ", \"value\": " << format_double(c.value)
       << ", \"tolerance\": " << format_double(c.tolerance) << ", \"passed\": " << (c.passed ? "true" : "false")
       << "}";
  }
  os << (suite.checks.empty() ? "]\n" : "\n  ]\n");
  os << "}";
  return os.str();
}

}  // namespace szego
