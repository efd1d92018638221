#include "szego/cli.hpp"
#include "szego/asymptotics.hpp"
#include "szego/errors.hpp"
#include "szego/geometry.hpp"
#include "szego/laguerre.hpp"
#include "szego/output.hpp"
#include "szego/potential.hpp"
#include "szego/roots.hpp"
#include "szego/suites.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace szego {

namespace {

namespace fs = std::filesystem;

constexpr unsigned kFallbackBits = 128;
constexpr unsigned kFallbackNodes = 1024;
constexpr unsigned kSuiteNodes = 4096;
constexpr unsigned kEnergyNodes = 512;
constexpr unsigned kFigureBits = 512;

const std::vector<std::string> kSubcommands = {"zeros", "curve", "measure", "potential", "verify", "leja", "experiment"};
const std::vector<std::string> kValueOptions = {"--precision", "--nodes", "--tol", "--out-dir"};

struct RunConfig {
  unsigned precision_bits = 0;  // 0: chosen per subcommand
  unsigned nodes = 0;           // 0: chosen per subcommand
  std::string tol;
  std::string out_dir = ".";

  unsigned n = 0;
  std::string alpha;
  std::string r = "0";
  std::string rule = "auto";
  std::vector<std::string> points;
  std::string suite;
  unsigned count = 128;
  unsigned grid = 0;
  int fig = 0;
  std::string schedule;
  std::string param;
  std::vector<unsigned> ns;
  std::string out;

  [[nodiscard]] unsigned bits_or(unsigned fallback) const {
    const unsigned b = precision_bits ? precision_bits : fallback;
    require_precision(b);
    return b;
  }
  [[nodiscard]] unsigned nodes_or(unsigned fallback) const { return nodes ? nodes : fallback; }
};

// Writes `content` to --out (relative to --out-dir), or to `out` when no file was requested.
void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out.empty()) {
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
    return;
  }
  write_atomic(fs::path(cfg.out_dir) / cfg.out, content);
}

void emit_file(const RunConfig& cfg, const std::string& name, const std::string& content, std::ostream& out) {
  const fs::path p = fs::path(cfg.out_dir) / name;
  write_atomic(p, content);
  out << "wrote " << p.string() << '\n';
}

ApReal parse_r(const std::string& text, unsigned bits) {
  if (text == "inf" || text == "infinity") return ApReal::infinity(bits);
  return ApReal::parse(text, bits);
}

// Parses "re,im" or "re".
ApComplex parse_point(const std::string& text, unsigned bits) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return ApComplex(ApReal::parse(text, bits));
  return ApComplex(ApReal::parse(text.substr(0, comma), bits), ApReal::parse(text.substr(comma + 1), bits));
}

ApReal root_tolerance(const RunConfig& cfg, unsigned bits) {
  if (cfg.tol.empty()) return default_root_tolerance(bits);
  ApReal tol = ApReal::parse(cfg.tol, bits);
  if (!(tol > 0.0)) throw ConfigError("--tol must be positive");
  return tol;
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out) {
  const unsigned bits = cfg.bits_or(default_precision_bits(cfg.n));
  const ApReal alpha = ApReal::parse(cfg.alpha, bits);
  if (cfg.n < 1) throw InvalidParameter("--n must be at least 1");
  if (in_degenerate_set(cfg.n, alpha)) throw DegenerateParameter("alpha lies in {-n, ..., -1}");
  const LaguerreSpec spec = LaguerreSpec::contracted(cfg.n, alpha);
  ZeroSet zs = find_roots(monic_rescaled(spec, bits), bits, root_tolerance(cfg, bits));
  emit(cfg, zeros_csv(zs, decimal_digits(bits)), out);
  return kExitOk;
}

int cmd_curve(const RunConfig& cfg, std::ostream& out) {
  const unsigned bits = cfg.bits_or(kFallbackBits);
  const LevelCurve curve = trace_level_curve(parse_r(cfg.r, bits), cfg.nodes_or(kFallbackNodes));
  emit(cfg, curve_csv(curve, decimal_digits(bits)), out);
  return kExitOk;
}

MuRule parse_rule(const std::string& s) {
  if (s == "auto") return MuRule::Auto;
  if (s == "uniform") return MuRule::Uniform;
  if (s == "graded") return MuRule::Graded;
  throw ConfigError("--rule must be auto, uniform or graded");
}

int cmd_measure(const RunConfig& cfg, std::ostream& out) {
  const unsigned bits = cfg.bits_or(kFallbackBits);
  const MuDiscretization d = discretize(parse_r(cfg.r, bits), cfg.nodes_or(kFallbackNodes), parse_rule(cfg.rule));
  const int digits = decimal_digits(bits);
  if (d.curve.size() == d.measure.size()) {
    emit(cfg, measure_csv(d.curve, d.measure, digits), out);
  } else {
    // r = infinity: the unit mass at the origin
    std::ostringstream os;
    os << "theta,re,im,weight\n";
    for (std::size_t i = 0; i < d.measure.size(); ++i)
      os << "0," << format_real(d.measure.points[i].real(), digits) << ','
         << format_real(d.measure.points[i].imag(), digits) << ',' << format_real(d.measure.weights[i], digits) << '\n';
    emit(cfg, os.str(), out);
  }
  return kExitOk;
}

int cmd_potential(const RunConfig& cfg, std::ostream& out) {
  const unsigned bits = cfg.bits_or(kFallbackBits);
  const ApReal r = parse_r(cfg.r, bits);
  const unsigned nodes = cfg.nodes_or(kFallbackNodes);
  const DiscreteMeasure mu = discretize_mu_r(r, nodes);
  const int digits = decimal_digits(bits);
  std::optional<LevelCurve> curve;
  if (r.is_finite()) curve = trace_level_curve(r, nodes);

  std::ostringstream os;
  os << "re,im,region,potential\n";
  for (const auto& text : cfg.points) {
    const ApComplex z = parse_point(text, bits);
    const ApReal v = log_potential(mu, z);
    const char* region = curve ? to_string(locate(z, *curve)) : (z.is_zero() ? "on_curve" : "exterior");
    os << format_real(z.real(), digits) << ',' << format_real(z.imag(), digits) << ',' << region << ','
       << format_real(v, digits) << '\n';
  }
  emit(cfg, os.str(), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const unsigned bits = cfg.bits_or(kFallbackBits);
  SuiteResult res;
  if (cfg.suite == "lemma1") {
    res = lemma1_suite(parse_r(cfg.r, bits), cfg.nodes_or(kSuiteNodes));
  } else if (cfg.suite == "balayage") {
    res = balayage_suite(parse_r(cfg.r, bits), cfg.nodes_or(kSuiteNodes));
  } else if (cfg.suite == "robin") {
    const unsigned factor = cfg.grid ? cfg.grid : kDefaultLejaGridFactor;
    res = robin_suite(parse_r(cfg.r, bits), cfg.count, factor, cfg.nodes_or(kEnergyNodes));
  } else if (cfg.suite == "laguerre-identities") {
    res = laguerre_identity_suite();
  } else {
    throw ConfigError("unknown suite '" + cfg.suite + "'");
  }

  if (cfg.out.empty()) {
    out << suite_json(res) << '\n';
  } else {
    write_atomic(fs::path(cfg.out_dir) / cfg.out, suite_json(res));
    for (const auto& c : res.checks)
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " value=" << c.value << " tol=" << c.tolerance << '\n';
  }
  return res.passed() ? kExitOk : kExitFailure;
}

int cmd_leja(const RunConfig& cfg, std::ostream& out) {
  const unsigned bits = cfg.bits_or(kFallbackBits);
  const unsigned grid = cfg.grid ? cfg.grid : kDefaultLejaGridFactor * cfg.count;
  const LejaResult l = weighted_leja(parse_r(cfg.r, bits), cfg.count, grid);
  std::ostringstream os;
  os.precision(17);
  os << "k,grid_index,theta,re,im\n";
  for (std::size_t k = 0; k < l.grid_index.size(); ++k)
    os << k << ',' << l.grid_index[k] << ',' << l.theta[k] << ',' << l.measure.points[k].real().to_double() << ','
       << l.measure.points[k].imag().to_double() << '\n';
  emit(cfg, os.str(), out);
  if (!cfg.out.empty()) {
    out.precision(17);
    out << "log_t_hat=" << l.log_t_hat << " robin_estimate=" << l.robin_estimate << '\n';
  }
  return kExitOk;
}

int run_figure(const RunConfig& cfg, std::ostream& out) {
  constexpr unsigned n = 60;
  const unsigned bits = cfg.bits_or(kFigureBits);
  ApReal alpha(bits);
  if (cfg.fig == 2) {
    alpha = ApReal::parse("-60.1", bits);
  } else if (cfg.fig == 3) {
    alpha = ApReal(-60L, bits) + ApReal::parse("1e-5", bits);
  } else {
    throw ConfigError("--fig must be 2 or 3");
  }
  const unsigned nodes = cfg.nodes_or(kFallbackNodes);
  const ConvergenceReport rep = zero_distribution_report(n, alpha, nodes, bits);
  const LevelCurve curve = trace_level_curve(rep.r_eff, nodes);
  const int digits = decimal_digits(bits);
  const std::string stem = "fig" + std::to_string(cfg.fig);
  emit_file(cfg, stem + "_zeros.csv", zeros_csv(rep.zeros, digits), out);
  emit_file(cfg, stem + "_curve.csv", curve_csv(curve, digits), out);
  emit_file(cfg, stem + "_report.json", report_json(rep, digits) + "\n", out);
  return kExitOk;
}

int run_schedule(const RunConfig& cfg, std::ostream& out) {
  const unsigned pbits = 128;
  AlphaSchedule s;
  if (cfg.schedule == "generic") {
    s = make_schedule(ScheduleKind::Generic, ApReal::parse(cfg.param.empty() ? "0.1" : cfg.param, pbits));
  } else if (cfg.schedule == "exponential") {
    if (cfg.param.empty()) throw InvalidSchedule("exponential schedule needs --param r");
    s = make_schedule(ScheduleKind::Exponential, ApReal::parse(cfg.param, pbits));
  } else if (cfg.schedule == "superexponential") {
    s = make_schedule(ScheduleKind::Superexponential);
  } else {
    throw ConfigError("--schedule must be generic, exponential or superexponential");
  }
  const std::vector<unsigned> ns = cfg.ns.empty() ? std::vector<unsigned>{30, 60, 120} : cfg.ns;
  const unsigned nodes = cfg.nodes_or(kFallbackNodes);

  std::ostringstream os;
  os << "{\n\"schedule\": \"" << s.describe() << "\",\n\"reports\": [";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const unsigned base = cfg.bits_or(default_precision_bits(ns[i]));
    const ApReal alpha = s.alpha(ns[i], base);
    const ConvergenceReport rep = zero_distribution_report(ns[i], alpha, nodes, alpha.bits());
    os << (i ? ",\n" : "\n") << report_json(rep, decimal_digits(alpha.bits()));
  }
  os << "\n]\n}\n";
  emit(cfg, os.str(), out);
  return kExitOk;
}

int cmd_experiment(const RunConfig& cfg, std::ostream& out) {
  if (cfg.fig != 0 && !cfg.schedule.empty()) throw ConfigError("use either --fig or --schedule");
  if (cfg.fig != 0) return run_figure(cfg, out);
  if (!cfg.schedule.empty()) return run_schedule(cfg, out);
  throw ConfigError("experiment needs --fig or --schedule");
}

// Reorders argv as: program, subcommand, config-file tokens, remaining command-line tokens.
// Command-line values then come after the file's and win under the take-last policy.
std::vector<std::string> expand_arguments(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> config_path;
  std::vector<std::string> rest;
  std::optional<std::string> sub;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a path");
      config_path = args[++i];
      continue;
    }
    if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
      continue;
    }
    if (!sub && std::find(kSubcommands.begin(), kSubcommands.end(), a) != kSubcommands.end()) {
      sub = a;
      continue;
    }
    rest.push_back(a);
    if (!sub && std::find(kValueOptions.begin(), kValueOptions.end(), a) != kValueOptions.end() &&
        i + 1 < args.size())
      rest.push_back(args[++i]);
  }

  std::vector<std::string> out = {argc > 0 ? argv[0] : "szego"};
  if (sub) out.push_back(*sub);
  if (config_path) {
    if (!fs::is_regular_file(*config_path)) throw CLI::FileError::Missing(*config_path);
    CLI::ConfigINI ini;
    for (const CLI::ConfigItem& item : ini.from_file(*config_path)) {
      if (item.name == "++" || item.name == "--") continue;
      if (!item.parents.empty()) throw CLI::ConfigError("config file must be flat key=value, found section '" +
                                                        item.parents.front() + "'");
      if (item.name == "config") throw CLI::ConfigError("config files cannot include other config files");
      for (const auto& v : item.inputs) {
        out.push_back("--" + item.name);
        out.push_back(v);
      }
    }
  }
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

void add_common(CLI::App& app, RunConfig& cfg) {
  app.add_option("--precision", cfg.precision_bits, "working precision in bits (>= 64)")
      ->envname("SZEGO_PRECISION_BITS");
  app.add_option("--nodes", cfg.nodes, "curve nodes M (even, >= 16)");
  app.add_option("--tol", cfg.tol, "root tolerance (default 2^{-precision/2})");
  app.add_option("--out-dir", cfg.out_dir, "directory for output files")->capture_default_str();
  app.add_option("--config", "flat key=value file mirroring the long options");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Zeros of Laguerre polynomials with varying parameters and the level curves of z e^{1-z}", "szego"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  add_common(app, cfg);

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  CLI::App* zeros = sub("zeros", "contracted zeros of L_n^(alpha)(n z) as CSV re,im,residual");
  zeros->add_option("--n", cfg.n, "degree")->required();
  zeros->add_option("--alpha", cfg.alpha, "Laguerre parameter")->required();
  zeros->add_option("--out", cfg.out, "output file");

  CLI::App* curve = sub("curve", "level curve Gamma_r as CSV theta,re,im");
  curve->add_option("--r", cfg.r, "level r >= 0")->capture_default_str();
  curve->add_option("--out", cfg.out, "output file");

  CLI::App* measure = sub("measure", "discretized mu_r as CSV theta,re,im,weight");
  measure->add_option("--r", cfg.r, "level r >= 0, or inf")->capture_default_str();
  measure->add_option("--rule", cfg.rule, "auto, uniform or graded")->capture_default_str();
  measure->add_option("--out", cfg.out, "output file");

  CLI::App* potential = sub("potential", "logarithmic potential of mu_r at points");
  potential->add_option("--r", cfg.r, "level r >= 0, or inf")->capture_default_str();
  potential->add_option("--z", cfg.points, "point re,im (repeatable)")
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  potential->add_option("--out", cfg.out, "output file");

  CLI::App* verify = sub("verify", "run a verification suite; exit 1 if any check fails");
  verify->add_option("--suite", cfg.suite, "lemma1, balayage, robin or laguerre-identities")
      ->required()
      ->check(CLI::IsMember({"lemma1", "balayage", "robin", "laguerre-identities"}));
  verify->add_option("--r", cfg.r, "level r >= 0")->capture_default_str();
  verify->add_option("--count", cfg.count, "Leja points for the robin suite")->capture_default_str();
  verify->add_option("--grid", cfg.grid, "Leja grid factor for the robin suite");
  verify->add_option("--out", cfg.out, "JSON report file");

  CLI::App* leja = sub("leja", "weighted Leja points on Gamma_r");
  leja->add_option("--r", cfg.r, "level r >= 0")->capture_default_str();
  leja->add_option("--count", cfg.count, "number of points N")->capture_default_str();
  leja->add_option("--grid", cfg.grid, "grid nodes (default 16 N)");
  leja->add_option("--out", cfg.out, "output file");

  CLI::App* experiment = sub("experiment", "overlay presets or schedule convergence reports");
  experiment->add_option("--fig", cfg.fig, "preset 2 (n=60, alpha=-60.1) or 3 (alpha=-60+1e-5): zeros, Gamma_{r_eff} and report under --out-dir");
  experiment->add_option("--schedule", cfg.schedule, "generic, exponential or superexponential");
  experiment->add_option("--param", cfg.param, "c for generic, r for exponential");
  experiment->add_option("--ns", cfg.ns, "degrees, e.g. 30,60,120")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  experiment->add_option("--out", cfg.out, "JSON output file for --schedule");

  try {
    std::vector<std::string> args = expand_arguments(argc, argv);
    std::vector<const char*> raw;
    for (const auto& a : args) raw.push_back(a.c_str());
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "zeros") return cmd_zeros(cfg, out);
    if (name == "curve") return cmd_curve(cfg, out);
    if (name == "measure") return cmd_measure(cfg, out);
    if (name == "potential") return cmd_potential(cfg, out);
    if (name == "verify") return cmd_verify(cfg, out);
    if (name == "leja") return cmd_leja(cfg, out);
    if (name == "experiment") return cmd_experiment(cfg, out);
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidSchedule& e) {
    err << "invalid schedule: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateParameter& e) {
    err << "degenerate parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidTestPoint& e) {
    err << "invalid test point: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid value: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonConvergence& e) {
    err << "no convergence: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace szego
