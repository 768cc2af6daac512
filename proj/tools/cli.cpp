#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "equisum/constructions.hpp"
#include "equisum/feasibility.hpp"
#include "equisum/mixednorm.hpp"
#include "equisum/sweep.hpp"

namespace equisum::cli {

namespace {

using feasibility::FeasibilityVerdict;
using feasibility::VerdictKind;
using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string subcommand;
  long a = 0;
  long b = 0;
  std::string out_path;
  std::string in_path;
  double rel_tol = mixednorm::kDefaultRelTol;
  long a_min = 2;
  long a_max = 2;
  std::optional<long> b_max;
  std::string format = "csv";
  unsigned threads = 0;
  std::optional<long> precision_floor;
};

realnum::RefinementSchedule schedule_for(const CliConfig& cfg) {
  realnum::RefinementSchedule s;
  if (cfg.precision_floor) {
    s.floor_exp = *cfg.precision_floor;
  } else if (const char* env = std::getenv(kPrecisionFloorEnv); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      s.floor_exp = std::stol(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string(kPrecisionFloorEnv) + " must be an integer, got '" + env + "'");
    }
  }
  if (s.floor_exp < 1 || s.floor_exp > 100000) throw UsageError("precision floor exponent must lie in [1, 100000]");
  return s;
}

ojson verdict_json(long a, long b, const FeasibilityVerdict& v) {
  ojson j = ojson::object();
  j["a"] = a;
  j["b"] = b;
  j["swapped"] = v.swapped;
  j["verdict"] = feasibility::to_string(v.kind);
  if (v.params) {
    j["c"] = v.params->c;
    j["alpha"] = v.params->alpha;
    j["beta"] = v.params->beta;
  } else {
    j["c"] = nullptr;
    j["alpha"] = nullptr;
    j["beta"] = nullptr;
  }
  if (v.margin) {
    j["margin_lo"] = realnum::to_decimal(v.margin->lo(), sweep::kMarginDigits, realnum::Rounding::Down);
    j["margin_hi"] = realnum::to_decimal(v.margin->hi(), sweep::kMarginDigits, realnum::Rounding::Up);
  } else {
    j["margin_lo"] = nullptr;
    j["margin_hi"] = nullptr;
  }
  const long lo = std::min(a, b);
  const long hi = std::max(a, b);
  j["lemma_covered"] = lo >= 2 && hi > lo && feasibility::lemma_applies(lo, hi);
  return j;
}

/// Writes to --out when given, else to `out`. Returns false on I/O failure.
bool emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream f(path, std::ios::binary);
  if (!(f << text)) {
    err << "equisum: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int cmd_construct(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto schedule = schedule_for(cfg);
  try {
    const auto result = constructions::construct(cfg.a, cfg.b, schedule);
    err << "construct: " << result.point_set.size() << " points (" << result.point_set.provenance() << ")\n";
    return emit(mixednorm::to_json(result.point_set), cfg.out_path, out, err) ? kExitOk : kExitIo;
  } catch (const constructions::InfeasibleConstruction& e) {
    ojson j = ojson::object();
    j["error"] = "InfeasibleConstruction";
    j["detail"] = verdict_json(cfg.a, cfg.b, e.verdict());
    out << j.dump() << "\n";
    err << "construct: " << e.what() << "\n";
    return kExitInfeasible;
  }
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.in_path, std::ios::binary);
  if (!in) {
    err << "verify: cannot read " << cfg.in_path << "\n";
    return kExitData;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto set = mixednorm::point_set_from_json(buf.str());
    const auto report = mixednorm::verify_equilateral(set, cfg.rel_tol);
    out << mixednorm::to_json(report);
    return report.pass ? kExitOk : kExitVerifyFailed;
  } catch (const mixednorm::ParseError& e) {
    err << "verify: " << e.what() << "\n";
    return kExitData;
  }
}

int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const auto verdict = feasibility::classify(cfg.a, cfg.b, schedule_for(cfg));
  out << verdict_json(cfg.a, cfg.b, verdict).dump() << "\n";
  return verdict.conclusive() ? kExitOk : kExitIndeterminate;
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.a_min < 2 || cfg.a_max < cfg.a_min) throw UsageError("sweep: need 2 <= --a-min <= --a-max");
  sweep::SweepConfig sc;
  sc.a_min = cfg.a_min;
  sc.a_max = cfg.a_max;
  if (cfg.b_max) {
    sc.policy = sweep::ExplicitBound{*cfg.b_max};
  }
  sc.schedule = schedule_for(cfg);
  sc.threads = cfg.threads;
  const auto report = sweep::run_sweep(sc);
  err << "sweep: " << report.records.size() << " pairs, " << report.failing_pairs.size() << " failing, "
      << report.indeterminate_pairs.size() << " indeterminate, " << report.elapsed.count() << " ms\n";
  const auto format = cfg.format == "json" ? sweep::Format::Json : sweep::Format::Csv;
  if (!emit(sweep::emit_report(report, format), cfg.out_path, out, err)) return kExitIo;
  return report.conclusive ? kExitOk : kExitIndeterminate;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilateral sets in l1 sums of Euclidean spaces", "equisum"};
  app.require_subcommand(1);
  CliConfig cfg;

  app.add_option("--precision-floor", cfg.precision_floor,
                 "Refinement floor exponent k (eps_floor = 2^-k); overrides EQUISUM_PRECISION_FLOOR");

  auto* construct = app.add_subcommand("construct", "Build an equilateral set of size a+b+1 and write it as JSON");
  construct->add_option("--a", cfg.a, "Dimension of the first factor")->required()->check(CLI::PositiveNumber);
  construct->add_option("--b", cfg.b, "Dimension of the second factor")->required()->check(CLI::PositiveNumber);
  construct->add_option("--out", cfg.out_path, "Output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Check that a point-set JSON file is equilateral");
  verify->add_option("in,--in", cfg.in_path, "Point-set JSON file")->required();
  verify->add_option("--rel-tol", cfg.rel_tol, "Relative tolerance")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Classify (a, b) and print the certified verdict");
  check->add_option("--a", cfg.a, "Dimension of the first factor")->required()->check(CLI::PositiveNumber);
  check->add_option("--b", cfg.b, "Dimension of the second factor")->required()->check(CLI::PositiveNumber);

  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every pair in a range of a");
  sweep_cmd->add_option("--a-min", cfg.a_min, "Smallest a (>= 2)")->required();
  sweep_cmd->add_option("--a-max", cfg.a_max, "Largest a")->required();
  sweep_cmd->add_option("--b-max", cfg.b_max, "Scan b up to this bound instead of up to a^2+a-1");
  sweep_cmd->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--out", cfg.out_path, "Output file (default: stdout)");
  sweep_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "equisum: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (check->parsed()) return cmd_check(cfg, out, err);
    return cmd_sweep(cfg, out, err);
  } catch (const UsageError& e) {
    err << "equisum: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace equisum::cli
