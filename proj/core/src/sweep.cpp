#include "equisum/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace equisum::sweep {

using feasibility::FeasibilityVerdict;
using feasibility::VerdictKind;
using realnum::Rounding;

bool SweepReport::same_content(const SweepReport& o) const {
  return a_min == o.a_min && a_max == o.a_max && policy == o.policy && precision_floor_exp == o.precision_floor_exp &&
         records == o.records && failing_pairs == o.failing_pairs && indeterminate_pairs == o.indeterminate_pairs &&
         lemma_checks == o.lemma_checks && conclusive == o.conclusive;
}

SweepRecord make_record(long a, long b, const FeasibilityVerdict& verdict) {
  SweepRecord r;
  r.a = a;
  r.b = b;
  if (verdict.params) {
    r.c = verdict.params->c;
    r.alpha = verdict.params->alpha;
    r.beta = verdict.params->beta;
  }
  r.verdict = verdict.kind;
  if (verdict.margin) {
    r.margin_lo = realnum::to_decimal(verdict.margin->lo(), kMarginDigits, Rounding::Down);
    r.margin_hi = realnum::to_decimal(verdict.margin->hi(), kMarginDigits, Rounding::Up);
  }
  r.lemma_covered = a >= 2 && b > a && feasibility::lemma_applies(a, b);
  return r;
}

namespace {

long upper_b(long a, const BPolicy& policy) {
  if (const auto* e = std::get_if<ExplicitBound>(&policy)) return e->b_max;
  return a * a + a - 1;
}

/// Runs task(i) for i in [0, n) on `threads` workers.
template <class Task>
void parallel_for(std::size_t n, unsigned threads, Task&& task) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  workers.reserve(count);
  for (unsigned t = 0; t < count; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) task(i);
    });
  }
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
  if (config.a_min < 2 || config.a_max < config.a_min) {
    throw std::invalid_argument("run_sweep: need 2 <= a_min <= a_max");
  }
  const auto started = std::chrono::steady_clock::now();

  std::vector<std::pair<long, long>> pairs;
  for (long a = config.a_min; a <= config.a_max; ++a) {
    for (long b = a + 1; b <= upper_b(a, config.policy); ++b) pairs.emplace_back(a, b);
  }

  SweepReport report;
  report.a_min = config.a_min;
  report.a_max = config.a_max;
  report.policy = config.policy;
  report.precision_floor_exp = config.schedule.floor_exp;
  report.records.resize(pairs.size());
  report.lemma_checks.resize(static_cast<std::size_t>(config.a_max - config.a_min + 1));

  const unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_lemma = report.lemma_checks.size();
  // Each task writes only its own slot, so the merge is the identity.
  parallel_for(pairs.size() + n_lemma, threads, [&](std::size_t i) {
    if (i < n_lemma) {
      const long a = config.a_min + static_cast<long>(i);
      report.lemma_checks[i] = {a, feasibility::lemma_certificate(a, config.schedule).holds()};
      return;
    }
    const auto [a, b] = pairs[i - n_lemma];
    report.records[i - n_lemma] = make_record(a, b, feasibility::classify(a, b, config.schedule));
  });

  for (const auto& r : report.records) {
    if (r.verdict == VerdictKind::InequalityFails) report.failing_pairs.emplace_back(r.a, r.b);
    if (r.verdict == VerdictKind::Indeterminate) report.indeterminate_pairs.emplace_back(r.a, r.b);
  }
  const bool lemma_ok = std::all_of(report.lemma_checks.begin(), report.lemma_checks.end(),
                                    [](const LemmaCheck& c) { return c.holds.has_value(); });
  report.conclusive = report.indeterminate_pairs.empty() && lemma_ok;
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  return report;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson optional_string(const std::optional<std::string>& s) { return s ? ojson(*s) : ojson(nullptr); }

ojson pairs_json(const std::vector<std::pair<long, long>>& pairs) {
  ojson arr = ojson::array();
  for (const auto& [a, b] : pairs) arr.push_back(ojson::array({a, b}));
  return arr;
}

std::vector<std::pair<long, long>> pairs_from(const ojson& arr) {
  std::vector<std::pair<long, long>> out;
  for (const auto& p : arr) out.emplace_back(p.at(0).get<long>(), p.at(1).get<long>());
  return out;
}

std::optional<std::string> string_or_null(const ojson& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

}  // namespace

std::string emit_report(const SweepReport& r, Format format) {
  if (format == Format::Csv) {
    std::ostringstream os;
    os << "a,b,c,alpha,beta,verdict,margin_lo,margin_hi,lemma_covered\n";
    for (const auto& rec : r.records) {
      os << rec.a << ',' << rec.b << ',' << rec.c << ',' << rec.alpha << ',' << rec.beta << ','
         << feasibility::to_string(rec.verdict) << ',' << rec.margin_lo.value_or("") << ','
         << rec.margin_hi.value_or("") << ',' << (rec.lemma_covered ? "true" : "false") << '\n';
    }
    return os.str();
  }

  ojson config = ojson::object();
  config["a_min"] = r.a_min;
  config["a_max"] = r.a_max;
  if (const auto* e = std::get_if<ExplicitBound>(&r.policy)) {
    config["b_policy"] = "Explicit";
    config["b_max"] = e->b_max;
  } else {
    config["b_policy"] = "UpToLemma";
    config["b_max"] = nullptr;
  }
  config["precision_floor_exp"] = r.precision_floor_exp;

  ojson records = ojson::array();
  for (const auto& rec : r.records) {
    ojson j = ojson::object();
    j["a"] = rec.a;
    j["b"] = rec.b;
    j["c"] = rec.c;
    j["alpha"] = rec.alpha;
    j["beta"] = rec.beta;
    j["verdict"] = feasibility::to_string(rec.verdict);
    j["margin_lo"] = optional_string(rec.margin_lo);
    j["margin_hi"] = optional_string(rec.margin_hi);
    j["lemma_covered"] = rec.lemma_covered;
    records.push_back(std::move(j));
  }

  ojson lemma = ojson::array();
  for (const auto& c : r.lemma_checks) {
    ojson j = ojson::object();
    j["a"] = c.a;
    j["holds"] = c.holds ? ojson(*c.holds) : ojson(nullptr);
    lemma.push_back(std::move(j));
  }

  ojson out = ojson::object();
  out["config"] = std::move(config);
  out["conclusive"] = r.conclusive;
  out["failing_pairs"] = pairs_json(r.failing_pairs);
  out["indeterminate_pairs"] = pairs_json(r.indeterminate_pairs);
  out["lemma_checks"] = std::move(lemma);
  out["records"] = std::move(records);
  return out.dump(1) + "\n";
}

SweepReport parse_report_json(const std::string& text) {
  try {
    const ojson j = ojson::parse(text);
    SweepReport r;
    const ojson& config = j.at("config");
    r.a_min = config.at("a_min").get<long>();
    r.a_max = config.at("a_max").get<long>();
    const auto policy = config.at("b_policy").get<std::string>();
    if (policy == "Explicit") {
      r.policy = ExplicitBound{config.at("b_max").get<long>()};
    } else if (policy == "UpToLemma") {
      r.policy = UpToLemma{};
    } else {
      throw std::runtime_error("unknown b_policy '" + policy + "'");
    }
    r.precision_floor_exp = config.at("precision_floor_exp").get<long>();
    r.conclusive = j.at("conclusive").get<bool>();
    r.failing_pairs = pairs_from(j.at("failing_pairs"));
    r.indeterminate_pairs = pairs_from(j.at("indeterminate_pairs"));
    for (const auto& c : j.at("lemma_checks")) {
      LemmaCheck check;
      check.a = c.at("a").get<long>();
      if (!c.at("holds").is_null()) check.holds = c.at("holds").get<bool>();
      r.lemma_checks.push_back(check);
    }
    for (const auto& rec : j.at("records")) {
      SweepRecord s;
      s.a = rec.at("a").get<long>();
      s.b = rec.at("b").get<long>();
      s.c = rec.at("c").get<long>();
      s.alpha = rec.at("alpha").get<long>();
      s.beta = rec.at("beta").get<long>();
      const auto kind = feasibility::verdict_kind_from_string(rec.at("verdict").get<std::string>());
      if (!kind) throw std::runtime_error("unknown verdict in report");
      s.verdict = *kind;
      s.margin_lo = string_or_null(rec.at("margin_lo"));
      s.margin_hi = string_or_null(rec.at("margin_hi"));
      s.lemma_covered = rec.at("lemma_covered").get<bool>();
      r.records.push_back(std::move(s));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed sweep report: ") + e.what());
  }
}

}  // namespace equisum::sweep
