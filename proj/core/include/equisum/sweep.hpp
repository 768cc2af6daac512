#pragma once

// Scans (a, b) ranges, classifies every pair and renders the results as CSV
// or JSON. Output is independent of thread count and evaluation order.

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "equisum/feasibility.hpp"

namespace equisum::sweep {

/// b ranges over (a, a^2 + a - 1]; larger b is covered by the lemma bound.
struct UpToLemma {
  friend bool operator==(const UpToLemma&, const UpToLemma&) = default;
};

/// b ranges over (a, b_max].
struct ExplicitBound {
  long b_max = 0;
  friend bool operator==(const ExplicitBound&, const ExplicitBound&) = default;
};

using BPolicy = std::variant<UpToLemma, ExplicitBound>;

struct SweepConfig {
  long a_min = 2;
  long a_max = 2;
  BPolicy policy = UpToLemma{};
  realnum::RefinementSchedule schedule;
  /// Worker threads; 0 picks std::thread::hardware_concurrency(). Not echoed
  /// into reports.
  unsigned threads = 0;
};

struct SweepRecord {
  long a = 0;
  long b = 0;
  long c = 0;
  long alpha = 0;
  long beta = 0;
  feasibility::VerdictKind verdict = feasibility::VerdictKind::Indeterminate;
  std::optional<std::string> margin_lo;
  std::optional<std::string> margin_hi;
  bool lemma_covered = false;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct LemmaCheck {
  long a = 0;
  std::optional<bool> holds;

  friend bool operator==(const LemmaCheck&, const LemmaCheck&) = default;
};

struct SweepReport {
  long a_min = 0;
  long a_max = 0;
  BPolicy policy = UpToLemma{};
  long precision_floor_exp = 0;

  std::vector<SweepRecord> records;
  std::vector<std::pair<long, long>> failing_pairs;
  std::vector<std::pair<long, long>> indeterminate_pairs;
  std::vector<LemmaCheck> lemma_checks;
  /// False if any pair or lemma check came back Indeterminate.
  bool conclusive = true;

  /// Wall time; never serialized.
  std::chrono::milliseconds elapsed{0};

  /// Compares everything except `elapsed`.
  bool same_content(const SweepReport& other) const;
};

/// Digits after the decimal point in serialized margins.
inline constexpr int kMarginDigits = 30;

SweepRecord make_record(long a, long b, const feasibility::FeasibilityVerdict& verdict);

SweepReport run_sweep(const SweepConfig& config);

enum class Format { Csv, Json };

std::string emit_report(const SweepReport& r, Format format);

/// Inverse of emit_report(r, Format::Json). Throws std::runtime_error on
/// malformed input.
SweepReport parse_report_json(const std::string& text);

}  // namespace equisum::sweep
