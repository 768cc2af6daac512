#include <gtest/gtest.h>

#include <sstream>

#include "equisum/sweep.hpp"

namespace {

using namespace equisum::sweep;
using equisum::feasibility::VerdictKind;

SweepReport sweep_range(long a_min, long a_max, BPolicy policy = UpToLemma{}, unsigned threads = 1) {
  SweepConfig c;
  c.a_min = a_min;
  c.a_max = a_max;
  c.policy = policy;
  c.threads = threads;
  return run_sweep(c);
}

using Pairs = std::vector<std::pair<long, long>>;

TEST(RunSweep, SmallAIsClean) {
  const auto r = sweep_range(2, 12);
  EXPECT_TRUE(r.failing_pairs.empty());
  EXPECT_TRUE(r.conclusive);
  EXPECT_EQ(r.lemma_checks.size(), 11u);
}

TEST(RunSweep, ATwentyEight) {
  const auto r = sweep_range(28, 28);
  EXPECT_EQ(r.failing_pairs, (Pairs{{28, 40}}));
  EXPECT_EQ(r.records.size(), static_cast<std::size_t>(28 * 28 + 28 - 1 - 28));
}

TEST(RunSweep, ATwentyNineAndThirty) {
  Pairs expected;
  for (long b = 39; b <= 44; ++b) expected.emplace_back(29, b);
  for (long b = 40; b <= 47; ++b) expected.emplace_back(30, b);
  const auto r = sweep_range(29, 30, UpToLemma{}, 4);
  EXPECT_EQ(r.failing_pairs, expected);
  for (const auto& rec : r.records) {
    if (rec.verdict == VerdictKind::InequalityFails) {
      EXPECT_GE(rec.beta, 2);
      EXPECT_LE(rec.beta, rec.a - 1);
    }
  }
}

TEST(RunSweep, ExplicitBound) {
  const auto r = sweep_range(2, 2, ExplicitBound{5});
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0].b, 3);
  EXPECT_EQ(r.records[2].b, 5);
  EXPECT_FALSE(r.records[2].lemma_covered);

  const auto wide = sweep_range(2, 3, ExplicitBound{14});
  for (const auto& rec : wide.records) EXPECT_EQ(rec.lemma_covered, rec.b >= rec.a * rec.a + rec.a);
  EXPECT_TRUE(sweep_range(5, 5, ExplicitBound{4}).records.empty());
}

TEST(RunSweep, RecordsMatchClassify) {
  const auto r = sweep_range(6, 7);
  for (const auto& rec : r.records) {
    const auto v = equisum::feasibility::classify(rec.a, rec.b);
    EXPECT_EQ(rec.verdict, v.kind);
    EXPECT_EQ(rec.c, v.params->c);
    EXPECT_EQ(rec.margin_lo.has_value(), v.margin.has_value());
  }
}

TEST(RunSweep, InvalidRange) {
  EXPECT_THROW(sweep_range(1, 3), std::invalid_argument);
  EXPECT_THROW(sweep_range(5, 4), std::invalid_argument);
}

TEST(RunSweep, ParallelMatchesSerialByteForByte) {
  const auto serial = sweep_range(2, 16, UpToLemma{}, 1);
  const auto parallel = sweep_range(2, 16, UpToLemma{}, 8);
  EXPECT_EQ(emit_report(serial, Format::Csv), emit_report(parallel, Format::Csv));
  EXPECT_EQ(emit_report(serial, Format::Json), emit_report(parallel, Format::Json));
}

TEST(EmitReport, EmptyCsvIsHeaderOnly) {
  const SweepReport empty;
  EXPECT_EQ(emit_report(empty, Format::Csv), "a,b,c,alpha,beta,verdict,margin_lo,margin_hi,lemma_covered\n");
}

TEST(EmitReport, OneRecordCsv) {
  SweepReport r;
  r.records.push_back(make_record(5, 8, equisum::feasibility::classify(5, 8)));
  const std::string csv = emit_report(r, Format::Csv);
  std::istringstream in(csv);
  std::string header;
  std::string row;
  std::string extra;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_FALSE(std::getline(in, extra));
  EXPECT_EQ(row.rfind("5,8,2,4,2,InequalityHolds,0.", 0), 0u) << row;
  EXPECT_NE(row.find(",false"), std::string::npos);
}

TEST(EmitReport, MarginsAreThirtyDigitDecimals) {
  const auto rec = make_record(28, 40, equisum::feasibility::classify(28, 40));
  ASSERT_TRUE(rec.margin_lo && rec.margin_hi);
  EXPECT_EQ(rec.margin_lo->substr(0, 3), "-0.");
  EXPECT_EQ(rec.margin_lo->size(), 3u + kMarginDigits);
  EXPECT_LT(std::stod(*rec.margin_lo), std::stod(*rec.margin_hi));
}

TEST(EmitReport, JsonRoundTrip) {
  auto r = sweep_range(27, 28, ExplicitBound{60});
  r.lemma_checks.push_back({99, std::nullopt});
  r.indeterminate_pairs.emplace_back(99, 100);
  r.conclusive = false;
  const auto parsed = parse_report_json(emit_report(r, Format::Json));
  EXPECT_TRUE(parsed.same_content(r));
  EXPECT_EQ(emit_report(parsed, Format::Json), emit_report(r, Format::Json));

  const auto lemma = sweep_range(3, 4);
  EXPECT_TRUE(parse_report_json(emit_report(lemma, Format::Json)).same_content(lemma));
}

TEST(EmitReport, JsonFieldNames) {
  const std::string json = emit_report(sweep_range(2, 2, ExplicitBound{3}), Format::Json);
  for (const char* key : {"\"a\"", "\"b\"", "\"c\"", "\"alpha\"", "\"beta\"", "\"verdict\"", "\"margin_lo\"",
                          "\"margin_hi\"", "\"lemma_covered\"", "\"failing_pairs\""}) {
    EXPECT_NE(json.find(key), std::string::npos) << key;
  }
  EXPECT_THROW(parse_report_json("{}"), std::runtime_error);
}

}  // namespace
