#include <gtest/gtest.h>

#include "euler/check.hpp"
#include "euler/corpus.hpp"

using namespace euler;

TEST(Check, SyllogismVerdicts) {
  auto ex2 = check(parse_inference("Some A are B; All B are C |= Some A are C"));
  EXPECT_EQ(ex2.verdict, Verdict::Valid);
  EXPECT_TRUE(ex2.proof.has_value());
  EXPECT_FALSE(ex2.defect);

  auto ex4 = check(parse_inference("Some A are B; All B are C |= All A are C"));
  EXPECT_EQ(ex4.verdict, Verdict::Invalid);
  ASSERT_TRUE(ex4.counter.has_value());
  EXPECT_EQ(ex4.counter->model.model.domain.size(), 2u);

  auto ex6 = check(parse_inference("No A are B; There is something C |= No A are C"));
  EXPECT_EQ(ex6.verdict, Verdict::Invalid);
  EXPECT_EQ(ex6.counter->proof.count(Rule::Ipi), 1u);
}

TEST(Check, OracleCanBeSkipped) {
  CheckOptions o;
  o.use_oracle = false;
  auto r = check(parse_inference("All A are B |= Some A are B"), o);
  EXPECT_FALSE(r.oracle_valid.has_value());
  EXPECT_EQ(r.verdict, Verdict::Valid);
}

TEST(Check, SomethingNotIsRefutedByASingleCircle) {
  auto r = check(parse_inference("|= There is something not A"));
  EXPECT_EQ(r.verdict, Verdict::Invalid);
  ASSERT_TRUE(r.oracle_valid.has_value());
  EXPECT_FALSE(*r.oracle_valid);
}

TEST(Check, InconsistentPremisesAreUnknown) {
  auto r = check(parse_inference("a is A; a is not A |= All B are C"));
  EXPECT_EQ(r.verdict, Verdict::Unknown);
  EXPECT_FALSE(r.defect);
  ASSERT_TRUE(r.oracle_valid.has_value());
  EXPECT_TRUE(*r.oracle_valid);
}

// Small exhaustive agreement run; the large one lives in the acceptance suite.
TEST(Check, AgreesWithOracleOnSmallCorpus) {
  CorpusOptions o;
  o.circles = 3;
  o.constants = 1;
  o.premises = 2;
  o.count = 200;
  o.seed = 1;
  o.consistent_only = true;
  for (const auto& rec : generate_corpus(o)) {
    auto r = check(rec.inference);
    EXPECT_FALSE(r.defect) << to_string(rec.inference) << ": " << r.note;
    if (r.verdict == Verdict::Valid) {
      EXPECT_TRUE(rec.oracle_valid) << to_string(rec.inference);
    }
    if (r.verdict == Verdict::Invalid) {
      EXPECT_FALSE(rec.oracle_valid) << to_string(rec.inference);
    }
  }
}
