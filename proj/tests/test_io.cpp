#include <gtest/gtest.h>

#include "euler/check.hpp"
#include "euler/io.hpp"
#include "support.hpp"

using namespace euler;
using euler::test::D;

TEST(DiagramJson, RoundTripSorted) {
  auto d = D(R"({"circles":["C","A","B"],"existentials":["x"],
    "relations":[["in","B","C"],["cr","C","A"],["in","x","C"],["cr","A","B"],["in","x","B"],["in","x","A"]]})");
  auto j = io::to_json(d);
  EXPECT_EQ(j.dump(),
            R"({"circles":["A","B","C"],"constants":[],"existentials":["x"],"relations":[["cr","A","B"],["cr","A","C"],["in","B","C"],["in","x","A"],["in","x","B"],["in","x","C"]]})");
  EXPECT_EQ(io::diagram_from_json(j), d);
}

TEST(DiagramJson, Errors) {
  EXPECT_THROW(D(R"({"circles":["A"],"relations":[["on","A","A"]]})"), FormatError);
  EXPECT_THROW(D(R"({"circles":"A"})"), FormatError);
  EXPECT_THROW(D(R"({"circles":["A"],"relations":[["in","A"]]})"), FormatError);
  EXPECT_THROW(D(R"({"circles":["A"],"shapes":[]})"), FormatError);
  EXPECT_THROW(D(R"([])"), FormatError);
  EXPECT_THROW(D(R"({"circles":["A","B"]})"), WellFormednessError);
}

TEST(ModelJson, RoundTrip) {
  Model m;
  m.domain = {"e1", "e2"};
  m.constants = {{"a", "e1"}};
  m.predicates = {{"A", {"e1", "e2"}}};
  auto j = io::to_json(m);
  EXPECT_EQ(j.dump(), R"({"domain":["e1","e2"],"constants":{"a":"e1"},"predicates":{"A":["e1","e2"]}})");
  EXPECT_EQ(io::model_from_json(j), m);
  EXPECT_THROW(io::model_from_json(io::Json::parse("{}")), FormatError);
}

TEST(ReportJson, ValidAndInvalid) {
  auto valid = io::to_json(check(parse_inference("Some A are B; All B are C |= Some A are C")));
  EXPECT_EQ(valid["verdict"], "valid");
  ASSERT_TRUE(valid.contains("proof"));
  int roots = 0;
  for (const auto& n : valid["proof"]["nodes"]) roots += n.value("conclusion", false);
  EXPECT_EQ(roots, 1);
  EXPECT_EQ(valid["oracle_verdict"], true);
  EXPECT_FALSE(valid.contains("counter_model"));

  auto invalid = io::to_json(check(parse_inference("No A are B; There is something C |= No A are C")));
  EXPECT_EQ(invalid["verdict"], "invalid");
  EXPECT_TRUE(invalid.contains("counter_model"));
  EXPECT_EQ(invalid["falsified"], "No A are C");
  bool has_ipi = false;
  for (const auto& n : invalid["counter_proof"]["nodes"]) has_ipi = has_ipi || n["rule"] == "ipi";
  EXPECT_TRUE(has_ipi);
  EXPECT_TRUE(invalid["timings"].is_object());
}
