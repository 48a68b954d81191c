#include <gtest/gtest.h>

#include "euler/counter.hpp"
#include "euler/semantics.hpp"
#include "support.hpp"

using namespace euler;
using euler::test::D;
using euler::test::Rs;

TEST(Candidates, AllAC) {
  NameSupply y("y");
  NameSupply x("x");
  auto cands = counter_candidates(canonical_diagram(Sentence::all("A", "C"), x), y);
  ASSERT_FALSE(cands.empty());
  EXPECT_EQ(cands.front().relations(), Rs({"y1⊑A", "y1⊢⊣C", "A▷◁C"}));
}

TEST(Candidates, NoAC) {
  NameSupply y("y");
  NameSupply x("x");
  auto cands = counter_candidates(canonical_diagram(Sentence::no("A", "C"), x), y);
  ASSERT_FALSE(cands.empty());
  EXPECT_EQ(cands.front().relations(), Rs({"y1⊑A", "y1⊑C", "A▷◁C"}));
}

TEST(Candidates, CrossingAloneIsNotFalsifiable) {
  NameSupply y("y");
  EXPECT_THROW(counter_candidates(D(R"({"circles":["A","B"],"relations":[["cr","A","B"]]})"), y),
               NoFalsifiableRelation);
}

TEST(Candidates, ExistentialAndConstantCases) {
  NameSupply y("y");
  auto some = D(R"({"circles":["A","B"],"existentials":["x"],"relations":[["in","x","A"],["ex","x","B"],["cr","A","B"]]})");
  auto c1 = counter_candidates(some, y);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].relations(), Rs({"A⊑B"}));
  auto is = D(R"({"circles":["B"],"constants":["a"],"relations":[["in","a","B"]]})");
  auto c2 = counter_candidates(is, y);
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2[0].relations(), Rs({"a⊢⊣B"}));
}

TEST(Ipi, PointInCrossingRegionHasThreePlacements) {
  auto es3 = D(R"({"circles":["A","B","C"],"existentials":["y"],
    "relations":[["in","y","A"],["in","y","C"],["ex","y","B"],["cr","A","C"],["ex","A","B"],["cr","B","C"]]})");
  auto out = ipi_insert(es3, DiagramObject::existential("x"), {{"C", RelationTag::Inside}});
  ASSERT_EQ(out.size(), 3u);
  auto first = out[0].relations();
  for (const auto& r : Rs({"x⊑C", "x⊢⊣A", "x⊢⊣B"})) EXPECT_TRUE(first.count(r)) << to_string(r);
  std::set<std::set<std::string>> regions;
  for (const auto& d : out) {
    std::set<std::string> in;
    for (const auto& c : d.circles())
      if (holds(d, EulRelation::inside("x", c))) in.insert(c);
    regions.insert(in);
  }
  EXPECT_EQ(regions, (std::set<std::set<std::string>>{{"C"}, {"A", "C"}, {"B", "C"}}));
}

TEST(Ipi, FullyKnownProfileIsSingleton) {
  auto d = D(R"({"circles":["A","B"],"relations":[["ex","A","B"]]})");
  auto out = ipi_insert(d, DiagramObject::existential("x"), {{"A", RelationTag::Inside}, {"B", RelationTag::Exclusion}});
  EXPECT_EQ(out.size(), 1u);
}

TEST(Relational, SmallDiagrams) {
  NameSupply x("x");
  for (auto s : {Sentence::all("A", "B"), Sentence::no("A", "B"), Sentence::some("A", "B"), Sentence::some_not("A", "B")})
    EXPECT_TRUE(is_relational(canonical_diagram(s, x)));
  EXPECT_TRUE(is_relational(D(R"({"circles":["A"],"existentials":["x"],"relations":[["in","x","A"]]})")));
  auto three = D(R"({"circles":["A","B","C"],"existentials":["x"],
    "relations":[["in","x","A"],["in","x","B"],["in","x","C"],["cr","A","B"],["cr","A","C"],["cr","B","C"]]})");
  EXPECT_FALSE(is_relational(three));
}

TEST(Disprove, BarbaraConverseWithoutIpi) {
  auto inf = parse_inference("Some A are B; All B are C |= All A are C");
  auto r = disprove(inf);
  ASSERT_EQ(r.status, DisproveStatus::Disproved);
  const auto& cm = *r.counter_model;
  EXPECT_EQ(cm.proof.count(Rule::Ipi), 0u);
  auto rel = cm.proof.conclusion().relations();
  for (const auto& e : Rs({"x1⊑A", "x1⊑B", "x1⊑C", "B⊑C", "y1⊑A", "y1⊢⊣C", "y1⊢⊣B"}))
    EXPECT_TRUE(rel.count(e)) << to_string(e);
  EXPECT_EQ(cm.model.model.domain.size(), 2u);
  for (const auto& p : inf.premises) EXPECT_TRUE(eval_sentence(cm.model.model, p));
  EXPECT_FALSE(eval_sentence(cm.model.model, inf.conclusion));
}

TEST(Disprove, DisjointWitnessNeedsOneIpi) {
  auto inf = parse_inference("No A are B; There is something C |= No A are C");
  auto r = disprove(inf);
  ASSERT_EQ(r.status, DisproveStatus::Disproved);
  const auto& p = r.counter_model->proof;
  ASSERT_EQ(p.count(Rule::Ipi), 1u);
  for (const auto& n : p.nodes()) {
    if (n.rule != Rule::Ipi) continue;
    EXPECT_EQ(n.detail, "x1: x1⊑C, x1⊢⊣A, x1⊢⊣B");
  }
  for (const auto& s : inf.premises) EXPECT_TRUE(eval_sentence(r.counter_model->model.model, s));
  EXPECT_FALSE(eval_sentence(r.counter_model->model.model, inf.conclusion));
}

TEST(Disprove, ValidInferenceCannotBeDisproved) {
  EXPECT_EQ(disprove(parse_inference("Some A are B; All B are C |= Some A are C")).status,
            DisproveStatus::CannotDisprove);
}

TEST(Disprove, SomethingIsHasNoCounterDiagram) {
  EXPECT_EQ(disprove(parse_inference("|= There is something A")).status, DisproveStatus::CannotDisprove);
}

TEST(Disprove, SomethingNot) {
  auto inf = parse_inference("All A are B |= There is something not B");
  auto r = disprove(inf);
  ASSERT_EQ(r.status, DisproveStatus::Disproved);
  EXPECT_FALSE(eval_sentence(r.counter_model->model.model, inf.conclusion));
}
