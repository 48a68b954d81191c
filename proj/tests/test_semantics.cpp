#include <gtest/gtest.h>

#include <random>

#include "euler/corpus.hpp"
#include "euler/semantics.hpp"
#include "support.hpp"

using namespace euler;
using euler::test::D;

namespace {

Model two_element_model() {
  Model m;
  m.domain = {"x", "y"};
  m.predicates = {{"A", {"x", "y"}}, {"B", {"x"}}, {"C", {"x"}}};
  return m;
}

Inference inf(const char* text) { return parse_inference(text); }

// Every model over `predicates` and `constants` with a domain of 1..max_size
// elements; predicates are nonempty (existential import).
template <class F>
void for_each_model(const std::vector<std::string>& predicates, const std::vector<std::string>& constants,
                    unsigned max_size, F&& visit) {
  for (unsigned n = 1; n <= max_size; ++n) {
    std::vector<std::string> elems;
    for (unsigned i = 0; i < n; ++i) elems.push_back("e" + std::to_string(i));
    unsigned subsets = 1u << n;
    std::size_t pred_combos = 1;
    for (std::size_t i = 0; i < predicates.size(); ++i) pred_combos *= subsets - 1;
    std::size_t const_combos = 1;
    for (std::size_t i = 0; i < constants.size(); ++i) const_combos *= n;
    for (std::size_t pc = 0; pc < pred_combos; ++pc) {
      for (std::size_t cc = 0; cc < const_combos; ++cc) {
        Model m;
        m.domain = {elems.begin(), elems.end()};
        std::size_t code = pc;
        for (const auto& p : predicates) {
          unsigned mask = static_cast<unsigned>(code % (subsets - 1)) + 1;
          code /= subsets - 1;
          auto& ext = m.predicates[p];
          for (unsigned i = 0; i < n; ++i)
            if (mask >> i & 1u) ext.insert(elems[i]);
        }
        code = cc;
        for (const auto& c : constants) {
          m.constants[c] = elems[code % n];
          code /= n;
        }
        visit(m);
      }
    }
  }
}

std::vector<Sentence> all_sentences(const std::vector<std::string>& preds, const std::vector<std::string>& consts) {
  std::vector<Sentence> out;
  for (const auto& b : preds) {
    out.push_back(Sentence::something_is(b));
    out.push_back(Sentence::something_is_not(b));
    for (const auto& c : consts) {
      out.push_back(Sentence::const_is(c, b));
      out.push_back(Sentence::const_is_not(c, b));
    }
    for (const auto& a : preds) {
      if (a == b) continue;
      out.push_back(Sentence::all(a, b));
      out.push_back(Sentence::no(a, b));
      out.push_back(Sentence::some(a, b));
      out.push_back(Sentence::some_not(a, b));
    }
  }
  return out;
}

}  // namespace

TEST(EvalSentence, TwoElementModel) {
  auto m = two_element_model();
  EXPECT_TRUE(eval_sentence(m, Sentence::some("A", "B")));
  EXPECT_TRUE(eval_sentence(m, Sentence::all("B", "C")));
  EXPECT_FALSE(eval_sentence(m, Sentence::all("A", "C")));
  EXPECT_TRUE(eval_sentence(m, Sentence::something_is("B")));
  EXPECT_TRUE(eval_sentence(m, Sentence::all("A", "A")));
}

TEST(EvalSentence, UninterpretedNamesThrow) {
  EXPECT_THROW(eval_sentence(two_element_model(), Sentence::all("A", "Q")), UninterpretedName);
  EXPECT_THROW(eval_sentence(two_element_model(), Sentence::const_is("a", "A")), UninterpretedName);
}

TEST(Validate, EmptyPredicateViolatesImport) {
  Model m;
  m.domain = {"e"};
  m.predicates = {{"A", {}}};
  EXPECT_THROW(validate(m), InvalidModel);
}

TEST(EvalDiagram, Cases) {
  auto d = D(R"({"circles":["A","B","C"],"existentials":["x","y"],
    "relations":[["in","x","A"],["in","x","B"],["in","x","C"],["in","y","A"],["ex","y","B"],["ex","y","C"],
                 ["cr","A","B"],["cr","A","C"],["in","B","C"]]})");
  EXPECT_TRUE(eval_diagram(two_element_model(), d, {{"x", "x"}, {"y", "y"}}));
  EXPECT_THROW(eval_diagram(two_element_model(), d, {{"x", "x"}}), MissingWitness);

  auto single = D(R"({"circles":["A"]})");
  EXPECT_TRUE(eval_diagram(two_element_model(), single, {}));

  Model overlap;
  overlap.domain = {"e1", "e2"};
  overlap.predicates = {{"A", {"e1"}}, {"B", {"e1", "e2"}}};
  EXPECT_FALSE(eval_diagram(overlap, D(R"({"circles":["A","B"],"relations":[["ex","A","B"]]})"), {}));
}

TEST(Oracle, FrozenVerdicts) {
  EXPECT_TRUE(oracle_valid(inf("Some A are B; All B are C |= Some A are C")));
  EXPECT_FALSE(oracle_valid(inf("Some A are B; All B are C |= All A are C")));
  EXPECT_TRUE(oracle_valid(inf("All A are B; No B are C |= Some A are not C")));
  EXPECT_FALSE(oracle_valid(inf("No A are B; There is something C |= No A are C")));
  EXPECT_TRUE(oracle_valid(inf("All A are B |= Some A are B")));
  EXPECT_TRUE(oracle_valid(inf("|= There is something A")));
  EXPECT_FALSE(oracle_valid(inf("|= There is something not A")));
  EXPECT_TRUE(oracle_valid(inf("a is A; All A are B |= a is B")));
  EXPECT_TRUE(oracle_valid(inf("a is A; a is not B |= Some A are not B")));
  EXPECT_FALSE(oracle_valid(inf("All A are B |= All B are A")));
  EXPECT_TRUE(oracle_valid(inf("No A are B |= No B are A")));
  EXPECT_TRUE(oracle_valid(inf("All A are B; All B are C; All C are D |= All A are D")));
  EXPECT_FALSE(oracle_valid(inf("All A are B; All B are C; All C are D |= All D are A")));
}

TEST(Oracle, Consistency) {
  auto ab_in = D(R"({"circles":["A","B"],"relations":[["in","A","B"]]})");
  auto ab_ex = D(R"({"circles":["A","B"],"relations":[["ex","A","B"]]})");
  EXPECT_FALSE(oracle_consistent(std::vector<AbstractDiagram>{ab_in, ab_ex}));
  EXPECT_TRUE(oracle_consistent(std::vector<AbstractDiagram>{ab_in}));
  auto s1 = D(R"({"circles":["A","B"],"existentials":["x"],"relations":[["in","x","A"],["in","x","B"],["cr","A","B"]]})");
  auto s2 = D(R"({"circles":["B","C"],"relations":[["in","B","C"]]})");
  EXPECT_TRUE(oracle_consistent(std::vector<AbstractDiagram>{s1, s2}));
  EXPECT_FALSE(oracle_consistent(std::vector<Sentence>{Sentence::const_is("a", "A"), Sentence::const_is_not("a", "A")}));
}

TEST(Oracle, VocabularyBound) {
  EXPECT_THROW(oracle_valid(inf("All A are B; All C are D |= All A are E")), VocabularyTooLarge);
}

// The oracle agrees with plain model enumeration on every inference with at
// most two premises over two predicates and one constant. Domains of up to
// four elements cover every cell over two predicates.
TEST(Oracle, AgreesWithBruteForceModels) {
  std::vector<std::string> preds{"A", "B"}, consts{"a"};
  auto sentences = all_sentences(preds, consts);
  std::vector<Model> models;
  for_each_model(preds, consts, 4, [&](const Model& m) { models.push_back(m); });
  std::vector<std::vector<bool>> truth(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i)
    for (const auto& m : models) truth[i].push_back(eval_sentence(m, sentences[i]));

  std::size_t checked = 0;
  auto brute = [&](const std::vector<std::size_t>& prem, std::size_t concl) {
    for (std::size_t k = 0; k < models.size(); ++k) {
      bool ok = true;
      for (auto p : prem) ok = ok && truth[p][k];
      if (ok && !truth[concl][k]) return false;
    }
    return true;
  };
  for (std::size_t c = 0; c < sentences.size(); ++c) {
    for (std::size_t i = 0; i <= sentences.size(); ++i) {
      for (std::size_t j = i; j <= sentences.size(); ++j) {
        std::vector<std::size_t> prem;
        if (i < sentences.size()) prem.push_back(i);
        if (j < sentences.size() && j != i) prem.push_back(j);
        Inference in;
        for (auto p : prem) in.premises.push_back(sentences[p]);
        in.conclusion = sentences[c];
        ASSERT_EQ(oracle_valid(in), brute(prem, c)) << to_string(in);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 2000u);
}

// Truth in the fragment depends only on the cell profile.
TEST(Profile, RandomModelsAgreeWithTheirProfiles) {
  std::mt19937_64 rng(2024);
  std::vector<std::string> preds{"A", "B", "C"};
  for (int trial = 0; trial < 3000; ++trial) {
    Model m;
    unsigned n = 1 + rng() % 5;
    for (unsigned i = 0; i < n; ++i) m.domain.insert("e" + std::to_string(i));
    for (const auto& p : preds) {
      auto& ext = m.predicates[p];
      while (ext.empty())
        for (const auto& e : m.domain)
          if (rng() % 2) ext.insert(e);
    }
    m.constants["a"] = "e" + std::to_string(rng() % n);
    m.constants["b"] = "e" + std::to_string(rng() % n);
    auto profile = profile_of(m, preds);
    Sentence s = random_sentence(rng, 3, 2);
    ASSERT_EQ(eval_sentence(m, s), profile_eval_sentence(profile, s)) << to_string(s);

    // A diagram holds on the profile iff some witness makes it hold on the
    // model. Points must denote distinct elements, which a profile cannot
    // see, so the diagrams carry a single point.
    auto d = random_diagram(rng, preds, {}, {"x"});
    bool any = false;
    for (const auto& e : m.domain) any = any || eval_diagram(m, d, {{"x", e}});
    ASSERT_EQ(any, profile_satisfies_diagram(profile, d));
  }
}

TEST(CellConstraintsTest, ProfileSetOfSingleSentence) {
  CellConstraints c({"A", "B"});
  c.add(Sentence::all("A", "B"));
  // Cells: bit0 = A, bit1 = B. A∧¬B (cell 1) is forbidden; A and B are inhabited.
  for (const auto& [inhabited, constants] : c.profile_set()) {
    EXPECT_FALSE(inhabited & (1u << 1));
    EXPECT_TRUE(inhabited & (1u << 3));
    EXPECT_TRUE(constants.empty());
  }
  EXPECT_TRUE(c.satisfiable());
}

TEST(ExtractModel, PointsOnly) {
  auto d = D(R"({"circles":["A","B","C"],"existentials":["x","y"],
    "relations":[["in","x","A"],["in","x","B"],["in","x","C"],["in","y","A"],["ex","y","B"],["ex","y","C"],
                 ["cr","A","B"],["cr","A","C"],["in","B","C"]]})");
  auto em = extract_model(d);
  EXPECT_EQ(em.model, two_element_model());
}

TEST(ExtractModel, WitnessesForPointFreeCircles) {
  auto em = extract_model(D(R"({"circles":["A","B"],"relations":[["ex","A","B"]]})"));
  EXPECT_EQ(em.model.domain, (std::set<std::string>{"wA", "wB"}));
  EXPECT_EQ(em.model.predicates.at("A"), std::set<std::string>{"wA"});
  EXPECT_EQ(em.model.predicates.at("B"), std::set<std::string>{"wB"});
}

TEST(ExtractModel, WitnessForPointFreeCircle) {
  auto d = D(R"({"circles":["A","B","C"],"existentials":["x","y"],
    "relations":[["in","y","A"],["in","y","C"],["ex","y","B"],["in","x","C"],["ex","x","A"],["ex","x","B"],
                 ["cr","A","C"],["ex","A","B"],["cr","B","C"]]})");
  auto m = extract_model(d).model;
  EXPECT_EQ(m.domain, (std::set<std::string>{"wB", "x", "y"}));
  EXPECT_EQ(m.predicates.at("A"), std::set<std::string>{"y"});
  EXPECT_EQ(m.predicates.at("B"), std::set<std::string>{"wB"});
  EXPECT_EQ(m.predicates.at("C"), (std::set<std::string>{"x", "y"}));
  EXPECT_TRUE(eval_sentence(m, Sentence::no("A", "B")));
  EXPECT_TRUE(eval_sentence(m, Sentence::something_is("C")));
  EXPECT_FALSE(eval_sentence(m, Sentence::no("A", "C")));
}
