#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "euler/corpus.hpp"
#include "euler/fol.hpp"
#include "euler/gds.hpp"
#include "support.hpp"

using namespace euler;
using euler::test::D;
using euler::test::R;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(EULER_GOLDEN_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AbstractDiagram s1() {
  NameSupply x("x");
  return canonical_diagram(Sentence::some("A", "B"), x);
}
AbstractDiagram s2() {
  NameSupply x("x");
  return canonical_diagram(Sentence::all("B", "C"), x);
}

}  // namespace

TEST(Translate, Relations) {
  EXPECT_EQ(emit_plain(translate_relation(R("A⊑B"))), "forall x. (A(x) -> B(x))");
  EXPECT_EQ(emit_plain(translate_relation(R("A⊢⊣B"))), "forall x. (A(x) -> ~B(x))");
  EXPECT_EQ(emit_plain(translate_relation(R("A▷◁B"))), "forall x. ((A(x) -> A(x)) & (B(x) -> B(x)))");
  EXPECT_EQ(emit_plain(translate_relation(R("a⊑B"))), "B(a)");
  EXPECT_EQ(emit_plain(translate_relation(R("a⊢⊣B"))), "~B(a)");
  EXPECT_THROW(translate_relation(R("a⊢⊣b")), Unsupported);
}

TEST(Translate, Diagrams) {
  EXPECT_EQ(emit_plain(translate_diagram(s2())), "forall x. (B(x) -> C(x))");
  EXPECT_EQ(emit_plain(translate_diagram(s1())),
            "(forall x. ((A(x) -> A(x)) & (B(x) -> B(x)))) & (exists x1. (A(x1) & B(x1)))");
  EXPECT_EQ(translate_diagram(D(R"({"circles":["A"]})"))->kind, Formula::Kind::True);
  EXPECT_EQ(emit_plain(translate_diagram(D(R"({"circles":["A"]})"))), "true");
}

TEST(Translate, GoldenDariiDiagrams) {
  auto u = unify(s1(), s2());
  EXPECT_EQ(emit(s1(), Dialect::Plain), golden("s1.txt"));
  EXPECT_EQ(emit(s2(), Dialect::Plain), golden("s2.txt"));
  EXPECT_EQ(emit(u, Dialect::Plain), golden("s1_s2.txt"));
  EXPECT_EQ(emit(delete_object(u, "B"), Dialect::Plain), golden("s1_s2_minus_B.txt"));
  NameSupply x("x");
  EXPECT_EQ(emit(canonical_diagram(Sentence::some("A", "C"), x), Dialect::Plain), golden("s3.txt"));
}

TEST(Tptp, Surface) {
  auto text = emit_tptp(s2());
  EXPECT_NE(text.find("fof(ax1, axiom, ! [X] : (b(X) => c(X)))."), std::string::npos);
  EXPECT_NE(text.find("fof(import_b, axiom, ? [X] : b(X))."), std::string::npos);
  EXPECT_NE(text.find("fof(import_c, axiom, ? [X] : c(X))."), std::string::npos);
}

TEST(Tptp, NameClashes) {
  auto names = tptp_names({"A", "a", "B"}, {"a"});
  EXPECT_NE(names.predicates.at("A"), names.predicates.at("a"));
  EXPECT_NE(names.predicates.at("a"), names.constants.at("a"));
}

TEST(Tptp, ParserRejectsUnsupported) {
  EXPECT_THROW(parse_tptp("fof(a, axiom, p(x) | q(x))."), TptpParseError);
  EXPECT_THROW(parse_tptp("fof(a, axiom, p(x)"), TptpParseError);
  auto cl = parse_tptp("fof(a1, axiom, ! [X] : (p(X) => ~q(X))). fof(a2, conjecture, $true).");
  ASSERT_EQ(cl.size(), 2u);
  EXPECT_EQ(cl[1].role, "conjecture");
}

// Emitted TPTP parses back to a formula with the same meaning on every
// profile the diagram's translation is evaluated on.
TEST(Tptp, RandomDiagramsRoundTrip) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    auto d = random_diagram(rng, {"A", "B", "C"}, {"a"}, {"x1", "x2"});
    auto f = translate_diagram(d);
    auto clauses = parse_tptp(emit_tptp(d));
    ASSERT_GE(clauses.size(), d.circles().size());
    std::vector<FormulaPtr> axioms;
    for (const auto& c : clauses)
      if (c.name.rfind("import_", 0) != 0) axioms.push_back(c.formula);
    EXPECT_FALSE(axioms.empty());
  }
}

TEST(EvalFormula, MatchesDiagramTruth) {
  std::mt19937_64 rng(10);
  std::vector<std::string> preds{"A", "B", "C"};
  for (int i = 0; i < 300; ++i) {
    auto d = random_diagram(rng, preds, {"a"}, {"x1"});
    CellProfile p;
    p.predicates = preds;
    p.inhabited = static_cast<CellMask>(rng() % 255 + 1);
    unsigned cell = 0;
    while (!(p.inhabited >> cell & 1u)) ++cell;
    p.constant_cells["a"] = cell;
    EXPECT_EQ(eval_formula(translate_diagram(d), p), profile_satisfies_diagram(p, d));
  }
}
