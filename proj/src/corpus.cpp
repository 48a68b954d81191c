#include "euler/corpus.hpp"

#include "euler/semantics.hpp"

namespace euler {

namespace {

// Raw engine output reduced by modulo: distribution objects are not
// portable across standard libraries, and corpora must be byte-stable.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::string circle_name(std::uint64_t i) { return std::string(1, static_cast<char>('A' + i)); }
std::string constant_name(std::uint64_t i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

Sentence random_sentence(std::mt19937_64& rng, unsigned circles, unsigned constants) {
  std::vector<Form> forms{Form::SomethingIs, Form::SomethingIsNot};
  if (constants > 0) forms.insert(forms.end(), {Form::ConstIs, Form::ConstIsNot});
  if (circles > 1) forms.insert(forms.end(), {Form::All, Form::No, Form::Some, Form::SomeNot});
  Form f = forms[pick(rng, forms.size())];
  auto b = pick(rng, circles);
  switch (f) {
    case Form::SomethingIs: return Sentence::something_is(circle_name(b));
    case Form::SomethingIsNot: return Sentence::something_is_not(circle_name(b));
    case Form::ConstIs: return Sentence::const_is(constant_name(pick(rng, constants)), circle_name(b));
    case Form::ConstIsNot:
      return Sentence::const_is_not(constant_name(pick(rng, constants)), circle_name(b));
    default: break;
  }
  auto a = pick(rng, circles - 1);
  if (a >= b) ++a;  // distinct subject and predicate
  return Sentence{f, circle_name(a), circle_name(b)};
}

std::vector<CorpusRecord> generate_corpus(const CorpusOptions& o) {
  if (o.circles < 1 || o.circles > kOracleMaxPredicates)
    throw CorpusBoundError("--circles must be between 1 and " + std::to_string(kOracleMaxPredicates));
  if (o.constants > 26) throw CorpusBoundError("--constants must be at most 26");
  if (o.premises > 8) throw CorpusBoundError("--premises must be at most 8");

  std::mt19937_64 rng(o.seed);
  std::vector<CorpusRecord> out;
  while (out.size() < o.count) {
    CorpusRecord r;
    auto n = pick(rng, o.premises + 1);
    for (std::uint64_t i = 0; i < n; ++i)
      r.inference.premises.push_back(random_sentence(rng, o.circles, o.constants));
    r.inference.conclusion = random_sentence(rng, o.circles, o.constants);
    r.consistent = oracle_consistent(r.inference.premises);
    if (o.consistent_only && !r.consistent) continue;
    r.oracle_valid = oracle_valid(r.inference);
    r.id = out.size();
    out.push_back(std::move(r));
  }
  return out;
}

AbstractDiagram random_diagram(std::mt19937_64& rng, const std::vector<std::string>& circles,
                               const std::vector<std::string>& constants,
                               const std::vector<std::string>& existentials) {
  std::vector<DiagramObject> objects;
  for (const auto& c : circles) objects.push_back(DiagramObject::circle(c));
  for (const auto& c : constants) objects.push_back(DiagramObject::constant(c));
  for (const auto& x : existentials) objects.push_back(DiagramObject::existential(x));
  std::vector<std::string> points = constants;
  points.insert(points.end(), existentials.begin(), existentials.end());

  for (;;) {
    std::set<EulRelation> rels;
    for (std::size_t i = 0; i < circles.size(); ++i) {
      for (std::size_t j = i + 1; j < circles.size(); ++j) {
        const auto& a = circles[i];
        const auto& b = circles[j];
        switch (pick(rng, 4)) {
          case 0: rels.insert(EulRelation::inside(a, b)); break;
          case 1: rels.insert(EulRelation::inside(b, a)); break;
          case 2: rels.insert(EulRelation::exclusion(a, b)); break;
          default: rels.insert(EulRelation::crossing(a, b)); break;
        }
      }
    }
    for (const auto& p : points)
      for (const auto& c : circles)
        rels.insert(pick(rng, 2) ? EulRelation::inside(p, c) : EulRelation::exclusion(p, c));
    try {
      return make_diagram(objects, rels);
    } catch (const WellFormednessError&) {
    }
  }
}

}  // namespace euler
