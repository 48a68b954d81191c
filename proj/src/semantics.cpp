#include "euler/semantics.hpp"

#include <algorithm>

namespace euler {

void validate(const Model& m) {
  if (m.domain.empty()) throw InvalidModel("empty domain");
  for (const auto& [c, e] : m.constants)
    if (!m.domain.count(e)) throw InvalidModel("constant '" + c + "' denotes '" + e + "' outside the domain");
  for (const auto& [p, ext] : m.predicates) {
    if (ext.empty()) throw InvalidModel("predicate '" + p + "' is empty (existential import)");
    for (const auto& e : ext)
      if (!m.domain.count(e)) throw InvalidModel("predicate '" + p + "' contains '" + e + "' outside the domain");
  }
}

namespace {

const std::set<std::string>& extension(const Model& m, const std::string& p) {
  auto it = m.predicates.find(p);
  if (it == m.predicates.end()) throw UninterpretedName(p);
  return it->second;
}

const std::string& denotation(const Model& m, const std::string& c) {
  auto it = m.constants.find(c);
  if (it == m.constants.end()) throw UninterpretedName(c);
  return it->second;
}

}  // namespace

bool eval_sentence(const Model& m, const Sentence& s) {
  const auto& b = extension(m, s.predicate);
  auto count_in_a = [&](bool want_in_b) {
    const auto& a = extension(m, s.subject);
    return std::count_if(a.begin(), a.end(), [&](const auto& e) { return (b.count(e) > 0) == want_in_b; });
  };
  switch (s.form) {
    case Form::ConstIs: return b.count(denotation(m, s.subject)) > 0;
    case Form::ConstIsNot: return b.count(denotation(m, s.subject)) == 0;
    case Form::All: return count_in_a(false) == 0;
    case Form::No: return count_in_a(true) == 0;
    case Form::Some: return count_in_a(true) > 0;
    case Form::SomeNot: return count_in_a(false) > 0;
    case Form::SomethingIs: return !b.empty();
    case Form::SomethingIsNot: return b.size() < m.domain.size();
  }
  return false;
}

bool eval_diagram(const Model& m, const AbstractDiagram& d,
                  const std::map<std::string, std::string>& witness) {
  auto value = [&](const DiagramObject& o) -> const std::string& {
    if (o.kind == ObjectKind::Constant) return denotation(m, o.name);
    auto it = witness.find(o.name);
    if (it == witness.end()) throw MissingWitness(o.name);
    return it->second;
  };
  for (const auto& o : d.objects()) {
    if (o.is_point()) (void)value(o);
    else (void)extension(m, o.name);
  }
  for (const auto& r : d.relations()) {
    const auto& l = *d.find(r.left);
    const auto& t = *d.find(r.right);
    if (r.tag == RelationTag::Crossing) continue;
    if (!l.is_point() && !t.is_point()) {
      const auto& a = extension(m, l.name);
      const auto& b = extension(m, t.name);
      bool inside = r.tag == RelationTag::Inside;
      for (const auto& e : a)
        if ((b.count(e) > 0) != inside) return false;
      continue;
    }
    const auto& p = l.is_point() ? l : t;
    const auto& c = l.is_point() ? t : l;
    bool in = extension(m, c.name).count(value(p)) > 0;
    if (in != (r.tag == RelationTag::Inside)) return false;
  }
  auto pts = d.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (value(*d.find(pts[i])) == value(*d.find(pts[j]))) return false;
  return true;
}

ExtractedModel extract_model(const AbstractDiagram& d, const std::vector<std::string>& hosts) {
  ExtractedModel out;
  auto& m = out.model;
  std::map<std::string, std::set<std::string>> placement;  // element -> circles containing it
  for (const auto& p : d.points()) {
    m.domain.insert(p);
    auto& in = placement[p];
    for (const auto& c : d.circles())
      if (holds(d, EulRelation::inside(p, c))) in.insert(c);
    const auto& o = *d.find(p);
    if (o.kind == ObjectKind::Constant) m.constants[p] = p;
    else out.witness[p] = p;
  }
  for (const auto& a : d.circles()) {
    bool inhabited = std::any_of(placement.begin(), placement.end(),
                                 [&](const auto& kv) { return kv.second.count(a) > 0; });
    if (inhabited) continue;
    std::string w = "w" + a;
    while (d.contains(w) || m.domain.count(w)) w += "_";
    m.domain.insert(w);
    auto& in = placement[w];
    for (const auto& b : d.circles()) {
      if (holds(d, EulRelation::inside(a, b))) in.insert(b);
      for (const auto& h : hosts)
        if (holds(d, EulRelation::inside(h, b))) in.insert(b);
    }
  }
  for (const auto& c : d.circles()) m.predicates[c];
  for (const auto& [e, circles] : placement)
    for (const auto& c : circles) m.predicates[c].insert(e);

  validate(m);
  if (!eval_diagram(m, d, out.witness))
    throw InternalError("extracted model does not satisfy the diagram " + to_string(d.relations()));
  return out;
}

// ---------------------------------------------------------------------------

CellProfile profile_of(const Model& m, const std::vector<std::string>& predicates) {
  CellProfile p;
  p.predicates = predicates;
  auto cell = [&](const std::string& e) {
    unsigned c = 0;
    for (std::size_t i = 0; i < predicates.size(); ++i)
      if (extension(m, predicates[i]).count(e)) c |= 1u << i;
    return c;
  };
  for (const auto& e : m.domain) p.inhabited |= CellMask{1} << cell(e);
  for (const auto& [c, e] : m.constants) p.constant_cells[c] = cell(e);
  return p;
}

CellConstraints::CellConstraints(std::vector<std::string> predicates)
    : predicates_(std::move(predicates)) {
  std::sort(predicates_.begin(), predicates_.end());
  predicates_.erase(std::unique(predicates_.begin(), predicates_.end()), predicates_.end());
  if (predicates_.size() > kOracleMaxPredicates) throw VocabularyTooLarge(predicates_.size());
}

std::size_t CellConstraints::index(const std::string& predicate) const {
  auto it = std::lower_bound(predicates_.begin(), predicates_.end(), predicate);
  if (it == predicates_.end() || *it != predicate) throw UninterpretedName(predicate);
  return static_cast<std::size_t>(it - predicates_.begin());
}

CellMask CellConstraints::cells_where(const std::string& predicate, bool value) const {
  auto i = index(predicate);
  CellMask out = 0;
  for (std::size_t c = 0; c < cell_count(); ++c)
    if (((c >> i) & 1u) == static_cast<unsigned>(value)) out |= CellMask{1} << c;
  return out;
}

void CellConstraints::restrict_constant(const std::string& c, CellMask cells) {
  auto all = static_cast<CellMask>((std::uint64_t{1} << cell_count()) - 1);
  auto [it, fresh] = constants_.emplace(c, all);
  it->second &= cells;
}

void CellConstraints::add(const Sentence& s) {
  auto is = [&](const std::string& p, bool v) { return cells_where(p, v); };
  const auto& a = s.subject;
  const auto& b = s.predicate;
  switch (s.form) {
    case Form::ConstIs: restrict_constant(a, is(b, true)); break;
    case Form::ConstIsNot: restrict_constant(a, is(b, false)); break;
    case Form::SomethingIs: require_some(is(b, true)); break;
    case Form::SomethingIsNot: require_some(is(b, false)); break;
    case Form::All: forbid(is(a, true) & is(b, false)); break;
    case Form::No: forbid(is(a, true) & is(b, true)); break;
    case Form::Some: require_some(is(a, true) & is(b, true)); break;
    case Form::SomeNot: require_some(is(a, true) & is(b, false)); break;
  }
}

void CellConstraints::add_negation(const Sentence& s) {
  auto is = [&](const std::string& p, bool v) { return cells_where(p, v); };
  const auto& a = s.subject;
  const auto& b = s.predicate;
  switch (s.form) {
    case Form::ConstIs: restrict_constant(a, is(b, false)); break;
    case Form::ConstIsNot: restrict_constant(a, is(b, true)); break;
    case Form::SomethingIs: forbid(is(b, true)); break;
    case Form::SomethingIsNot: forbid(is(b, false)); break;
    case Form::All: require_some(is(a, true) & is(b, false)); break;
    case Form::No: require_some(is(a, true) & is(b, true)); break;
    case Form::Some: forbid(is(a, true) & is(b, true)); break;
    case Form::SomeNot: forbid(is(a, true) & is(b, false)); break;
  }
}

void CellConstraints::add(const AbstractDiagram& d) {
  std::map<std::string, CellMask> point_cells;
  auto all = static_cast<CellMask>((std::uint64_t{1} << cell_count()) - 1);
  for (const auto& p : d.points()) point_cells[p] = all;
  for (const auto& r : d.relations()) {
    const auto& l = *d.find(r.left);
    const auto& t = *d.find(r.right);
    if (r.tag == RelationTag::Crossing) continue;
    if (!l.is_point() && !t.is_point()) {
      forbid(cells_where(l.name, true) & cells_where(t.name, r.tag == RelationTag::Exclusion));
      continue;
    }
    const auto& p = l.is_point() ? l : t;
    const auto& c = l.is_point() ? t : l;
    point_cells[p.name] &= cells_where(c.name, r.tag == RelationTag::Inside);
  }
  for (const auto& [p, cells] : point_cells) {
    if (d.find(p)->kind == ObjectKind::Constant) restrict_constant(p, cells);
    else require_some(cells);
  }
}

bool CellConstraints::holds_on(const CellProfile& p) const {
  if (p.inhabited & forbidden_) return false;
  for (auto r : required_)
    if (!(p.inhabited & r)) return false;
  for (const auto& [c, allowed] : constants_) {
    auto it = p.constant_cells.find(c);
    if (it == p.constant_cells.end()) throw UninterpretedName(c);
    if (!((allowed >> it->second) & 1u)) return false;
  }
  return true;
}

bool CellConstraints::admits(CellMask inhabited) const {
  if (inhabited & forbidden_) return false;
  for (std::size_t i = 0; i < predicates_.size(); ++i)
    if (!(inhabited & cells_where(predicates_[i], true))) return false;
  for (auto r : required_)
    if (!(inhabited & r)) return false;
  for (const auto& [c, allowed] : constants_)
    if (!(inhabited & allowed)) return false;
  return true;
}

CellMask CellConstraints::constant_cells(const std::string& c, CellMask inhabited) const {
  auto it = constants_.find(c);
  return it == constants_.end() ? inhabited : (inhabited & it->second);
}

namespace {

unsigned lowest_cell(CellMask m) {
  unsigned c = 0;
  while (!((m >> c) & 1u)) ++c;
  return c;
}

}  // namespace

std::optional<CellProfile> CellConstraints::find_profile() const {
  const std::uint64_t subsets = std::uint64_t{1} << cell_count();
  for (std::uint64_t e = 1; e < subsets; ++e) {
    auto inhabited = static_cast<CellMask>(e);
    if (!admits(inhabited)) continue;
    CellProfile p;
    p.predicates = predicates_;
    p.inhabited = inhabited;
    for (const auto& [c, allowed] : constants_) p.constant_cells[c] = lowest_cell(inhabited & allowed);
    return p;
  }
  return std::nullopt;
}

std::vector<std::pair<CellMask, std::vector<CellMask>>> CellConstraints::profile_set() const {
  std::vector<std::pair<CellMask, std::vector<CellMask>>> out;
  const std::uint64_t subsets = std::uint64_t{1} << cell_count();
  for (std::uint64_t e = 1; e < subsets; ++e) {
    auto inhabited = static_cast<CellMask>(e);
    if (!admits(inhabited)) continue;
    std::vector<CellMask> cells;
    for (const auto& [c, allowed] : constants_) cells.push_back(inhabited & allowed);
    out.emplace_back(inhabited, std::move(cells));
  }
  return out;
}

bool profile_eval_sentence(const CellProfile& p, const Sentence& s) {
  CellConstraints cc(p.predicates);
  cc.add(s);
  return cc.holds_on(p);
}

bool profile_satisfies_diagram(const CellProfile& p, const AbstractDiagram& d) {
  CellConstraints cc(p.predicates);
  cc.add(d);
  return cc.holds_on(p);
}

bool oracle_valid(const Inference& inf) {
  auto preds = predicates_of(inf);
  CellConstraints cc({preds.begin(), preds.end()});
  for (const auto& c : constants_of(inf)) cc.restrict_constant(c, ~CellMask{0});
  for (const auto& s : inf.premises) cc.add(s);
  cc.add_negation(inf.conclusion);
  return !cc.satisfiable();
}

bool oracle_consistent(const std::vector<AbstractDiagram>& diagrams) {
  std::set<std::string> circles;
  for (const auto& d : diagrams)
    for (const auto& c : d.circles()) circles.insert(c);
  CellConstraints cc({circles.begin(), circles.end()});
  for (const auto& d : diagrams) cc.add(d);
  return cc.satisfiable();
}

bool oracle_consistent(const std::vector<Sentence>& sentences) {
  std::set<std::string> preds;
  for (const auto& s : sentences) preds.merge(predicates_of(s));
  CellConstraints cc({preds.begin(), preds.end()});
  for (const auto& s : sentences) cc.add(s);
  return cc.satisfiable();
}

}  // namespace euler
