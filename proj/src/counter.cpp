#include "euler/counter.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "relation_matrix.hpp"

namespace euler {

using detail::Cell;
using detail::RelationMatrix;

std::vector<AbstractDiagram> counter_candidates(const AbstractDiagram& e, NameSupply& fresh) {
  using R = EulRelation;
  std::vector<AbstractDiagram> out;
  auto emit = [&](std::vector<DiagramObject> objs, std::set<EulRelation> rels) {
    auto d = make_diagram(std::move(objs), std::move(rels));
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  };
  auto circle = [](const std::string& n) { return DiagramObject::circle(n); };

  for (const auto& r : e.relations()) {
    if (r.tag == RelationTag::Crossing) continue;
    const auto& l = *e.find(r.left);
    const auto& t = *e.find(r.right);
    if (!l.is_point() && !t.is_point()) {
      auto y = fresh.next();
      auto second = r.tag == RelationTag::Inside ? R::exclusion(y, r.right) : R::inside(y, r.right);
      emit({circle(r.left), circle(r.right), DiagramObject::existential(y)},
           {R::inside(y, r.left), second, R::crossing(r.left, r.right)});
      continue;
    }
    const auto& p = l.is_point() ? l : t;
    const auto& c = l.is_point() ? t : l;
    if (p.kind == ObjectKind::Constant) {
      auto flipped = r.tag == RelationTag::Inside ? R::exclusion(p.name, c.name) : R::inside(p.name, c.name);
      emit({p, circle(c.name)}, {flipped});
      continue;
    }
    // Existential x: falsify the sentence pattern that x witnesses.
    if (r.tag != RelationTag::Inside) continue;
    for (const auto& b : e.circles()) {
      if (b == c.name) continue;
      if (holds(e, R::inside(p.name, b)) && c.name < b) {
        emit({circle(c.name), circle(b)}, {R::exclusion(c.name, b)});
      } else if (holds(e, R::exclusion(p.name, b))) {
        emit({circle(c.name), circle(b)}, {R::inside(c.name, b)});
      }
    }
  }
  if (out.empty()) throw NoFalsifiableRelation();
  return out;
}

namespace {

Cell cell_of(RelationTag t) { return t == RelationTag::Inside ? Cell::In : Cell::Ex; }

void complete(RelationMatrix m, std::size_t p, const std::vector<std::size_t>& circles,
              std::size_t k, std::vector<RelationMatrix>& out) {
  while (k < circles.size() && m.get(p, circles[k]) != Cell::Unknown) ++k;
  if (k == circles.size()) {
    out.push_back(std::move(m));
    return;
  }
  for (Cell choice : {Cell::Ex, Cell::In}) {
    RelationMatrix next = m;
    next.set(p, circles[k], choice);
    if (!next.close()) complete(std::move(next), p, circles, k + 1, out);
  }
}

}  // namespace

std::vector<AbstractDiagram> ipi_insert(const AbstractDiagram& d, const DiagramObject& p,
                                        const std::map<std::string, RelationTag>& partial) {
  if (d.contains(p.name)) throw Error("point '" + p.name + "' is already in the diagram");
  if (!p.is_point()) throw Error("'" + p.name + "' is not a point");
  auto objects = d.objects();
  objects.push_back(p);
  std::sort(objects.begin(), objects.end());

  RelationMatrix m(objects);
  if (m.load(d.relations())) throw InternalError("ipi_insert: diagram does not load");
  auto pi = *m.index_of(p.name);
  for (const auto& [c, tag] : partial) {
    auto ci = m.index_of(c);
    if (!ci) continue;
    m.set(pi, *ci, cell_of(tag));
  }
  std::vector<AbstractDiagram> result;
  if (m.close()) return result;

  std::vector<std::size_t> circles;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m.is_point(i)) circles.push_back(i);
  std::vector<RelationMatrix> done;
  complete(std::move(m), pi, circles, 0, done);
  for (const auto& c : done) result.push_back(make_diagram(objects, c.to_relations()));
  return result;
}

bool is_relational(const AbstractDiagram& e) {
  auto circles = e.circles();
  std::set<EulRelation> circle_rels;
  for (const auto& r : e.relations())
    if (!e.find(r.left)->is_point() && !e.find(r.right)->is_point()) circle_rels.insert(r);

  for (const auto& x : e.existentials()) {
    std::vector<DiagramObject> objs;
    for (const auto& c : circles) objs.push_back(DiagramObject::circle(c));
    objs.push_back(DiagramObject::existential(x));
    std::sort(objs.begin(), objs.end());

    auto pinned_by = [&](const std::vector<std::string>& basis) {
      RelationMatrix m(objs);
      m.load(circle_rels, /*skip_crossings=*/true);
      auto xi = *m.index_of(x);
      for (const auto& c : basis) {
        bool in = holds(e, EulRelation::inside(x, c));
        m.set(xi, *m.index_of(c), in ? Cell::In : Cell::Ex);
      }
      if (m.close()) return false;
      return std::all_of(circles.begin(), circles.end(), [&](const std::string& c) {
        Cell want = holds(e, EulRelation::inside(x, c)) ? Cell::In : Cell::Ex;
        return m.get(xi, *m.index_of(c)) == want;
      });
    };

    bool ok = pinned_by({});
    for (std::size_t i = 0; i < circles.size() && !ok; ++i) {
      ok = pinned_by({circles[i]});
      for (std::size_t j = i + 1; j < circles.size() && !ok; ++j) ok = pinned_by({circles[i], circles[j]});
    }
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

struct Leaf {
  AbstractDiagram diagram;
  Rule rule;
  std::string detail;
};

struct State {
  Proof proof;
  std::size_t node = 0;
  AbstractDiagram diagram;
};

std::string key_of(const AbstractDiagram& d) {
  std::string k;
  for (const auto& o : d.objects()) k += o.name + ",";
  return k + to_string(d.relations());
}

// Relations of p derivable once both diagrams are merged, restricted to
// circles of `target`.
std::map<std::string, RelationTag> merged_profile(const AbstractDiagram& a, const AbstractDiagram& b,
                                                  const std::string& p, const AbstractDiagram& target) {
  std::vector<DiagramObject> objects = a.objects();
  for (const auto& o : b.objects())
    if (!a.contains(o.name)) objects.push_back(o);
  std::sort(objects.begin(), objects.end());
  auto rels = a.relations();
  rels.insert(b.relations().begin(), b.relations().end());
  RelationMatrix m(objects);
  m.load(rels, /*skip_crossings=*/true);
  m.close();
  std::map<std::string, RelationTag> out;
  auto pi = *m.index_of(p);
  for (const auto& c : target.circles()) {
    Cell cell = m.get(pi, *m.index_of(c));
    if (cell == Cell::In) out[c] = RelationTag::Inside;
    if (cell == Cell::Ex) out[c] = RelationTag::Exclusion;
  }
  return out;
}

std::string placement_text(const AbstractDiagram& d, const std::string& p) {
  std::string out = p + ":";
  const char* sep = " ";
  // Inside relations first, then exclusions, each in circle order.
  for (bool inside : {true, false}) {
    for (const auto& c : d.circles()) {
      auto r = inside ? EulRelation::inside(p, c) : EulRelation::exclusion(p, c);
      if (!holds(d, r)) continue;
      out += sep + to_string(r);
      sep = ", ";
    }
  }
  return out;
}

class CounterSearch {
 public:
  CounterSearch(std::vector<Leaf> leaves) : leaves_(std::move(leaves)) {}

  std::optional<State> run(std::size_t budget,
                           const std::function<bool(const AbstractDiagram&)>& accept) {
    accept_ = &accept;
    memo_.clear();
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
      State s;
      s.node = s.proof.add(leaves_[i].rule, {}, leaves_[i].diagram, leaves_[i].detail);
      s.diagram = leaves_[i].diagram;
      if (auto r = dfs(std::move(s), std::uint64_t{1} << i, budget)) return r;
    }
    return std::nullopt;
  }

 private:
  std::optional<State> dfs(State s, std::uint64_t used, std::size_t budget) {
    std::uint64_t all = (std::uint64_t{1} << leaves_.size()) - 1;
    if (used == all) {
      if ((*accept_)(s.diagram)) return s;
      return std::nullopt;
    }
    auto key = key_of(s.diagram) + "|" + std::to_string(used) + "|" + std::to_string(budget);
    if (memo_.count(key)) return std::nullopt;
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
      if ((used >> i) & 1u) continue;
      State t = s;
      auto leaf = t.proof.add(leaves_[i].rule, {}, leaves_[i].diagram, leaves_[i].detail);
      t.proof.set_root(s.node);
      std::vector<std::pair<State, std::size_t>> outcomes;
      step(t, leaf, leaves_[i].diagram, budget, outcomes);
      for (auto& [o, left] : outcomes)
        if (auto r = dfs(std::move(o), used | (std::uint64_t{1} << i), left)) return r;
    }
    memo_.insert(std::move(key));
    return std::nullopt;
  }

  // Unify s.node with a leaf node; on a determinacy block insert the point
  // into the side that lacks it, once per completion, and try again.
  void step(const State& s, std::size_t leaf_node, const AbstractDiagram& leaf, std::size_t budget,
            std::vector<std::pair<State, std::size_t>>& out) {
    auto r = try_unify(s.diagram, leaf);
    if (auto* d = std::get_if<AbstractDiagram>(&r)) {
      State t = s;
      t.node = t.proof.add(Rule::Unify, {s.node, leaf_node}, *d);
      t.diagram = *d;
      out.emplace_back(std::move(t), budget);
      return;
    }
    const auto& b = std::get<UnifyBlocked>(r);
    if (b.kind != BlockKind::Determinacy || budget == 0) return;

    bool into_current = !s.diagram.contains(b.point);
    const auto& target = into_current ? s.diagram : leaf;
    const auto& source = into_current ? leaf : s.diagram;
    const auto& point = *source.find(b.point);
    auto partial = merged_profile(s.diagram, leaf, b.point, target);
    for (auto& completion : ipi_insert(target, point, partial)) {
      State t = s;
      auto detail = placement_text(completion, b.point);
      if (into_current) {
        t.node = t.proof.add(Rule::Ipi, {s.node}, completion, detail);
        t.diagram = completion;
        t.proof.set_root(t.node);
        step(t, leaf_node, leaf, budget - 1, out);
      } else {
        auto id = t.proof.add(Rule::Ipi, {leaf_node}, completion, detail);
        t.proof.set_root(s.node);
        step(t, id, completion, budget - 1, out);
      }
    }
  }

  std::vector<Leaf> leaves_;
  const std::function<bool(const AbstractDiagram&)>* accept_ = nullptr;
  std::set<std::string> memo_;
};

void check_counter_proof(const CounterModel& cm, const std::vector<AbstractDiagram>& premises,
                         const Inference& inf) {
  const auto& fin = cm.proof.conclusion();
  std::vector<const AbstractDiagram*> leaves{&cm.counter};
  for (const auto& p : premises) leaves.push_back(&p);
  for (const auto* l : leaves)
    for (const auto& r : l->relations())
      if (r.tag != RelationTag::Crossing && !holds(fin, r))
        throw InternalError("counter-d-proof lost leaf relation " + to_string(r));
  for (const auto& x : cm.counter.existentials())
    for (const auto& p : premises)
      if (p.contains(x)) throw InternalError("counter-diagram point " + x + " occurs in a premise");
  for (const auto& s : inf.premises)
    if (!eval_sentence(cm.model.model, s))
      throw InternalError("counter-model falsifies premise '" + to_string(s) + "'");
  if (eval_sentence(cm.model.model, inf.conclusion))
    throw InternalError("counter-model satisfies the conclusion '" + to_string(inf.conclusion) + "'");
}

}  // namespace

DisproveResult disprove(const Inference& inf) {
  DisproveResult result;
  auto vocabulary = predicates_of(inf);
  if (vocabulary.size() <= kOracleMaxPredicates && !oracle_consistent(inf.premises)) {
    result.status = DisproveStatus::InconsistentPremises;
    return result;
  }
  auto goal = conclusion_diagram(inf);
  if (!is_relational(goal)) {
    result.status = DisproveStatus::NonRelationalConclusion;
    return result;
  }

  auto premises = premise_diagrams(inf);
  std::set<std::string> taken = constants_of(inf);
  for (const auto& d : premises)
    for (const auto& p : d.points()) taken.insert(p);
  NameSupply fresh("y", taken);

  // Each candidate pairs E' with the extra acceptance test on the final
  // diagram and the circles that host point-free witnesses.
  struct Candidate {
    AbstractDiagram diagram;
    std::vector<std::string> hosts;
  };
  std::vector<Candidate> candidates;
  const auto& conclusion = inf.conclusion;
  if (conclusion.form == Form::SomethingIsNot) {
    // No counter-relation exists for x⊢⊣B; a counter-model puts everything
    // inside B, so start from B alone and demand that shape at the end.
    candidates.push_back({make_diagram({DiagramObject::circle(conclusion.predicate)}, {}),
                          {conclusion.predicate}});
  } else if (conclusion.form != Form::SomethingIs) {
    for (auto& d : counter_candidates(goal, fresh)) candidates.push_back({std::move(d), {}});
  }
  if (candidates.empty()) return result;

  // A point may have to be inserted into every other leaf once.
  std::size_t points = 0;
  for (const auto& d : premises) points += d.points().size();
  points += candidates.front().diagram.points().size();
  const std::size_t max_budget = points * premises.size();

  for (std::size_t budget = 0; budget <= max_budget; ++budget) {
    result.ipi_bound = budget;
    for (const auto& cand : candidates) {
      std::vector<Leaf> leaves{{cand.diagram, Rule::Counter, "counter-diagram"}};
      for (std::size_t i = 0; i < premises.size(); ++i)
        leaves.push_back({premises[i], Rule::Premise, to_string(inf.premises[i])});

      std::optional<ExtractedModel> model;
      std::function<bool(const AbstractDiagram&)> accept = [&](const AbstractDiagram& fin) {
        for (const auto& h : cand.hosts) {
          for (const auto& p : fin.points())
            if (!holds(fin, EulRelation::inside(p, h))) return false;
          for (const auto& c : fin.circles())
            if (c != h && holds(fin, EulRelation::exclusion(c, h))) return false;
        }
        model = extract_model(fin, cand.hosts);
        return true;
      };
      CounterSearch search(std::move(leaves));
      auto found = search.run(budget, accept);
      if (!found) continue;

      CounterModel cm{std::move(found->proof), cand.diagram, std::move(*model), conclusion};
      check_counter_proof(cm, premises, inf);
      result.status = DisproveStatus::Disproved;
      result.counter_model = std::move(cm);
      return result;
    }
  }
  return result;
}

}  // namespace euler
