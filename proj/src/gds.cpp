#include "euler/gds.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "euler/semantics.hpp"
#include "relation_matrix.hpp"

namespace euler {

using detail::Cell;
using detail::RelationMatrix;

std::variant<AbstractDiagram, UnifyBlocked> try_unify(const AbstractDiagram& d1,
                                                      const AbstractDiagram& d2) {
  std::vector<DiagramObject> objects = d1.objects();
  for (const auto& o : d2.objects()) {
    const auto* mine = d1.find(o.name);
    if (!mine) {
      objects.push_back(o);
    } else if (mine->kind != o.kind) {
      return UnifyBlocked{BlockKind::Consistency, o.name, {},
                          "'" + o.name + "' is a " + to_string(mine->kind) + " on one side and a " +
                              to_string(o.kind) + " on the other"};
    }
  }
  std::sort(objects.begin(), objects.end());

  auto rels = d1.relations();
  rels.insert(d2.relations().begin(), d2.relations().end());
  RelationMatrix m(objects);
  auto conflict = m.load(rels, /*skip_crossings=*/true);
  if (!conflict) conflict = m.close();
  if (conflict) {
    return UnifyBlocked{BlockKind::Consistency, conflict->a, conflict->b,
                        "consistency: " + to_string(conflict->existing) + " against " +
                            to_string(conflict->derived) + " (" + conflict->rule + ")"};
  }

  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.is_point(i)) continue;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.is_point(j) || m.get(i, j) != Cell::Unknown) continue;
      const auto& p = m.object(i).name;
      const auto& c = m.object(j).name;
      return UnifyBlocked{BlockKind::Determinacy, p, c,
                          "determinacy: position of " + p + " relative to " + c + " is open"};
    }
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!m.is_point(i) && !m.is_point(j) && m.get(i, j) == Cell::Unknown) m.set(i, j, Cell::Cr);

  try {
    return make_diagram(std::move(objects), m.to_relations());
  } catch (const WellFormednessError& e) {
    throw InternalError(std::string("unification produced an ill-formed diagram: ") + e.what());
  }
}

AbstractDiagram unify(const AbstractDiagram& d1, const AbstractDiagram& d2) {
  auto r = try_unify(d1, d2);
  if (auto* b = std::get_if<UnifyBlocked>(&r)) throw UnifyBlockedError(*b);
  return std::get<AbstractDiagram>(std::move(r));
}

const char* to_string(Rule r) {
  switch (r) {
    case Rule::Premise: return "premise";
    case Rule::Import: return "import";
    case Rule::Counter: return "counter";
    case Rule::Unify: return "unify";
    case Rule::Delete: return "delete";
    case Rule::Ipi: return "ipi";
  }
  return "?";
}

std::size_t Proof::add(Rule rule, std::vector<std::size_t> inputs, AbstractDiagram d,
                       std::string detail) {
  std::size_t id = nodes_.size();
  nodes_.push_back({id, rule, std::move(inputs), std::move(d), std::move(detail)});
  root_ = id;
  return id;
}

std::size_t Proof::count(Rule r) const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [r](const ProofNode& n) { return n.rule == r; }));
}

// ---------------------------------------------------------------------------

std::vector<AbstractDiagram> premise_diagrams(const Inference& inf) {
  NameSupply fresh("x", constants_of(inf));
  std::vector<AbstractDiagram> out;
  for (const auto& s : inf.premises) out.push_back(canonical_diagram(s, fresh));
  return out;
}

AbstractDiagram conclusion_diagram(const Inference& inf) {
  NameSupply fresh("z", constants_of(inf));
  return canonical_diagram(inf.conclusion, fresh);
}

bool conclusion_reached(const AbstractDiagram& e, const AbstractDiagram& goal,
                        std::vector<std::string>* matched) {
  auto is_existential = [&](const std::string& n) {
    return goal.find(n)->kind == ObjectKind::Existential;
  };
  for (const auto& r : goal.relations()) {
    if (r.tag == RelationTag::Crossing) continue;
    if (is_existential(r.left) || is_existential(r.right)) continue;
    const auto* l = e.find(r.left);
    const auto* t = e.find(r.right);
    if (!l || !t || l->kind != goal.find(r.left)->kind || t->kind != goal.find(r.right)->kind)
      return false;
    if (!holds(e, r)) return false;
  }

  // Existential points first so that a genuine witness is preferred.
  auto candidates = e.existentials();
  for (const auto& c : e.constants()) candidates.push_back(c);
  std::vector<std::string> found;
  for (const auto& z : goal.existentials()) {
    std::vector<EulRelation> needed;
    for (const auto& r : goal.relations())
      if (r.mentions(z)) needed.push_back(r);
    bool ok = false;
    for (const auto& q : candidates) {
      ok = std::all_of(needed.begin(), needed.end(), [&](const EulRelation& r) {
        const auto& c = r.left == z ? r.right : r.left;
        if (!e.contains(c)) return false;
        return r.tag == RelationTag::Inside ? holds(e, EulRelation::inside(q, c))
                                            : holds(e, EulRelation::exclusion(q, c));
      });
      if (ok) {
        found.push_back(q);
        break;
      }
    }
    if (!ok) return false;
  }
  if (matched) *matched = std::move(found);
  return true;
}

namespace {

// Upper bound on block-guided deletions before one unification.
constexpr int kMaxDeletionsPerStep = 2;

struct Leaf {
  AbstractDiagram diagram;
  Rule rule;
  std::string detail;
  bool start_only;
};

struct State {
  Proof proof;
  std::size_t node;
  AbstractDiagram diagram;
};

std::string key_of(const AbstractDiagram& d) {
  std::string k;
  for (const auto& o : d.objects()) k += o.name + ",";
  return k + to_string(d.relations());
}

class ProofSearch {
 public:
  ProofSearch(std::vector<Leaf> leaves, AbstractDiagram goal)
      : leaves_(std::move(leaves)), goal_(std::move(goal)) {}

  std::optional<State> run(std::size_t bound) {
    memo_.clear();
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
      State s;
      s.node = s.proof.add(leaves_[i].rule, {}, leaves_[i].diagram, leaves_[i].detail);
      s.diagram = leaves_[i].diagram;
      if (auto r = dfs(std::move(s), std::uint64_t{1} << i, bound)) return r;
    }
    return std::nullopt;
  }

 private:
  std::optional<State> dfs(State s, std::uint64_t used, std::size_t budget) {
    if (conclusion_reached(s.diagram, goal_)) return s;
    if (budget == 0) return std::nullopt;
    auto key = key_of(s.diagram) + "|" + std::to_string(used) + "|" + std::to_string(budget);
    if (memo_.count(key)) return std::nullopt;
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
      if ((used >> i) & 1u || leaves_[i].start_only) continue;
      State t = s;
      auto leaf = t.proof.add(leaves_[i].rule, {}, leaves_[i].diagram, leaves_[i].detail);
      t.proof.set_root(s.node);
      std::vector<State> outcomes;
      combine(t, leaf, leaves_[i].diagram, kMaxDeletionsPerStep, outcomes);
      for (auto& o : outcomes)
        if (auto r = dfs(std::move(o), used | (std::uint64_t{1} << i), budget - 1)) return r;
    }
    memo_.insert(std::move(key));
    return std::nullopt;
  }

  // Unify the current diagram (s.node) with a leaf node, deleting the objects
  // named by a determinacy block when the plain unification is refused.
  void combine(const State& s, std::size_t leaf_node, const AbstractDiagram& leaf, int deletions,
               std::vector<State>& out) {
    auto r = try_unify(s.diagram, leaf);
    if (auto* d = std::get_if<AbstractDiagram>(&r)) {
      State t = s;
      t.node = t.proof.add(Rule::Unify, {s.node, leaf_node}, *d);
      t.diagram = *d;
      out.push_back(std::move(t));
      return;
    }
    const auto& b = std::get<UnifyBlocked>(r);
    if (b.kind != BlockKind::Determinacy || deletions == 0) return;

    auto try_delete = [&](bool on_current, const std::string& name) {
      const auto& side = on_current ? s.diagram : leaf;
      if (!side.contains(name) || side.objects().size() < 2) return;
      State t = s;
      auto reduced = delete_object(side, name);
      if (on_current) {
        t.node = t.proof.add(Rule::Delete, {s.node}, reduced, name);
        t.diagram = reduced;
        t.proof.set_root(t.node);
        combine(t, leaf_node, leaf, deletions - 1, out);
      } else {
        auto id = t.proof.add(Rule::Delete, {leaf_node}, reduced, name);
        t.proof.set_root(s.node);
        combine(t, id, reduced, deletions - 1, out);
      }
    };
    for (bool cur : {true, false}) {
      const auto& side = cur ? s.diagram : leaf;
      if (side.contains(b.point) && !side.contains(b.circle)) try_delete(cur, b.point);
    }
    for (bool cur : {true, false}) {
      const auto& side = cur ? s.diagram : leaf;
      if (side.contains(b.circle) && !side.contains(b.point)) try_delete(cur, b.circle);
    }
  }

  std::vector<Leaf> leaves_;
  AbstractDiagram goal_;
  std::set<std::string> memo_;
};

std::string witness_name(const std::string& circle, const std::set<std::string>& taken) {
  std::string base = "w" + circle;
  if (!taken.count(base)) return base;
  for (unsigned i = 1;; ++i)
    if (!taken.count(base + std::to_string(i))) return base + std::to_string(i);
}

}  // namespace

ProveResult prove(const Inference& inf) {
  ProveResult result;
  auto vocabulary = predicates_of(inf);
  if (vocabulary.size() <= kOracleMaxPredicates && !oracle_consistent(inf.premises)) {
    result.status = ProveStatus::InconsistentPremises;
    return result;
  }

  auto premises = premise_diagrams(inf);
  auto goal = conclusion_diagram(inf);
  std::set<std::string> taken = constants_of(inf);
  for (const auto& d : premises)
    for (const auto& p : d.points()) taken.insert(p);

  std::vector<Leaf> leaves;
  for (std::size_t i = 0; i < premises.size(); ++i)
    leaves.push_back({premises[i], Rule::Premise, to_string(inf.premises[i]), false});
  for (const auto& c : vocabulary) {
    auto w = witness_name(c, taken);
    auto d = make_diagram({DiagramObject::circle(c), DiagramObject::existential(w)},
                          {EulRelation::inside(w, c)});
    leaves.push_back({std::move(d), Rule::Import, "existential import: " + c + " is nonempty", true});
  }

  ProofSearch search(std::move(leaves), goal);
  for (std::size_t bound = 0; bound <= premises.size(); ++bound) {
    result.unification_bound = bound;
    auto found = search.run(bound);
    if (!found) continue;

    std::vector<std::string> matched;
    conclusion_reached(found->diagram, goal, &matched);
    std::set<std::string> keep(matched.begin(), matched.end());
    for (const auto& o : goal.objects())
      if (o.kind != ObjectKind::Existential) keep.insert(o.name);
    auto& s = *found;
    const auto objects = s.diagram.objects();
    for (const auto& o : objects) {
      if (keep.count(o.name)) continue;
      s.diagram = delete_object(s.diagram, o.name);
      s.node = s.proof.add(Rule::Delete, {s.node}, s.diagram, o.name);
    }
    s.proof.set_root(s.node);
    result.status = ProveStatus::Proved;
    result.proof = std::move(s.proof);
    return result;
  }
  return result;
}

}  // namespace euler
