#include "euler/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "relation_matrix.hpp"

namespace euler {

namespace {

bool alnum_tail(const std::string& name) {
  return std::all_of(name.begin() + 1, name.end(),
                     [](unsigned char c) { return std::isalnum(c) != 0; });
}

bool is_upper_name(const std::string& name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name[0])) && alnum_tail(name);
}

bool is_lower_name(const std::string& name) {
  return !name.empty() && std::islower(static_cast<unsigned char>(name[0])) && alnum_tail(name);
}

std::pair<std::string, std::string> unordered(const std::string& a, const std::string& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

const char* invariant_for_pair(bool a_point, bool b_point) {
  if (a_point && b_point) return "TOTALITY-PP";
  if (a_point || b_point) return "TOTALITY-PC";
  return "TOTALITY-CC";
}

}  // namespace

const char* to_string(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::Circle: return "circle";
    case ObjectKind::Constant: return "constant";
    case ObjectKind::Existential: return "existential";
  }
  return "?";
}

bool is_circle_name(const std::string& name) { return is_upper_name(name); }
bool is_point_name(const std::string& name) { return is_lower_name(name); }

EulRelation EulRelation::exclusion(std::string s, std::string t) {
  return canonical({RelationTag::Exclusion, std::move(s), std::move(t)});
}

EulRelation EulRelation::crossing(std::string a, std::string b) {
  return canonical({RelationTag::Crossing, std::move(a), std::move(b)});
}

EulRelation canonical(EulRelation r) {
  if (r.tag != RelationTag::Inside && r.right < r.left) std::swap(r.left, r.right);
  return r;
}

std::string to_string(const EulRelation& r) {
  switch (r.tag) {
    case RelationTag::Inside: return r.left + "⊑" + r.right;
    case RelationTag::Exclusion:
      if (is_point_name(r.right) && !is_point_name(r.left)) return r.right + "⊢⊣" + r.left;
      return r.left + "⊢⊣" + r.right;
    case RelationTag::Crossing: return r.left + "▷◁" + r.right;
  }
  return "?";
}

std::string to_string(const std::set<EulRelation>& rels) {
  std::string out = "{";
  bool first = true;
  for (const auto& r : rels) {
    if (!first) out += ", ";
    first = false;
    out += to_string(r);
  }
  return out + "}";
}

WellFormednessError::WellFormednessError(std::string invariant, std::string a, std::string b)
    : Error("ill-formed diagram: " + invariant + " violated on {" + a + ", " + b + "}"),
      invariant_(std::move(invariant)),
      pair_(std::move(a), std::move(b)) {}

ClosureConflict::ClosureConflict(ConflictInfo info)
    : Error("closure conflict on {" + info.a + ", " + info.b + "}: " + to_string(info.existing) +
            " vs " + to_string(info.derived) + " (" + info.rule + ")"),
      info_(std::move(info)) {}

std::set<EulRelation> AbstractDiagram::relations_with_implicit() const {
  auto out = relations_;
  auto pts = points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.insert(EulRelation::exclusion(pts[i], pts[j]));
  return out;
}

const DiagramObject* AbstractDiagram::find(const std::string& name) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), name,
                             [](const DiagramObject& o, const std::string& n) { return o.name < n; });
  if (it == objects_.end() || it->name != name) return nullptr;
  return &*it;
}

namespace {

std::vector<std::string> names_where(const std::vector<DiagramObject>& objs,
                                     bool (*pred)(const DiagramObject&)) {
  std::vector<std::string> out;
  for (const auto& o : objs)
    if (pred(o)) out.push_back(o.name);
  return out;
}

}  // namespace

std::vector<std::string> AbstractDiagram::circles() const {
  return names_where(objects_, [](const DiagramObject& o) { return o.kind == ObjectKind::Circle; });
}
std::vector<std::string> AbstractDiagram::points() const {
  return names_where(objects_, [](const DiagramObject& o) { return o.is_point(); });
}
std::vector<std::string> AbstractDiagram::constants() const {
  return names_where(objects_, [](const DiagramObject& o) { return o.kind == ObjectKind::Constant; });
}
std::vector<std::string> AbstractDiagram::existentials() const {
  return names_where(objects_,
                     [](const DiagramObject& o) { return o.kind == ObjectKind::Existential; });
}

std::optional<EulRelation> AbstractDiagram::relation_between(const std::string& a,
                                                             const std::string& b) const {
  for (auto r : {EulRelation::inside(a, b), EulRelation::inside(b, a), EulRelation::exclusion(a, b),
                 EulRelation::crossing(a, b)}) {
    if (relations_.count(r)) return r;
  }
  return std::nullopt;
}

AbstractDiagram make_diagram(std::vector<DiagramObject> objects, std::set<EulRelation> relations) {
  for (const auto& o : objects) {
    bool ok = o.kind == ObjectKind::Circle ? is_circle_name(o.name) : is_point_name(o.name);
    if (!ok) throw WellFormednessError("NAMES", o.name, o.name);
  }
  std::sort(objects.begin(), objects.end());
  for (std::size_t i = 1; i < objects.size(); ++i)
    if (objects[i - 1].name == objects[i].name)
      throw WellFormednessError("NAMES", objects[i].name, objects[i].name);

  AbstractDiagram d;
  d.objects_ = std::move(objects);

  // Kind checks and canonicalization.
  std::set<EulRelation> rels;
  for (auto r : relations) {
    const auto* l = d.find(r.left);
    const auto* t = d.find(r.right);
    if (!l) throw WellFormednessError("UNKNOWN-OBJECT", r.left, r.right);
    if (!t) throw WellFormednessError("UNKNOWN-OBJECT", r.right, r.left);
    if (r.left == r.right) {
      if (r.tag == RelationTag::Inside) continue;
      throw WellFormednessError("SELF-RELATION", r.left, r.right);
    }
    bool lp = l->is_point(), tp = t->is_point();
    switch (r.tag) {
      case RelationTag::Inside:
        if (tp) throw WellFormednessError(lp ? "TOTALITY-PP" : "RELATION-KIND", r.left, r.right);
        break;
      case RelationTag::Exclusion:
        if (lp && tp) continue;
        break;
      case RelationTag::Crossing:
        if (lp || tp) throw WellFormednessError(invariant_for_pair(lp, tp), r.left, r.right);
        break;
    }
    rels.insert(canonical(std::move(r)));
  }

  // At most one relation per pair.
  std::map<std::pair<std::string, std::string>, EulRelation> by_pair;
  for (const auto& r : rels) {
    auto key = unordered(r.left, r.right);
    auto [it, fresh] = by_pair.emplace(key, r);
    if (fresh) continue;
    const auto& other = it->second;
    if (r.tag == RelationTag::Inside && other.tag == RelationTag::Inside)
      throw WellFormednessError("ASYMMETRY", key.first, key.second);
    throw WellFormednessError(invariant_for_pair(d.find(key.first)->is_point(),
                                                 d.find(key.second)->is_point()),
                              key.first, key.second);
  }

  // At least one relation per circle-circle and point-circle pair.
  const auto& objs = d.objects_;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = i + 1; j < objs.size(); ++j) {
      if (objs[i].is_point() && objs[j].is_point()) continue;
      if (!by_pair.count({objs[i].name, objs[j].name}))
        throw WellFormednessError(invariant_for_pair(objs[i].is_point(), objs[j].is_point()),
                                  objs[i].name, objs[j].name);
    }
  }

  detail::RelationMatrix m(d.objects_);
  if (auto c = m.load(rels)) throw InternalError("pair check missed a conflict");
  if (auto c = m.close()) {
    bool reversed_inside = c->existing.tag == RelationTag::Inside &&
                           c->derived.tag == RelationTag::Inside;
    auto key = unordered(c->a, c->b);
    throw WellFormednessError(reversed_inside ? "ASYMMETRY" : "CLOSURE-" + c->rule, key.first,
                              key.second);
  }
  d.relations_ = std::move(rels);
  return d;
}

std::set<EulRelation> closure(const std::set<EulRelation>& relations,
                              const std::vector<DiagramObject>& objects) {
  auto objs = objects;
  std::sort(objs.begin(), objs.end());
  detail::RelationMatrix m(objs);
  if (auto c = m.load(relations)) throw ClosureConflict(*c);
  if (auto c = m.close()) throw ClosureConflict(*c);
  return m.to_relations();
}

bool holds(const AbstractDiagram& d, const EulRelation& r) {
  const auto* l = d.find(r.left);
  const auto* t = d.find(r.right);
  if (!l) throw UnknownObject(r.left);
  if (!t) throw UnknownObject(r.right);
  if (r.left == r.right) return r.tag == RelationTag::Inside;
  if (r.tag == RelationTag::Exclusion && l->is_point() && t->is_point()) return true;
  return d.relations().count(canonical(r)) > 0;
}

namespace {

// Some existential x of e with x⊑a and (x⊑b if b_inside else x⊢⊣b).
bool existential_witness(const AbstractDiagram& e, const std::string& a, const std::string& b,
                         bool b_inside) {
  if (!e.contains(a) || !e.contains(b)) return false;
  for (const auto& x : e.existentials()) {
    if (!holds(e, EulRelation::inside(x, a))) continue;
    bool ok = b_inside ? holds(e, EulRelation::inside(x, b)) : holds(e, EulRelation::exclusion(x, b));
    if (ok) return true;
  }
  return false;
}

bool counters_one_way(const AbstractDiagram& d, const AbstractDiagram& e) {
  for (const auto& r : d.relations()) {
    const auto* l = d.find(r.left);
    const auto* t = d.find(r.right);
    if (r.tag == RelationTag::Inside) {
      if (l->kind == ObjectKind::Constant) {
        const auto* el = e.find(r.left);
        if (el && el->kind == ObjectKind::Constant && e.contains(r.right) &&
            holds(e, EulRelation::exclusion(r.left, r.right)))
          return true;
      } else if (l->kind == ObjectKind::Circle) {
        if (existential_witness(e, r.left, r.right, false)) return true;
      }
    } else if (r.tag == RelationTag::Exclusion && !l->is_point() && !t->is_point()) {
      if (existential_witness(e, r.left, r.right, true)) return true;
    }
  }
  return false;
}

}  // namespace

bool is_counter_diagram(const AbstractDiagram& d, const AbstractDiagram& e) {
  return counters_one_way(d, e) || counters_one_way(e, d);
}

AbstractDiagram delete_object(const AbstractDiagram& d, const std::string& name) {
  if (!d.contains(name)) throw UnknownObject(name);
  if (d.objects().size() == 1) throw EmptyDiagram();
  std::vector<DiagramObject> objs;
  for (const auto& o : d.objects())
    if (o.name != name) objs.push_back(o);
  std::set<EulRelation> rels;
  for (const auto& r : d.relations())
    if (!r.mentions(name)) rels.insert(r);
  return make_diagram(std::move(objs), std::move(rels));
}

}  // namespace euler
