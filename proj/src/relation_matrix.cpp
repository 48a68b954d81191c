#include "relation_matrix.hpp"

#include <algorithm>

namespace euler::detail {

RelationMatrix::RelationMatrix(std::vector<DiagramObject> objects)
    : objects_(std::move(objects)), n_(objects_.size()), cells_(n_ * n_, Cell::Unknown) {}

std::optional<std::size_t> RelationMatrix::index_of(const std::string& name) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), name,
                             [](const DiagramObject& o, const std::string& n) { return o.name < n; });
  if (it == objects_.end() || it->name != name) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

EulRelation RelationMatrix::relation(std::size_t i, std::size_t j, Cell c) const {
  const auto& a = objects_[i].name;
  const auto& b = objects_[j].name;
  switch (c) {
    case Cell::In: return EulRelation::inside(a, b);
    case Cell::Contains: return EulRelation::inside(b, a);
    case Cell::Ex: return EulRelation::exclusion(a, b);
    case Cell::Cr: return EulRelation::crossing(a, b);
    case Cell::Unknown: break;
  }
  throw InternalError("relation() on an unknown cell");
}

std::optional<ConflictInfo> RelationMatrix::load(const std::set<EulRelation>& rels,
                                                 bool skip_crossings) {
  for (const auto& r : rels) {
    auto i = index_of(r.left);
    auto j = index_of(r.right);
    if (!i) throw UnknownObject(r.left);
    if (!j) throw UnknownObject(r.right);
    if (*i == *j) continue;
    Cell c = Cell::Unknown;
    switch (r.tag) {
      case RelationTag::Inside: c = Cell::In; break;
      case RelationTag::Exclusion:
        if (is_point(*i) && is_point(*j)) continue;
        c = Cell::Ex;
        break;
      case RelationTag::Crossing:
        if (skip_crossings) continue;
        c = Cell::Cr;
        break;
    }
    Cell cur = get(*i, *j);
    if (cur == Cell::Unknown) {
      set(*i, *j, c);
    } else if (cur != c) {
      return ConflictInfo{objects_[*i].name, objects_[*j].name, relation(*i, *j, cur), r, "given"};
    }
  }
  return std::nullopt;
}

std::optional<ConflictInfo> RelationMatrix::derive(std::size_t i, std::size_t j, Cell c,
                                                   const char* rule, bool& changed) {
  Cell cur = get(i, j);
  if (cur == Cell::Unknown) {
    set(i, j, c);
    changed = true;
    return std::nullopt;
  }
  if (cur == c) return std::nullopt;
  return ConflictInfo{objects_[i].name, objects_[j].name, relation(i, j, cur), relation(i, j, c),
                      rule};
}

std::optional<ConflictInfo> RelationMatrix::close() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < n_; ++s) {
      for (std::size_t a = 0; a < n_; ++a) {
        if (a == s || is_point(a) || get(s, a) != Cell::In) continue;
        for (std::size_t t = 0; t < n_; ++t) {
          if (t == a || t == s) continue;
          Cell at = get(a, t);
          if (at == Cell::In) {
            if (auto c = derive(s, t, Cell::In, is_point(s) ? "R3" : "R1", changed)) return c;
          } else if (at == Cell::Ex) {
            if (is_point(s) && is_point(t)) continue;
            const char* rule = is_point(s) ? "R4" : (is_point(t) ? "R5" : "R2");
            if (auto c = derive(s, t, Cell::Ex, rule, changed)) return c;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::set<EulRelation> RelationMatrix::to_relations() const {
  std::set<EulRelation> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      Cell c = get(i, j);
      if (c == Cell::Unknown) continue;
      if (c == Cell::Ex && is_point(i) && is_point(j)) continue;
      out.insert(relation(i, j, c));
    }
  }
  return out;
}

}  // namespace euler::detail
