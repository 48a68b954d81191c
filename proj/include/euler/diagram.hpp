#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "euler/error.hpp"

namespace euler {

enum class ObjectKind { Circle, Constant, Existential };

inline bool is_point(ObjectKind kind) { return kind != ObjectKind::Circle; }

const char* to_string(ObjectKind kind);

/// A named circle or point. Names are unique across kinds within a diagram.
struct DiagramObject {
  ObjectKind kind = ObjectKind::Circle;
  std::string name;

  static DiagramObject circle(std::string name) { return {ObjectKind::Circle, std::move(name)}; }
  static DiagramObject constant(std::string name) { return {ObjectKind::Constant, std::move(name)}; }
  static DiagramObject existential(std::string name) {
    return {ObjectKind::Existential, std::move(name)};
  }

  bool is_point() const { return euler::is_point(kind); }

  // Objects order by name first so that object lists read alphabetically.
  friend auto operator<=>(const DiagramObject& a, const DiagramObject& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.kind <=> b.kind;
  }
  friend bool operator==(const DiagramObject&, const DiagramObject&) = default;
};

/// Circle names start with an uppercase letter, point names with a lowercase
/// one; the rest is letters and digits.
bool is_circle_name(const std::string& name);
bool is_point_name(const std::string& name);

enum class RelationTag { Inside, Exclusion, Crossing };

/// One EUL-relation. Inside is oriented (left is inside right); Exclusion and
/// Crossing are symmetric and kept with left < right.
struct EulRelation {
  RelationTag tag = RelationTag::Inside;
  std::string left;
  std::string right;

  static EulRelation inside(std::string s, std::string t) {
    return {RelationTag::Inside, std::move(s), std::move(t)};
  }
  static EulRelation exclusion(std::string s, std::string t);
  static EulRelation crossing(std::string a, std::string b);

  bool mentions(const std::string& name) const { return left == name || right == name; }

  friend auto operator<=>(const EulRelation& a, const EulRelation& b) {
    if (auto c = a.left <=> b.left; c != 0) return c;
    if (auto c = a.right <=> b.right; c != 0) return c;
    return a.tag <=> b.tag;
  }
  friend bool operator==(const EulRelation&, const EulRelation&) = default;
};

/// Puts a symmetric relation into canonical orientation.
EulRelation canonical(EulRelation r);

/// Human-readable form, e.g. "x⊑A", "A⊢⊣B", "A▷◁C". Point-circle exclusions
/// print point first.
std::string to_string(const EulRelation& r);
std::string to_string(const std::set<EulRelation>& rels);

/// Thrown by make_diagram. `invariant` is one of TOTALITY-CC, TOTALITY-PC,
/// TOTALITY-PP, CLOSURE-R1..R5, ASYMMETRY, NAMES, SELF-RELATION,
/// UNKNOWN-OBJECT, RELATION-KIND.
class WellFormednessError : public Error {
 public:
  WellFormednessError(std::string invariant, std::string a, std::string b);
  const std::string& invariant() const noexcept { return invariant_; }
  const std::pair<std::string, std::string>& pair() const noexcept { return pair_; }

 private:
  std::string invariant_;
  std::pair<std::string, std::string> pair_;
};

struct ConflictInfo {
  std::string a, b;
  EulRelation existing;
  EulRelation derived;
  std::string rule;  // closure rule that produced `derived`
};

/// Closure derived two different relations for one pair.
class ClosureConflict : public Error {
 public:
  explicit ClosureConflict(ConflictInfo info);
  const ConflictInfo& info() const noexcept { return info_; }

 private:
  ConflictInfo info_;
};

class EmptyDiagram : public Error {
 public:
  EmptyDiagram() : Error("deletion would leave an empty diagram") {}
};

/// Abstract EUL-diagram: an object set plus its relation set rel(D).
///
/// Values are immutable and always well-formed. Every pair of circles carries
/// exactly one relation and every point-circle pair carries Inside or
/// Exclusion. The set is closed under the realizability rules. Point-point
/// exclusions and reflexive Inside are implicit and never stored.
class AbstractDiagram {
 public:
  const std::vector<DiagramObject>& objects() const noexcept { return objects_; }
  const std::set<EulRelation>& relations() const noexcept { return relations_; }

  /// rel(D) with the implicit point-point exclusions included.
  std::set<EulRelation> relations_with_implicit() const;

  bool contains(const std::string& name) const { return find(name) != nullptr; }
  const DiagramObject* find(const std::string& name) const;

  std::vector<std::string> circles() const;
  std::vector<std::string> points() const;
  std::vector<std::string> constants() const;
  std::vector<std::string> existentials() const;

  /// The stored relation on the unordered pair {a, b}, if any.
  std::optional<EulRelation> relation_between(const std::string& a, const std::string& b) const;

  friend bool operator==(const AbstractDiagram&, const AbstractDiagram&) = default;

 private:
  friend AbstractDiagram make_diagram(std::vector<DiagramObject>, std::set<EulRelation>);

  std::vector<DiagramObject> objects_;  // sorted, unique names
  std::set<EulRelation> relations_;
};

/// Validates and builds a diagram. Symmetric relations are canonicalized and
/// explicit point-point exclusions are dropped before checking.
/// Throws WellFormednessError naming the first violated invariant.
AbstractDiagram make_diagram(std::vector<DiagramObject> objects, std::set<EulRelation> relations);

/// Least superset of `relations` closed under the realizability rules:
///   R1  s⊑A, A⊑B      ⟹ s⊑B   (circles; R3 when s is a point)
///   R2  s⊑A, A⊢⊣t     ⟹ s⊢⊣t  (R4 when s is a point, R5 when t is a point)
/// Throws ClosureConflict when two different relations end up on one pair,
/// including s⊢⊣s and the two orientations of Inside.
std::set<EulRelation> closure(const std::set<EulRelation>& relations,
                              const std::vector<DiagramObject>& objects);

/// True iff r ∈ rel(d), with reflexive Inside and point-point exclusion
/// synthesized. Throws UnknownObject.
bool holds(const AbstractDiagram& d, const EulRelation& r);

/// Counter-diagram test in either orientation: a⊑B against a⊢⊣B for a
/// constant a; A⊑B against some existential x with x⊑A, x⊢⊣B; A⊢⊣B against
/// some existential x with x⊑A, x⊑B.
bool is_counter_diagram(const AbstractDiagram& d, const AbstractDiagram& e);

/// Restriction of d to objects other than `name`.
/// Throws UnknownObject, EmptyDiagram.
AbstractDiagram delete_object(const AbstractDiagram& d, const std::string& name);

}  // namespace euler
