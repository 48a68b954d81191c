#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "euler/diagram.hpp"
#include "euler/sentence.hpp"

namespace euler {

/// Finite set-theoretic model with existential import: every interpreted
/// predicate denotes a nonempty subset of the domain.
struct Model {
  std::set<std::string> domain;
  std::map<std::string, std::string> constants;                // I(a)
  std::map<std::string, std::set<std::string>> predicates;     // I(B)

  friend bool operator==(const Model&, const Model&) = default;
};

class UninterpretedName : public Error {
 public:
  explicit UninterpretedName(const std::string& name)
      : Error("name '" + name + "' is not interpreted by the model") {}
};

class MissingWitness : public Error {
 public:
  explicit MissingWitness(const std::string& name)
      : Error("no witness element for existential point '" + name + "'") {}
};

class InvalidModel : public Error {
 public:
  using Error::Error;
};

/// Throws InvalidModel if a value lies outside the domain or a predicate is
/// interpreted as the empty set.
void validate(const Model& m);

bool eval_sentence(const Model& m, const Sentence& s);

/// Truth of ∘(d) under m, existential points valued by `witness`. Crossing
/// is a tautology; distinct points must take distinct values.
bool eval_diagram(const Model& m, const AbstractDiagram& d,
                  const std::map<std::string, std::string>& witness);

struct ExtractedModel {
  Model model;
  std::map<std::string, std::string> witness;  // existential point -> element
};

/// One element per point, plus one witness element per point-free circle,
/// placed inside the circle and its supersets and outside everything else.
/// Circles listed in `hosts` (and their supersets) additionally receive every
/// such witness. The result satisfies d under the identity witness (checked;
/// a failure raises InternalError).
ExtractedModel extract_model(const AbstractDiagram& d, const std::vector<std::string>& hosts = {});

// ---------------------------------------------------------------------------
// Cell-level small-model oracle.

/// Maximum number of predicates the oracle enumerates (2^16 cell subsets).
inline constexpr std::size_t kOracleMaxPredicates = 4;

class VocabularyTooLarge : public Error {
 public:
  explicit VocabularyTooLarge(std::size_t k)
      : Error("vocabulary has " + std::to_string(k) + " predicates; the oracle handles at most " +
              std::to_string(kOracleMaxPredicates)) {}
};

using CellMask = std::uint32_t;  // bit c set <=> cell c selected; cell bit i <=> predicate i

/// A model up to truth of the fragment: which Boolean cells over `predicates`
/// are inhabited, and the cell of each constant. Constant cells are always
/// inhabited.
struct CellProfile {
  std::vector<std::string> predicates;
  CellMask inhabited = 0;
  std::map<std::string, unsigned> constant_cells;

  friend bool operator==(const CellProfile&, const CellProfile&) = default;
};

/// Cell profile of a model over the given predicate list.
CellProfile profile_of(const Model& m, const std::vector<std::string>& predicates);

bool profile_eval_sentence(const CellProfile& p, const Sentence& s);

/// Truth of ∘(d) on a profile: each existential point chooses any inhabited
/// cell that matches its literals. Point distinctness is not expressible here.
bool profile_satisfies_diagram(const CellProfile& p, const AbstractDiagram& d);

/// Constraint form of a conjunction of sentences/diagrams over k ≤ 4
/// predicates. Universal parts forbid cells; existential parts require some
/// inhabited cell within a mask; constants must sit in an allowed cell.
class CellConstraints {
 public:
  explicit CellConstraints(std::vector<std::string> predicates);

  const std::vector<std::string>& predicates() const { return predicates_; }
  std::size_t cell_count() const { return std::size_t{1} << predicates_.size(); }

  /// Cells in which `predicate` has the given truth value.
  CellMask cells_where(const std::string& predicate, bool value) const;

  void forbid(CellMask cells) { forbidden_ |= cells; }
  void require_some(CellMask cells) { required_.push_back(cells); }
  void restrict_constant(const std::string& c, CellMask cells);

  void add(const Sentence& s);
  void add_negation(const Sentence& s);
  void add(const AbstractDiagram& d);

  /// Truth on one concrete profile (no import check; that is a property of
  /// the profile itself). Throws UninterpretedName for unplaced constants.
  bool holds_on(const CellProfile& p) const;

  /// Whether an inhabited set E admits the constraints (import included).
  bool admits(CellMask inhabited) const;
  /// Cells in E available to constant c.
  CellMask constant_cells(const std::string& c, CellMask inhabited) const;

  std::optional<CellProfile> find_profile() const;
  bool satisfiable() const { return find_profile().has_value(); }

  /// Every satisfying profile, grouped by inhabited set: for each admitted E,
  /// the available cells of every constant (in constant name order).
  std::vector<std::pair<CellMask, std::vector<CellMask>>> profile_set() const;

 private:
  std::size_t index(const std::string& predicate) const;

  std::vector<std::string> predicates_;
  CellMask forbidden_ = 0;
  std::vector<CellMask> required_;
  std::map<std::string, CellMask> constants_;
};

/// True iff every profile over the inference vocabulary that satisfies all
/// premises satisfies the conclusion. Throws VocabularyTooLarge.
bool oracle_valid(const Inference& inf);

/// True iff some profile satisfies all the diagrams together.
/// Throws VocabularyTooLarge.
bool oracle_consistent(const std::vector<AbstractDiagram>& diagrams);

/// Same for premise sentences.
bool oracle_consistent(const std::vector<Sentence>& sentences);

}  // namespace euler
