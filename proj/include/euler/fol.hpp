#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "euler/diagram.hpp"
#include "euler/semantics.hpp"

namespace euler {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Monadic first-order formula. Atoms apply one predicate to one term (a
/// variable or a constant); quantifiers bind a single variable.
struct Formula {
  enum class Kind { True, Atom, Not, And, Implies, Forall, Exists };

  Kind kind = Kind::True;
  std::string symbol;  // predicate (Atom) or bound variable (Forall/Exists)
  std::string term;    // argument of an Atom
  std::vector<FormulaPtr> args;

  static FormulaPtr truth();
  static FormulaPtr atom(std::string predicate, std::string term);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conjunction(std::vector<FormulaPtr> fs);
  static FormulaPtr implication(FormulaPtr a, FormulaPtr b);
  static FormulaPtr forall(std::string var, FormulaPtr body);
  static FormulaPtr exists(std::string var, FormulaPtr body);
};

bool operator==(const Formula& a, const Formula& b);

class Unsupported : public Error {
 public:
  using Error::Error;
};

/// p⊑A ↦ A(p), p⊢⊣A ↦ ¬A(p), A⊑B ↦ ∀x(A(x)→B(x)), A⊢⊣B ↦ ∀x(A(x)→¬B(x)),
/// A▷◁B ↦ ∀x((A(x)→A(x)) ∧ (B(x)→B(x))). Point-point exclusion throws
/// Unsupported (the language has no equality). `var` names the bound
/// variable of universal formulas.
FormulaPtr translate_relation(const EulRelation& r, const std::string& var = "x");

/// Relations without existential points in canonical order, then one
/// ∃x(±A1(x) ∧ ... ∧ ±Ak(x)) per existential point in name order. A diagram
/// without such relations or points translates to ⊤.
FormulaPtr translate_diagram(const AbstractDiagram& d);

/// ASCII rendering: forall x. (A(x) -> B(x)), ~A(a), exists x1. (A(x1) & B(x1)).
std::string emit_plain(const FormulaPtr& f);

/// TPTP FOF rendering of a single formula, names mapped by `names`.
struct TptpNames {
  std::map<std::string, std::string> predicates;
  std::map<std::string, std::string> constants;
};
TptpNames tptp_names(const std::vector<std::string>& predicates,
                     const std::vector<std::string>& constants);
std::string emit_tptp_formula(const FormulaPtr& f, const TptpNames& names);

/// One "fof(axN, axiom, ...)." line per top-level conjunct, followed by one
/// "fof(import_b, axiom, ? [X] : b(X))." line per circle.
std::string emit_tptp(const FormulaPtr& f, const std::vector<std::string>& circles,
                      const std::vector<std::string>& constants);
std::string emit_tptp(const AbstractDiagram& d);

enum class Dialect { Plain, Tptp };
std::string emit(const AbstractDiagram& d, Dialect dialect);

// ---------------------------------------------------------------------------
// TPTP reading, used to check that emitted text is well-formed.

class TptpParseError : public Error {
 public:
  TptpParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct TptpClause {
  std::string name;
  std::string role;
  FormulaPtr formula;
};

/// Parses a sequence of fof(name, role, formula). clauses. Supports ~, &, |,
/// =>, <=>, ! [X] :, ? [X] :, $true, $false, parentheses and unary atoms.
/// Disjunction and equivalence are rejected with TptpParseError because the
/// Formula type has no node for them.
std::vector<TptpClause> parse_tptp(const std::string& text);

// ---------------------------------------------------------------------------

/// Truth of a closed formula on a cell profile. Quantifiers range over the
/// inhabited cells; predicates and constants must belong to the profile.
bool eval_formula(const FormulaPtr& f, const CellProfile& p);

}  // namespace euler
