#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "euler/diagram.hpp"
#include "euler/gds.hpp"
#include "euler/semantics.hpp"
#include "euler/sentence.hpp"

namespace euler {

class NoFalsifiableRelation : public Error {
 public:
  NoFalsifiableRelation() : Error("diagram has no falsifiable relation") {}
};

/// Counter-diagrams of e, one per falsifiable relation, in canonical relation
/// order:
///   a⊑B ↦ {a⊢⊣B}        a⊢⊣B ↦ {a⊑B}               (constant a)
///   A⊑B ↦ {y⊑A, y⊢⊣B, A▷◁B}   A⊢⊣B ↦ {y⊑A, y⊑B, A▷◁B}   (y fresh)
///   x⊑A, x⊑B ↦ {A⊢⊣B}   x⊑A, x⊢⊣B ↦ {A⊑B}           (existential x)
/// Throws NoFalsifiableRelation when nothing qualifies.
std::vector<AbstractDiagram> counter_candidates(const AbstractDiagram& e, NameSupply& fresh);

/// Invalid Point Insertion: every way of adding point p (absent from d) with
/// the known relations `partial` (circle -> Inside/Exclusion) that closes
/// without conflict. Open circles are decided in name order, Exclusion first.
std::vector<AbstractDiagram> ipi_insert(const AbstractDiagram& d, const DiagramObject& p,
                                        const std::map<std::string, RelationTag>& partial);

/// Every existential point is pinned down by its relations to at most two
/// circles together with the circle-circle relations of e.
bool is_relational(const AbstractDiagram& e);

struct CounterModel {
  Proof proof;               // leaves: "counter" E' and the premises
  AbstractDiagram counter;   // E'
  ExtractedModel model;      // extracted from proof.conclusion()
  Sentence falsified;        // the conclusion sentence
};

enum class DisproveStatus {
  Disproved,
  CannotDisprove,
  NonRelationalConclusion,
  InconsistentPremises
};

struct DisproveResult {
  DisproveStatus status = DisproveStatus::CannotDisprove;
  std::optional<CounterModel> counter_model;
  std::size_t ipi_bound = 0;  // deepest iPI budget searched
};

/// Counter-d-proof search: unify a counter-diagram of the conclusion with all
/// premise diagrams (left-deep, every order), branching over ipi_insert when
/// determinacy blocks, with iterative deepening on the number of iPI steps.
/// The extracted model is checked against every sentence before returning.
DisproveResult disprove(const Inference& inf);

}  // namespace euler
