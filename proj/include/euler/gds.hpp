#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "euler/diagram.hpp"
#include "euler/sentence.hpp"

namespace euler {

enum class BlockKind { Consistency, Determinacy };

/// Why a unification was refused. For Determinacy, `point` and `circle` name
/// the first (point, circle) pair whose relation could not be derived.
struct UnifyBlocked {
  BlockKind kind = BlockKind::Consistency;
  std::string point;
  std::string circle;
  std::string message;
};

class UnifyBlockedError : public Error {
 public:
  explicit UnifyBlockedError(UnifyBlocked b) : Error(b.message), blocked_(std::move(b)) {}
  const UnifyBlocked& blocked() const noexcept { return blocked_; }

 private:
  UnifyBlocked blocked_;
};

/// Merge of two diagrams: objects are identified by name, relations are the
/// closure of both relation sets, and circle pairs left open become Crossing.
std::variant<AbstractDiagram, UnifyBlocked> try_unify(const AbstractDiagram& d1,
                                                      const AbstractDiagram& d2);

/// Throwing form of try_unify.
AbstractDiagram unify(const AbstractDiagram& d1, const AbstractDiagram& d2);

// ---------------------------------------------------------------------------
// Proof trees shared by d-proofs and counter-d-proofs.

/// Leaves are "premise", "import" (an existential-import diagram {w⊑A}) or
/// "counter" (the counter-diagram E'); inner nodes are "unify", "delete" and
/// "ipi".
enum class Rule { Premise, Import, Counter, Unify, Delete, Ipi };

const char* to_string(Rule r);

struct ProofNode {
  std::size_t id = 0;
  Rule rule = Rule::Premise;
  std::vector<std::size_t> inputs;
  AbstractDiagram diagram;
  std::string detail;
};

class Proof {
 public:
  std::size_t add(Rule rule, std::vector<std::size_t> inputs, AbstractDiagram d,
                  std::string detail = {});

  const std::vector<ProofNode>& nodes() const noexcept { return nodes_; }
  const ProofNode& node(std::size_t id) const { return nodes_.at(id); }
  std::size_t root() const { return root_; }
  void set_root(std::size_t id) { root_ = id; }
  const AbstractDiagram& conclusion() const { return nodes_.at(root_).diagram; }

  std::size_t count(Rule r) const;

 private:
  std::vector<ProofNode> nodes_;
  std::size_t root_ = 0;
};

// ---------------------------------------------------------------------------
// d-proof search.

/// Canonical diagrams of the premises, with existential names x1, x2, ... in
/// premise order (constants are never reused as existential names).
std::vector<AbstractDiagram> premise_diagrams(const Inference& inf);

/// Canonical diagram of the conclusion, with existential names z1, z2, ...
AbstractDiagram conclusion_diagram(const Inference& inf);

/// Whether `e` carries the information of the canonical conclusion diagram
/// `goal`: every circle-circle and constant-circle Inside/Exclusion of goal
/// holds on e, and every existential point of goal is matched by some point
/// of e (constants allowed) whose relations include the goal point's ones.
/// On success `matched` receives the matching points of e.
bool conclusion_reached(const AbstractDiagram& e, const AbstractDiagram& goal,
                        std::vector<std::string>* matched = nullptr);

enum class ProveStatus { Proved, NoProofFound, InconsistentPremises };

struct ProveResult {
  ProveStatus status = ProveStatus::NoProofFound;
  std::optional<Proof> proof;
  std::size_t unification_bound = 0;  // deepest bound searched
};

/// Iterative deepening over the number of unifications. Leaves are premise
/// diagrams, each used at most once, plus one existential-import diagram per
/// vocabulary circle that may only start a chain. When a unification is
/// blocked by determinacy the search may delete the offending point or circle
/// from either side first. The goal diagram is finally stripped of objects
/// the conclusion does not mention.
ProveResult prove(const Inference& inf);

}  // namespace euler
