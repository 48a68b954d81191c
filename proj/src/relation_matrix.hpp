#pragma once

// Index-based working form of a relation set, used by closure, unification
// and point insertion. Not part of the public API.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "euler/diagram.hpp"

namespace euler::detail {

// Relation of object i to object j.
enum class Cell : std::uint8_t { Unknown, In, Contains, Ex, Cr };

inline Cell flip(Cell c) {
  if (c == Cell::In) return Cell::Contains;
  if (c == Cell::Contains) return Cell::In;
  return c;
}

class RelationMatrix {
 public:
  explicit RelationMatrix(std::vector<DiagramObject> objects);

  std::size_t size() const { return objects_.size(); }
  const std::vector<DiagramObject>& objects() const { return objects_; }
  const DiagramObject& object(std::size_t i) const { return objects_[i]; }
  bool is_point(std::size_t i) const { return objects_[i].is_point(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Cell get(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Cell c) {
    cells_[i * n_ + j] = c;
    cells_[j * n_ + i] = flip(c);
  }

  EulRelation relation(std::size_t i, std::size_t j, Cell c) const;

  /// Loads relations; Exclusion between two points is skipped. Returns the
  /// first pair that receives two different relations, if any.
  std::optional<ConflictInfo> load(const std::set<EulRelation>& rels, bool skip_crossings = false);

  /// Runs R1..R5 to a fixpoint. Returns the first conflict, if any.
  std::optional<ConflictInfo> close();

  std::set<EulRelation> to_relations() const;

 private:
  std::optional<ConflictInfo> derive(std::size_t i, std::size_t j, Cell c, const char* rule,
                                     bool& changed);

  std::vector<DiagramObject> objects_;
  std::size_t n_;
  std::vector<Cell> cells_;
};

}  // namespace euler::detail
