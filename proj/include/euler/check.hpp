#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "euler/counter.hpp"
#include "euler/gds.hpp"

namespace euler {

enum class Verdict { Valid, Invalid, Unknown };

const char* to_string(Verdict v);

struct CheckOptions {
  bool use_oracle = true;
};

/// Outcome of deciding one inference. A valid verdict carries a d-proof, an
/// invalid one a self-verified counter-model. `defect` is set when the
/// diagrammatic verdict contradicts the semantic oracle.
struct CheckReport {
  Verdict verdict = Verdict::Unknown;
  std::optional<Proof> proof;
  std::optional<CounterModel> counter;
  std::optional<bool> oracle_valid;
  bool defect = false;
  std::string note;
  std::vector<std::pair<std::string, double>> timings_ms;
};

/// prove, then disprove if no proof exists, then the oracle cross-check
/// (skipped when disabled or when the vocabulary exceeds the oracle bound).
CheckReport check(const Inference& inf, const CheckOptions& options = {});

}  // namespace euler
