#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "euler/diagram.hpp"
#include "euler/sentence.hpp"

namespace euler {

struct CorpusOptions {
  unsigned circles = 3;    // predicates A, B, C, D (at most 4)
  unsigned constants = 1;  // constants a, b, ...
  unsigned premises = 3;   // each inference draws 0..premises premises
  std::size_t count = 100;
  std::uint64_t seed = 0;
  bool consistent_only = false;
};

class CorpusBoundError : public Error {
 public:
  using Error::Error;
};

struct CorpusRecord {
  std::size_t id = 0;
  Inference inference;
  bool oracle_valid = false;
  bool consistent = false;
};

/// Deterministic stream of random inferences annotated with the oracle
/// verdict. The same options always give the same records.
/// Throws CorpusBoundError for out-of-range options.
std::vector<CorpusRecord> generate_corpus(const CorpusOptions& options);

/// Uniform choice among the sentence forms expressible with the given names.
Sentence random_sentence(std::mt19937_64& rng, unsigned circles, unsigned constants);

/// Well-formed diagram over the given names, drawn by rejection: every pair
/// gets a uniformly chosen relation until make_diagram accepts.
AbstractDiagram random_diagram(std::mt19937_64& rng, const std::vector<std::string>& circles,
                               const std::vector<std::string>& constants,
                               const std::vector<std::string>& existentials);

}  // namespace euler
