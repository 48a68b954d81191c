#pragma once

#include <set>
#include <string>
#include <vector>

#include "euler/diagram.hpp"

namespace euler {

enum class Form { ConstIs, ConstIsNot, SomethingIs, SomethingIsNot, All, No, Some, SomeNot };

/// One extended syllogistic sentence. `subject` holds the constant of
/// ConstIs/ConstIsNot or the subject predicate of All/No/Some/SomeNot; the
/// "There is something" forms leave it empty.
struct Sentence {
  Form form = Form::All;
  std::string subject;
  std::string predicate;

  static Sentence const_is(std::string a, std::string b) { return {Form::ConstIs, std::move(a), std::move(b)}; }
  static Sentence const_is_not(std::string a, std::string b) {
    return {Form::ConstIsNot, std::move(a), std::move(b)};
  }
  static Sentence something_is(std::string b) { return {Form::SomethingIs, {}, std::move(b)}; }
  static Sentence something_is_not(std::string b) { return {Form::SomethingIsNot, {}, std::move(b)}; }
  static Sentence all(std::string a, std::string b) { return {Form::All, std::move(a), std::move(b)}; }
  static Sentence no(std::string a, std::string b) { return {Form::No, std::move(a), std::move(b)}; }
  static Sentence some(std::string a, std::string b) { return {Form::Some, std::move(a), std::move(b)}; }
  static Sentence some_not(std::string a, std::string b) {
    return {Form::SomeNot, std::move(a), std::move(b)};
  }

  bool has_constant_subject() const { return form == Form::ConstIs || form == Form::ConstIsNot; }
  bool has_predicate_subject() const {
    return form == Form::All || form == Form::No || form == Form::Some || form == Form::SomeNot;
  }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Inference {
  std::vector<Sentence> premises;
  Sentence conclusion;

  friend bool operator==(const Inference&, const Inference&) = default;
};

/// Predicates (circle names) mentioned by a sentence or inference.
std::set<std::string> predicates_of(const Sentence& s);
std::set<std::string> predicates_of(const Inference& inf);
std::set<std::string> constants_of(const Sentence& s);
std::set<std::string> constants_of(const Inference& inf);

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, std::string found);
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Grammar (keywords case-sensitive, whitespace-insensitive):
///   All P are P | No P are P | Some P are P | Some P are not P
///   c is P | c is not P | There is something P | There is something not P
/// P starts uppercase, c starts lowercase, both continue with letters/digits.
Sentence parse_sentence(const std::string& text);

/// Premises separated by ';' or newlines, then "|=", then the conclusion.
Inference parse_inference(const std::string& text);

std::string to_string(const Sentence& s);
std::string to_string(const Inference& inf);

/// Hands out existential point names prefix1, prefix2, ... skipping names
/// already taken.
class NameSupply {
 public:
  explicit NameSupply(std::string prefix = "x", std::set<std::string> taken = {});
  std::string next();
  void reserve(const std::string& name) { taken_.insert(name); }

 private:
  std::string prefix_;
  std::set<std::string> taken_;
  unsigned counter_ = 0;
};

/// The fixed diagram of a sentence: All ↦ {A⊑B}, No ↦ {A⊢⊣B},
/// Some ↦ {x⊑A, x⊑B, A▷◁B}, SomeNot ↦ {x⊑A, x⊢⊣B, A▷◁B}, a is B ↦ {a⊑B},
/// a is not B ↦ {a⊢⊣B}, something B ↦ {x⊑B}, something not B ↦ {x⊢⊣B}.
AbstractDiagram canonical_diagram(const Sentence& s, NameSupply& fresh);

struct HoldsResult {
  bool holds = false;
  std::vector<std::string> missing;  // names of s absent from the diagram
};

/// Truth of a sentence read off a diagram. Existential forms need an
/// existential point witness. Missing vocabulary yields false.
HoldsResult sentence_holds_checked(const AbstractDiagram& d, const Sentence& s);
inline bool sentence_holds(const AbstractDiagram& d, const Sentence& s) {
  return sentence_holds_checked(d, s).holds;
}

}  // namespace euler
