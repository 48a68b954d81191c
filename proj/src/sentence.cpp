#include "euler/sentence.hpp"

#include <cctype>

namespace euler {

std::set<std::string> predicates_of(const Sentence& s) {
  std::set<std::string> out{s.predicate};
  if (s.has_predicate_subject()) out.insert(s.subject);
  return out;
}

std::set<std::string> predicates_of(const Inference& inf) {
  auto out = predicates_of(inf.conclusion);
  for (const auto& p : inf.premises) out.merge(predicates_of(p));
  return out;
}

std::set<std::string> constants_of(const Sentence& s) {
  if (s.has_constant_subject()) return {s.subject};
  return {};
}

std::set<std::string> constants_of(const Inference& inf) {
  auto out = constants_of(inf.conclusion);
  for (const auto& p : inf.premises) out.merge(constants_of(p));
  return out;
}

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : Error("parse error at byte " + std::to_string(offset) + ": expected " + join(expected) +
            ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Word, Semi, Newline, Entails, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(const std::string& text, bool newline_is_separator) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = text[i];
    if (c == '\n' && newline_is_separator) {
      out.push_back({Tok::Newline, "\n", i++});
    } else if (std::isspace(c)) {
      ++i;
    } else if (c == ';') {
      out.push_back({Tok::Semi, ";", i++});
    } else if (c == '|' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({Tok::Entails, "|=", i});
      i += 2;
    } else if (std::isalpha(c)) {
      std::size_t start = i;
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Word, text.substr(start, i - start), start});
    } else {
      throw ParseError(i, {"word", "';'", "'|='"}, std::string("'") + text[i] + "'");
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

const std::set<std::string> kReservedUpper{"All", "No", "Some", "There"};
const std::set<std::string> kReservedLower{"is", "are", "not", "something"};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Word: return "'" + t.text + "'";
    case Tok::Semi: return "';'";
    case Tok::Newline: return "newline";
    case Tok::Entails: return "'|='";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  bool at_word(const char* w) const { return at(Tok::Word) && peek().text == w; }

  void expect_word(const char* w) {
    if (!at_word(w)) fail({std::string("'") + w + "'"});
    ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().offset, std::move(expected), describe(peek()));
  }

  std::string predicate() {
    const auto& t = peek();
    if (t.kind != Tok::Word || !is_circle_name(t.text) || kReservedUpper.count(t.text))
      fail({"predicate"});
    return take().text;
  }

  std::string predicate_other_than(const std::string& subject) {
    std::size_t off = peek().offset;
    auto p = predicate();
    if (p == subject) throw ParseError(off, {"predicate other than " + subject}, "'" + p + "'");
    return p;
  }

  static std::vector<std::string> sentence_starts() {
    return {"'All'", "'No'", "'Some'", "'There'", "constant"};
  }

  Sentence sentence() {
    if (at_word("All") || at_word("No")) {
      bool all = take().text == "All";
      auto a = predicate();
      expect_word("are");
      auto b = predicate_other_than(a);
      return all ? Sentence::all(a, b) : Sentence::no(a, b);
    }
    if (at_word("Some")) {
      take();
      auto a = predicate();
      expect_word("are");
      bool negated = at_word("not");
      if (negated) take();
      auto b = predicate_other_than(a);
      return negated ? Sentence::some_not(a, b) : Sentence::some(a, b);
    }
    if (at_word("There")) {
      take();
      expect_word("is");
      expect_word("something");
      bool negated = at_word("not");
      if (negated) take();
      auto b = predicate();
      return negated ? Sentence::something_is_not(b) : Sentence::something_is(b);
    }
    if (at(Tok::Word) && is_point_name(peek().text) && !kReservedLower.count(peek().text)) {
      auto a = take().text;
      expect_word("is");
      bool negated = at_word("not");
      if (negated) take();
      auto b = predicate();
      return negated ? Sentence::const_is_not(a, b) : Sentence::const_is(a, b);
    }
    fail(sentence_starts());
  }

  bool at_separator() const { return at(Tok::Semi) || at(Tok::Newline); }
  void skip_separators() {
    while (at_separator()) ++pos_;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Sentence parse_sentence(const std::string& text) {
  Parser p(tokenize(text, false));
  auto s = p.sentence();
  if (!p.at(Tok::End)) p.fail({"end of input"});
  return s;
}

Inference parse_inference(const std::string& text) {
  Parser p(tokenize(text, true));
  Inference inf;
  p.skip_separators();
  while (!p.at(Tok::Entails)) {
    if (p.at(Tok::End)) p.fail({"'|='"});
    inf.premises.push_back(p.sentence());
    if (p.at(Tok::Entails)) break;
    if (!p.at_separator()) p.fail({"';'", "newline", "'|='"});
    p.skip_separators();
  }
  p.take();  // |=
  while (p.at(Tok::Newline)) p.take();
  inf.conclusion = p.sentence();
  p.skip_separators();
  if (!p.at(Tok::End)) p.fail({"end of input"});
  return inf;
}

std::string to_string(const Sentence& s) {
  switch (s.form) {
    case Form::ConstIs: return s.subject + " is " + s.predicate;
    case Form::ConstIsNot: return s.subject + " is not " + s.predicate;
    case Form::SomethingIs: return "There is something " + s.predicate;
    case Form::SomethingIsNot: return "There is something not " + s.predicate;
    case Form::All: return "All " + s.subject + " are " + s.predicate;
    case Form::No: return "No " + s.subject + " are " + s.predicate;
    case Form::Some: return "Some " + s.subject + " are " + s.predicate;
    case Form::SomeNot: return "Some " + s.subject + " are not " + s.predicate;
  }
  return "?";
}

std::string to_string(const Inference& inf) {
  std::string out;
  for (const auto& p : inf.premises) out += (out.empty() ? "" : "; ") + to_string(p);
  return out + (out.empty() ? "|= " : " |= ") + to_string(inf.conclusion);
}

NameSupply::NameSupply(std::string prefix, std::set<std::string> taken)
    : prefix_(std::move(prefix)), taken_(std::move(taken)) {}

std::string NameSupply::next() {
  for (;;) {
    auto name = prefix_ + std::to_string(++counter_);
    if (taken_.insert(name).second) return name;
  }
}

AbstractDiagram canonical_diagram(const Sentence& s, NameSupply& fresh) {
  using R = EulRelation;
  const auto& a = s.subject;
  const auto& b = s.predicate;
  auto circles2 = [&] {
    return std::vector<DiagramObject>{DiagramObject::circle(a), DiagramObject::circle(b)};
  };
  switch (s.form) {
    case Form::All: return make_diagram(circles2(), {R::inside(a, b)});
    case Form::No: return make_diagram(circles2(), {R::exclusion(a, b)});
    case Form::Some:
    case Form::SomeNot: {
      auto x = fresh.next();
      auto objs = circles2();
      objs.push_back(DiagramObject::existential(x));
      auto second = s.form == Form::Some ? R::inside(x, b) : R::exclusion(x, b);
      return make_diagram(objs, {R::inside(x, a), second, R::crossing(a, b)});
    }
    case Form::ConstIs:
    case Form::ConstIsNot: {
      std::vector<DiagramObject> objs{DiagramObject::constant(a), DiagramObject::circle(b)};
      return make_diagram(objs, {s.form == Form::ConstIs ? R::inside(a, b) : R::exclusion(a, b)});
    }
    case Form::SomethingIs:
    case Form::SomethingIsNot: {
      auto x = fresh.next();
      std::vector<DiagramObject> objs{DiagramObject::existential(x), DiagramObject::circle(b)};
      return make_diagram(objs,
                          {s.form == Form::SomethingIs ? R::inside(x, b) : R::exclusion(x, b)});
    }
  }
  throw InternalError("unhandled sentence form");
}

HoldsResult sentence_holds_checked(const AbstractDiagram& d, const Sentence& s) {
  HoldsResult res;
  auto need = [&](const std::string& name, ObjectKind kind) {
    const auto* o = d.find(name);
    if (!o || o->kind != kind) res.missing.push_back(name);
  };
  if (s.has_constant_subject()) need(s.subject, ObjectKind::Constant);
  if (s.has_predicate_subject()) need(s.subject, ObjectKind::Circle);
  need(s.predicate, ObjectKind::Circle);
  if (!res.missing.empty()) return res;

  using R = EulRelation;
  const auto& a = s.subject;
  const auto& b = s.predicate;
  auto some_point = [&](auto&& pred) {
    for (const auto& x : d.existentials())
      if (pred(x)) return true;
    return false;
  };
  switch (s.form) {
    case Form::ConstIs: res.holds = holds(d, R::inside(a, b)); break;
    case Form::ConstIsNot: res.holds = holds(d, R::exclusion(a, b)); break;
    case Form::All: res.holds = holds(d, R::inside(a, b)); break;
    case Form::No: res.holds = holds(d, R::exclusion(a, b)); break;
    case Form::Some:
      res.holds = some_point([&](const std::string& x) {
        return holds(d, R::inside(x, a)) && holds(d, R::inside(x, b));
      });
      break;
    case Form::SomeNot:
      res.holds = some_point([&](const std::string& x) {
        return holds(d, R::inside(x, a)) && holds(d, R::exclusion(x, b));
      });
      break;
    case Form::SomethingIs:
      res.holds = some_point([&](const std::string& x) { return holds(d, R::inside(x, b)); });
      break;
    case Form::SomethingIsNot:
      res.holds = some_point([&](const std::string& x) { return holds(d, R::exclusion(x, b)); });
      break;
  }
  return res;
}

}  // namespace euler
