#include "euler/fol.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace euler {

FormulaPtr Formula::truth() { return std::make_shared<Formula>(); }

FormulaPtr Formula::atom(std::string predicate, std::string term) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Atom;
  f->symbol = std::move(predicate);
  f->term = std::move(term);
  return f;
}

FormulaPtr Formula::negation(FormulaPtr g) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Not;
  f->args = {std::move(g)};
  return f;
}

FormulaPtr Formula::conjunction(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return truth();
  if (fs.size() == 1) return fs.front();
  auto f = std::make_shared<Formula>();
  f->kind = Kind::And;
  f->args = std::move(fs);
  return f;
}

FormulaPtr Formula::implication(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Implies;
  f->args = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Forall;
  f->symbol = std::move(var);
  f->args = {std::move(body)};
  return f;
}

FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Exists;
  f->symbol = std::move(var);
  f->args = {std::move(body)};
  return f;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.symbol != b.symbol || a.term != b.term || a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------

FormulaPtr translate_relation(const EulRelation& r, const std::string& var) {
  using F = Formula;
  bool lp = is_point_name(r.left);
  bool tp = is_point_name(r.right);
  if (lp && tp) throw Unsupported("point-point exclusion " + to_string(r) + " has no translation");
  if (lp || tp) {
    const auto& p = lp ? r.left : r.right;
    const auto& c = lp ? r.right : r.left;
    auto a = F::atom(c, p);
    return r.tag == RelationTag::Inside ? a : F::negation(a);
  }
  auto A = F::atom(r.left, var);
  auto B = F::atom(r.right, var);
  switch (r.tag) {
    case RelationTag::Inside: return F::forall(var, F::implication(A, B));
    case RelationTag::Exclusion: return F::forall(var, F::implication(A, F::negation(B)));
    case RelationTag::Crossing:
      return F::forall(var, F::conjunction({F::implication(A, A), F::implication(B, B)}));
  }
  throw InternalError("unhandled relation tag");
}

FormulaPtr translate_diagram(const AbstractDiagram& d) {
  std::string var = "x";
  while (d.contains(var)) var += "0";

  std::vector<FormulaPtr> conjuncts;
  for (const auto& r : d.relations()) {
    bool existential = (d.find(r.left)->kind == ObjectKind::Existential) ||
                       (d.find(r.right)->kind == ObjectKind::Existential);
    if (!existential) conjuncts.push_back(translate_relation(r, var));
  }
  for (const auto& x : d.existentials()) {
    std::vector<FormulaPtr> literals;
    for (const auto& c : d.circles()) {
      auto a = Formula::atom(c, x);
      literals.push_back(holds(d, EulRelation::inside(x, c)) ? a : Formula::negation(a));
    }
    conjuncts.push_back(Formula::exists(x, Formula::conjunction(std::move(literals))));
  }
  return Formula::conjunction(std::move(conjuncts));
}

// ---------------------------------------------------------------------------

namespace {

struct Syntax {
  const char* truth;
  const char* neg;
  const char* conj;
  const char* impl;
  std::function<std::string(const std::string&)> quantifier_prefix_all;
  std::function<std::string(const std::string&)> quantifier_prefix_some;
  std::function<std::string(const std::string&)> predicate;
  std::function<std::string(const std::string&, bool bound)> term;
};

bool is_quantifier(const Formula& f) {
  return f.kind == Formula::Kind::Forall || f.kind == Formula::Kind::Exists;
}

std::string render(const Formula& f, const Syntax& s, const std::set<std::string>& bound, bool top) {
  using K = Formula::Kind;
  auto operand = [&](const Formula& g) {
    auto text = render(g, s, bound, false);
    return is_quantifier(g) ? "(" + text + ")" : text;
  };
  switch (f.kind) {
    case K::True: return s.truth;
    case K::Atom: return s.predicate(f.symbol) + "(" + s.term(f.term, bound.count(f.term) > 0) + ")";
    case K::Not: return s.neg + operand(*f.args[0]);
    case K::And: {
      std::string out;
      for (const auto& a : f.args) out += (out.empty() ? "" : s.conj) + operand(*a);
      return top ? out : "(" + out + ")";
    }
    case K::Implies: {
      auto out = operand(*f.args[0]) + s.impl + operand(*f.args[1]);
      return top ? out : "(" + out + ")";
    }
    case K::Forall:
    case K::Exists: {
      auto inner = bound;
      inner.insert(f.symbol);
      auto prefix = f.kind == K::Forall ? s.quantifier_prefix_all(f.symbol)
                                        : s.quantifier_prefix_some(f.symbol);
      return prefix + render(*f.args[0], s, inner, false);
    }
  }
  return "?";
}

std::string upper_first(std::string v) {
  if (!v.empty()) v[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(v[0])));
  return v;
}

std::string lower(std::string v) {
  for (auto& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return v;
}

void collect(const Formula& f, std::set<std::string>& preds, std::set<std::string>& consts,
             std::set<std::string> bound) {
  if (f.kind == Formula::Kind::Atom) {
    preds.insert(f.symbol);
    if (!bound.count(f.term)) consts.insert(f.term);
    return;
  }
  if (is_quantifier(f)) bound.insert(f.symbol);
  for (const auto& a : f.args) collect(*a, preds, consts, bound);
}

}  // namespace

std::string emit_plain(const FormulaPtr& f) {
  Syntax s{"true",
           "~",
           " & ",
           " -> ",
           [](const std::string& v) { return "forall " + v + ". "; },
           [](const std::string& v) { return "exists " + v + ". "; },
           [](const std::string& p) { return p; },
           [](const std::string& t, bool) { return t; }};
  return render(*f, s, {}, true);
}

TptpNames tptp_names(const std::vector<std::string>& predicates,
                     const std::vector<std::string>& constants) {
  std::set<std::string> lowered_constants;
  for (const auto& c : constants) lowered_constants.insert(lower(c));
  bool clash = std::any_of(predicates.begin(), predicates.end(),
                           [&](const std::string& p) { return lowered_constants.count(lower(p)); });
  TptpNames n;
  std::set<std::string> used;
  for (const auto& p : predicates) {
    auto base = (clash ? "p_" : "") + lower(p);
    auto name = base;
    for (unsigned i = 1; used.count(name); ++i) name = base + "_" + std::to_string(i);
    used.insert(name);
    n.predicates[p] = name;
  }
  for (const auto& c : constants) n.constants[c] = (clash ? "c_" : "") + c;
  return n;
}

std::string emit_tptp_formula(const FormulaPtr& f, const TptpNames& names) {
  auto mapped = [](const std::map<std::string, std::string>& m, const std::string& k) {
    auto it = m.find(k);
    return it == m.end() ? k : it->second;
  };
  Syntax s{"$true",
           "~ ",
           " & ",
           " => ",
           [](const std::string& v) { return "! [" + upper_first(v) + "] : "; },
           [](const std::string& v) { return "? [" + upper_first(v) + "] : "; },
           [&](const std::string& p) { return mapped(names.predicates, p); },
           [&](const std::string& t, bool bound) {
             return bound ? upper_first(t) : mapped(names.constants, t);
           }};
  return render(*f, s, {}, true);
}

std::string emit_tptp(const FormulaPtr& f, const std::vector<std::string>& circles,
                      const std::vector<std::string>& constants) {
  std::set<std::string> preds(circles.begin(), circles.end());
  std::set<std::string> consts(constants.begin(), constants.end());
  collect(*f, preds, consts, {});
  auto names = tptp_names({preds.begin(), preds.end()}, {consts.begin(), consts.end()});

  std::vector<FormulaPtr> conjuncts;
  if (f->kind == Formula::Kind::And) conjuncts = f->args;
  else if (f->kind != Formula::Kind::True) conjuncts = {f};

  std::string out;
  for (std::size_t i = 0; i < conjuncts.size(); ++i)
    out += "fof(ax" + std::to_string(i + 1) + ", axiom, " + emit_tptp_formula(conjuncts[i], names) + ").\n";
  for (const auto& p : preds) {
    const auto& n = names.predicates.at(p);
    out += "fof(import_" + n + ", axiom, ? [X] : " + n + "(X)).\n";
  }
  return out;
}

std::string emit_tptp(const AbstractDiagram& d) {
  return emit_tptp(translate_diagram(d), d.circles(), d.constants());
}

std::string emit(const AbstractDiagram& d, Dialect dialect) {
  if (dialect == Dialect::Tptp) return emit_tptp(d);
  return emit_plain(translate_diagram(d)) + "\n";
}

// ---------------------------------------------------------------------------

TptpParseError::TptpParseError(std::size_t offset, const std::string& what)
    : Error("TPTP parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

namespace {

class TptpReader {
 public:
  explicit TptpReader(const std::string& text) : text_(text) {}

  std::vector<TptpClause> clauses() {
    std::vector<TptpClause> out;
    skip_space();
    while (pos_ < text_.size()) {
      expect_word("fof");
      expect("(");
      TptpClause c;
      c.name = lower_word();
      expect(",");
      c.role = lower_word();
      expect(",");
      c.formula = formula();
      expect(")");
      expect(".");
      out.push_back(std::move(c));
      skip_space();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw TptpParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(const std::string& s) {
    skip_space();
    return text_.compare(pos_, s.size(), s) == 0;
  }

  void expect(const std::string& s) {
    if (!peek(s)) fail("expected '" + s + "'");
    pos_ += s.size();
  }

  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  std::string lower_word() {
    auto w = word();
    if (!std::islower(static_cast<unsigned char>(w[0]))) {
      pos_ -= w.size();
      fail("expected a lower-case name");
    }
    return w;
  }

  std::string variable() {
    auto w = word();
    if (!std::isupper(static_cast<unsigned char>(w[0]))) {
      pos_ -= w.size();
      fail("expected a variable");
    }
    return w;
  }

  void expect_word(const std::string& w) {
    auto got = word();
    if (got != w) fail("expected '" + w + "'");
  }

  // formula := unitary ( ("&" unitary)+ | "=>" unitary )?
  FormulaPtr formula() {
    auto first = unitary();
    if (peek("&")) {
      std::vector<FormulaPtr> parts{first};
      while (peek("&")) {
        expect("&");
        parts.push_back(unitary());
      }
      return Formula::conjunction(std::move(parts));
    }
    if (peek("=>")) {
      expect("=>");
      return Formula::implication(first, unitary());
    }
    if (peek("|") || peek("<=>") || peek("<=") || peek("<~>")) fail("unsupported connective");
    return first;
  }

  FormulaPtr unitary() {
    if (peek("~")) {
      expect("~");
      return Formula::negation(unitary());
    }
    if (peek("(")) {
      expect("(");
      auto f = formula();
      expect(")");
      return f;
    }
    if (peek("!") || peek("?")) {
      bool all = peek("!");
      pos_ += 1;
      expect("[");
      auto v = variable();
      if (peek(",")) fail("only one variable per quantifier is supported");
      expect("]");
      expect(":");
      auto body = unitary();
      return all ? Formula::forall(v, body) : Formula::exists(v, body);
    }
    if (peek("$true")) {
      pos_ += 5;
      return Formula::truth();
    }
    if (peek("$false")) fail("$false is not supported");
    auto p = lower_word();
    expect("(");
    auto t = word();
    if (peek(",")) fail("only unary predicates are supported");
    expect(")");
    return Formula::atom(p, t);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<TptpClause> parse_tptp(const std::string& text) { return TptpReader(text).clauses(); }

// ---------------------------------------------------------------------------

namespace {

bool eval_at(const Formula& f, const CellProfile& p, const std::map<std::string, unsigned>& env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True: return true;
    case K::Atom: {
      auto it = std::find(p.predicates.begin(), p.predicates.end(), f.symbol);
      if (it == p.predicates.end()) throw UninterpretedName(f.symbol);
      unsigned bit = static_cast<unsigned>(it - p.predicates.begin());
      unsigned cell;
      if (auto e = env.find(f.term); e != env.end()) {
        cell = e->second;
      } else if (auto c = p.constant_cells.find(f.term); c != p.constant_cells.end()) {
        cell = c->second;
      } else {
        throw UninterpretedName(f.term);
      }
      return (cell >> bit) & 1u;
    }
    case K::Not: return !eval_at(*f.args[0], p, env);
    case K::And:
      return std::all_of(f.args.begin(), f.args.end(),
                         [&](const FormulaPtr& a) { return eval_at(*a, p, env); });
    case K::Implies: return !eval_at(*f.args[0], p, env) || eval_at(*f.args[1], p, env);
    case K::Forall:
    case K::Exists: {
      bool all = f.kind == K::Forall;
      for (unsigned c = 0; c < 32; ++c) {
        if (!((p.inhabited >> c) & 1u)) continue;
        auto inner = env;
        inner[f.symbol] = c;
        bool v = eval_at(*f.args[0], p, inner);
        if (all && !v) return false;
        if (!all && v) return true;
      }
      return all;
    }
  }
  return false;
}

}  // namespace

bool eval_formula(const FormulaPtr& f, const CellProfile& p) { return eval_at(*f, p, {}); }

}  // namespace euler
