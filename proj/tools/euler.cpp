// Command-line front end. Exit codes are part of the interface:
//   0 valid, 1 invalid, 2 unknown, 3 input error, 4 internal defect, 5 layout failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "euler/check.hpp"
#include "euler/corpus.hpp"
#include "euler/fol.hpp"
#include "euler/io.hpp"
#include "euler/layout.hpp"

namespace fs = std::filesystem;
using namespace euler;

namespace {

enum Exit { kValid = 0, kInvalid = 1, kUnknown = 2, kInputError = 3, kDefect = 4, kLayoutFailed = 5 };

struct InputError : Error {
  using Error::Error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A positional argument names a file when one exists at that path, stdin when
// it is "-", and is literal text otherwise.
std::string text_argument(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return slurp(arg);
  return arg;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("EULER_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw InputError(std::string("EULER_SEED is not an unsigned integer: ") + s);
    }
  }
  return kDefaultLayoutSeed;
}

void print_model(std::ostream& out, const Model& m) {
  out << "  domain: {";
  bool first = true;
  for (const auto& e : m.domain) out << (first ? "" : ", ") << e, first = false;
  out << "}\n";
  for (const auto& [c, e] : m.constants) out << "  " << c << " = " << e << "\n";
  for (const auto& [p, ext] : m.predicates) {
    out << "  " << p << " = {";
    first = true;
    for (const auto& e : ext) out << (first ? "" : ", ") << e, first = false;
    out << "}\n";
  }
}

std::string relations_text(const AbstractDiagram& d) {
  std::string s = "{";
  bool first = true;
  for (const auto& r : d.relations()) {
    s += (first ? "" : ", ") + to_string(r);
    first = false;
  }
  return s + "}";
}

void print_proof(std::ostream& out, const Proof& p) {
  for (const auto& n : p.nodes()) {
    out << "  [" << n.id << "] " << to_string(n.rule);
    if (!n.inputs.empty()) {
      out << "(";
      for (std::size_t i = 0; i < n.inputs.size(); ++i) out << (i ? ", " : "") << n.inputs[i];
      out << ")";
    }
    if (!n.detail.empty()) out << " " << n.detail;
    out << ": " << relations_text(n.diagram) << (n.id == p.root() ? "  <- conclusion" : "") << "\n";
  }
}

// SVGs for every node of a proof; layout failures only warn.
void render_proof(const Proof& p, const fs::path& dir, const std::string& prefix, std::uint64_t seed) {
  for (const auto& n : p.nodes()) {
    fs::path file = dir / (prefix + "_" + std::to_string(n.id) + "_" + to_string(n.rule) + ".svg");
    try {
      std::ofstream(file) << render_svg(layout(n.diagram, seed));
    } catch (const LayoutError& e) {
      std::cerr << "warning: " << file.string() << ": " << e.what() << "\n";
    }
  }
}

int cmd_check(const std::string& input, bool json, bool no_oracle, const std::string& render_dir) {
  Inference inf = parse_inference(text_argument(input));
  CheckOptions opts;
  opts.use_oracle = !no_oracle;
  CheckReport r = check(inf, opts);

  if (json) {
    std::cout << io::to_json(r).dump(2) << "\n";
  } else {
    std::cout << to_string(inf) << "\n" << "verdict: " << to_string(r.verdict) << "\n";
    if (r.proof) {
      std::cout << "d-proof:\n";
      print_proof(std::cout, *r.proof);
    }
    if (r.counter) {
      std::cout << "counter-d-proof:\n";
      print_proof(std::cout, r.counter->proof);
      std::cout << "counter-model (falsifies \"" << to_string(r.counter->falsified) << "\"):\n";
      print_model(std::cout, r.counter->model.model);
    }
    if (r.oracle_valid) {
      std::cout << "oracle: " << (*r.oracle_valid ? "valid" : "invalid");
      if (r.verdict == Verdict::Unknown) std::cout << " (semantic only, no diagrammatic derivation)";
      std::cout << "\n";
    }
    if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  }

  if (!render_dir.empty()) {
    fs::path dir(render_dir);
    fs::create_directories(dir);
    std::uint64_t seed = default_seed();
    auto premises = premise_diagrams(inf);
    for (std::size_t i = 0; i < premises.size(); ++i) {
      try {
        std::ofstream(dir / ("premise_" + std::to_string(i + 1) + ".svg")) << render_svg(layout(premises[i], seed));
      } catch (const LayoutError& e) {
        std::cerr << "warning: premise " << i + 1 << ": " << e.what() << "\n";
      }
    }
    if (r.proof) render_proof(*r.proof, dir, "proof", seed);
    if (r.counter) {
      render_proof(r.counter->proof, dir, "counter_proof", seed);
      try {
        std::ofstream(dir / "counter_diagram.svg") << render_svg(layout(r.counter->counter, seed));
      } catch (const LayoutError& e) {
        std::cerr << "warning: counter-diagram: " << e.what() << "\n";
      }
    }
  }

  if (r.defect) return kDefect;
  switch (r.verdict) {
    case Verdict::Valid: return kValid;
    case Verdict::Invalid: return kInvalid;
    case Verdict::Unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_render(const std::string& file, const std::string& out, std::optional<std::uint64_t> seed,
               bool ascii, bool no_labels) {
  io::Json j;
  try {
    j = io::Json::parse(text_argument(file));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  AbstractDiagram d = io::diagram_from_json(j);
  ConcreteDiagram c = layout(d, seed.value_or(default_seed()));
  std::string text = ascii ? render_ascii(c) : render_svg(c, !no_labels);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InputError("cannot write " + out);
    f << text;
  }
  return 0;
}

// Diagrams to export: a JSON diagram or array of diagrams, or sentences
// separated by ';' or newlines, each turned into its canonical diagram.
std::vector<AbstractDiagram> export_inputs(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  std::vector<AbstractDiagram> out;
  if (text[first] == '{' || text[first] == '[') {
    io::Json j;
    try {
      j = io::Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_array()) {
      for (const auto& e : j) out.push_back(io::diagram_from_json(e));
    } else {
      out.push_back(io::diagram_from_json(j));
    }
    return out;
  }
  std::string piece;
  std::istringstream in(text);
  NameSupply fresh("x");
  while (std::getline(in, piece)) {
    std::istringstream line(piece);
    std::string s;
    while (std::getline(line, s, ';')) {
      if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(canonical_diagram(parse_sentence(s), fresh));
    }
  }
  return out;
}

int cmd_export(const std::string& input, const std::string& dialect) {
  auto diagrams = export_inputs(text_argument(input));
  if (dialect == "plain") {
    for (const auto& d : diagrams) std::cout << emit(d, Dialect::Plain);
    return 0;
  }
  if (diagrams.empty()) return 0;
  std::set<std::string> circles, constants;
  std::vector<FormulaPtr> parts;
  for (const auto& d : diagrams) {
    for (const auto& c : d.circles()) circles.insert(c);
    for (const auto& c : d.constants()) constants.insert(c);
    parts.push_back(translate_diagram(d));
  }
  std::cout << emit_tptp(Formula::conjunction(std::move(parts)), {circles.begin(), circles.end()},
                         {constants.begin(), constants.end()});
  return 0;
}

int cmd_corpus(const CorpusOptions& o) {
  for (const auto& r : generate_corpus(o)) std::cout << io::to_json(r).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler-diagram syllogistic reasoner"};
  app.require_subcommand(1);

  std::string check_input, render_dir;
  bool json = false, no_oracle = false;
  auto* check = app.add_subcommand("check", "decide an inference: text, file, or - for stdin");
  check->add_option("input", check_input, "e.g. \"Some A are B; All B are C |= Some A are C\"")->required();
  check->add_flag("--json", json, "machine-readable report");
  check->add_flag("--no-oracle", no_oracle, "skip the semantic cross-check");
  check->add_option("--render", render_dir, "write SVGs of premises, proof nodes and counter-diagram");

  std::string render_input, render_out;
  std::optional<std::uint64_t> seed;
  bool ascii = false, no_labels = false;
  auto* render = app.add_subcommand("render", "lay out a diagram JSON file as SVG");
  render->add_option("diagram", render_input, "diagram JSON file, or - for stdin")->required();
  render->add_option("--out,-o", render_out, "output file (default stdout)");
  render->add_option("--seed", seed, "layout seed (default: EULER_SEED or 0)");
  render->add_flag("--ascii", ascii, "character grid instead of SVG");
  render->add_flag("--no-labels", no_labels, "omit text elements");

  std::string export_input, dialect = "plain";
  auto* exp = app.add_subcommand("export", "translate diagrams into first-order formulas");
  exp->add_option("input", export_input, "diagram JSON (object or array), sentences, or a file")->required();
  exp->add_option("--dialect", dialect, "plain or tptp")->check(CLI::IsMember({"plain", "tptp"}));

  CorpusOptions corpus_opts;
  auto* corpus = app.add_subcommand("corpus", "random inferences as JSON lines");
  corpus->add_option("--circles", corpus_opts.circles, "number of predicates (1..4)");
  corpus->add_option("--constants", corpus_opts.constants, "number of constants");
  corpus->add_option("--premises", corpus_opts.premises, "maximum premises per inference");
  corpus->add_option("--count", corpus_opts.count, "number of records");
  corpus->add_option("--seed", corpus_opts.seed, "generator seed");
  corpus->add_flag("--consistent-only", corpus_opts.consistent_only, "keep consistent premise sets only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(check_input, json, no_oracle, render_dir);
    if (*render) return cmd_render(render_input, render_out, seed, ascii, no_labels);
    if (*exp) return cmd_export(export_input, dialect);
    if (*corpus) return cmd_corpus(corpus_opts);
  } catch (const LayoutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLayoutFailed;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDefect;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    // Remaining library errors all stem from the input: malformed diagrams,
    // out-of-range corpus options, unexportable relations, unreadable files.
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDefect;
  }
  return kInputError;
}
