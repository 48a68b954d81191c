#include "euler/io.hpp"

#include <algorithm>

namespace euler::io {

namespace {

const char* tag_name(RelationTag t) {
  switch (t) {
    case RelationTag::Inside: return "in";
    case RelationTag::Exclusion: return "ex";
    case RelationTag::Crossing: return "cr";
  }
  return "?";
}

std::vector<std::string> string_array(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& a = j.at(key);
  if (!a.is_array()) throw FormatError(std::string("\"") + key + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : a) {
    if (!e.is_string()) throw FormatError(std::string("\"") + key + "\" must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Json to_json(const AbstractDiagram& d) {
  Json rels = Json::array();
  for (const auto& r : d.relations()) rels.push_back({tag_name(r.tag), r.left, r.right});
  return Json{{"circles", d.circles()},
              {"constants", d.constants()},
              {"existentials", d.existentials()},
              {"relations", std::move(rels)}};
}

AbstractDiagram diagram_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("diagram must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "circles" && key != "constants" && key != "existentials" && key != "relations")
      throw FormatError("unexpected key \"" + key + "\" in diagram");
  std::vector<DiagramObject> objects;
  for (auto& n : string_array(j, "circles")) objects.push_back(DiagramObject::circle(n));
  for (auto& n : string_array(j, "constants")) objects.push_back(DiagramObject::constant(n));
  for (auto& n : string_array(j, "existentials")) objects.push_back(DiagramObject::existential(n));

  std::set<EulRelation> rels;
  if (j.contains("relations")) {
    const auto& a = j.at("relations");
    if (!a.is_array()) throw FormatError("\"relations\" must be an array");
    for (const auto& r : a) {
      if (!r.is_array() || r.size() != 3 || !r[0].is_string() || !r[1].is_string() || !r[2].is_string())
        throw FormatError("each relation must be [tag, left, right]");
      auto tag = r[0].get<std::string>();
      auto l = r[1].get<std::string>();
      auto rr = r[2].get<std::string>();
      if (tag == "in") rels.insert(EulRelation::inside(l, rr));
      else if (tag == "ex") rels.insert(EulRelation::exclusion(l, rr));
      else if (tag == "cr") rels.insert(EulRelation::crossing(l, rr));
      else throw FormatError("unknown relation tag \"" + tag + "\"");
    }
  }
  return make_diagram(std::move(objects), std::move(rels));
}

Json to_json(const Model& m) {
  Json preds = Json::object();
  for (const auto& [p, ext] : m.predicates) preds[p] = ext;
  Json consts = Json::object();
  for (const auto& [c, e] : m.constants) consts[c] = e;
  return Json{{"domain", m.domain}, {"constants", std::move(consts)}, {"predicates", std::move(preds)}};
}

Model model_from_json(const Json& j) {
  try {
    Model m;
    for (const auto& e : j.at("domain")) m.domain.insert(e.get<std::string>());
    for (const auto& [c, e] : j.at("constants").items()) m.constants[c] = e.get<std::string>();
    for (const auto& [p, ext] : j.at("predicates").items())
      for (const auto& e : ext) m.predicates[p].insert(e.get<std::string>());
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed model: ") + e.what());
  }
}

Json to_json(const Proof& p) {
  Json nodes = Json::array();
  for (const auto& n : p.nodes()) {
    Json node{{"id", n.id}, {"rule", to_string(n.rule)}, {"inputs", n.inputs},
              {"diagram", to_json(n.diagram)}, {"detail", n.detail}};
    if (n.id == p.root()) node["conclusion"] = true;
    nodes.push_back(std::move(node));
  }
  return Json{{"nodes", std::move(nodes)}};
}

Json to_json(const CheckReport& r) {
  Json j{{"verdict", to_string(r.verdict)}};
  if (r.proof) j["proof"] = to_json(*r.proof);
  if (r.counter) {
    j["counter_model"] = to_json(r.counter->model.model);
    j["counter_proof"] = to_json(r.counter->proof);
    j["falsified"] = to_string(r.counter->falsified);
  }
  if (r.oracle_valid) j["oracle_verdict"] = *r.oracle_valid;
  if (r.defect) j["defect"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  Json t = Json::object();
  for (const auto& [phase, ms] : r.timings_ms) t[phase] = ms;
  j["timings"] = std::move(t);
  return j;
}

Json to_json(const CorpusRecord& r) {
  Json premises = Json::array();
  for (const auto& s : r.inference.premises) premises.push_back(to_string(s));
  return Json{{"id", r.id},
              {"inference", to_string(r.inference)},
              {"premises", std::move(premises)},
              {"conclusion", to_string(r.inference.conclusion)},
              {"oracle_valid", r.oracle_valid},
              {"consistent", r.consistent}};
}

}  // namespace euler::io
