#pragma once

#include <set>
#include <string>

#include "euler/diagram.hpp"
#include "euler/io.hpp"

namespace euler::test {

// "x⊑A", "A⊢⊣B", "A▷◁B" in the notation used by to_string.
inline EulRelation R(const std::string& text) {
  for (auto [sym, tag] : {std::pair<const char*, RelationTag>{"⊑", RelationTag::Inside},
                          {"⊢⊣", RelationTag::Exclusion},
                          {"▷◁", RelationTag::Crossing}}) {
    auto at = text.find(sym);
    if (at == std::string::npos) continue;
    auto l = text.substr(0, at);
    auto r = text.substr(at + std::string(sym).size());
    if (tag == RelationTag::Inside) return EulRelation::inside(l, r);
    if (tag == RelationTag::Exclusion) return EulRelation::exclusion(l, r);
    return EulRelation::crossing(l, r);
  }
  throw std::invalid_argument("bad relation text " + text);
}

inline std::set<EulRelation> Rs(std::initializer_list<const char*> texts) {
  std::set<EulRelation> out;
  for (auto t : texts) out.insert(R(t));
  return out;
}

inline AbstractDiagram D(const char* json) { return io::diagram_from_json(io::Json::parse(json)); }

}  // namespace euler::test
