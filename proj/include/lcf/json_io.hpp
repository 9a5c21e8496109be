#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lcf/graph.hpp"

namespace lcf {

using json = nlohmann::json;

// Graph interchange format, used by every CLI command:
//   {"n": int, "edges": [[u,v],...], "loops": [v,...]}
// The loops array lists the vertex of each loop; ordinals are assigned
// by array position within each vertex.

inline json graph_to_json(const LoopedSimpleGraph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  j["loops"] = json::array();
  for (const Loop& l : g.loops()) j["loops"].push_back(l.v);
  return j;
}

inline LoopedSimpleGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw ParamsInvalid("graph JSON must be an object with an \"n\" field");
  LoopedSimpleGraph g(j.at("n").get<int>());
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParamsInvalid("each edge must be a [u,v] pair");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  if (j.contains("loops"))
    for (const auto& v : j.at("loops")) g.add_loop(v.get<int>());
  return g;
}

inline LoopedSimpleGraph graph_from_json_text(const std::string& text) {
  return graph_from_json(json::parse(text));
}

// Element sets are encoded relative to a graph:
//   {"edges": [[u,v],...], "loops": [i,...]}
// where each i indexes the graph's loops array.

inline json elements_to_json(const LoopedSimpleGraph& g,
                             const std::vector<Element>& set) {
  json j;
  j["edges"] = json::array();
  j["loops"] = json::array();
  const auto& loops = g.loops();
  for (const Element& e : set) {
    if (!e.is_loop) {
      j["edges"].push_back({e.u, e.v});
      continue;
    }
    bool found = false;
    for (std::size_t i = 0; i < loops.size(); ++i)
      if (loops[i].v == e.v && loops[i].ord == e.ord) {
        j["loops"].push_back(i);
        found = true;
        break;
      }
    if (!found)
      throw UnknownElement("loop not present in graph while serializing");
  }
  return j;
}

inline std::vector<Element> elements_from_json(const LoopedSimpleGraph& g,
                                               const json& j) {
  std::vector<Element> out;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges"))
      out.push_back(Element::edge(e[0].get<int>(), e[1].get<int>()));
  if (j.contains("loops"))
    for (const auto& i : j.at("loops")) {
      std::size_t idx = i.get<std::size_t>();
      if (idx >= g.loops().size())
        throw UnknownElement("loop index " + std::to_string(idx) +
                             " out of range");
      out.push_back(Element::loop(g.loops()[idx]));
    }
  return out;
}

}  // namespace lcf
