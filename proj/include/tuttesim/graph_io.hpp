#pragma once

// Graph file format: {"vertices": n, "edges": [[u, v, mult], ...]},
// 0-indexed, u == v allowed for loops, duplicate pairs summed on load.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "tuttesim/multigraph.hpp"

namespace tuttesim {

inline Multigraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw std::invalid_argument("graph json line " + std::to_string(line) +
                                ": " + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument(
        "graph json: expected {\"vertices\": n, \"edges\": [[u,v,mult],...]}");
  int n = j["vertices"].get<int>();
  if (n < 0) throw std::invalid_argument("graph json: negative vertex count");
  std::vector<std::tuple<int, int, long>> edges;
  int idx = 0;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("graph json: edge " + std::to_string(idx) +
                                  " must be [u, v, mult]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<long>());
    ++idx;
  }
  try {
    return Multigraph(n, edges);
  } catch (const std::invalid_argument& ex) {
    throw std::invalid_argument(std::string("graph json: ") + ex.what());
  }
}

inline Multigraph load_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

inline std::string graph_to_json(const Multigraph& g) {
  nlohmann::json j;
  j["vertices"] = g.max_id() + 1;
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.mult});
  return j.dump();
}

}  // namespace tuttesim
