#pragma once

// Planarity testing and combinatorial embeddings via Boyer-Myrvold.
// Inputs are simple undirected graphs given as an edge list over 0..n-1.

#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "tuttesim/multigraph.hpp"

namespace tuttesim {

namespace detail {
using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
}  // namespace detail

inline bool planar_test(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 4 || edges.size() <= 8) return true;  // too small to hold K5 or K3,3
  if (n >= 3 && edges.size() > 3 * static_cast<size_t>(n) - 6) return false;
  detail::BoostGraph g(n);
  int idx = 0;
  for (auto [u, v] : edges) boost::add_edge(u, v, idx++, g);
  return boost::boyer_myrvold_planarity_test(g);
}

// Rotation system of a planar embedding: rotation[v] lists incident edge
// indices in cyclic order.  Returns false for nonplanar input.
inline bool planar_embedding(int n,
                             const std::vector<std::pair<int, int>>& edges,
                             std::vector<std::vector<int>>& rotation) {
  detail::BoostGraph g(n);
  int idx = 0;
  for (auto [u, v] : edges) boost::add_edge(u, v, idx++, g);
  using Edge = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> emb(n);
  auto emb_map = boost::make_iterator_property_map(
      emb.begin(), boost::get(boost::vertex_index, g));
  if (!boost::boyer_myrvold_planarity_test(
          boost::boyer_myrvold_params::graph = g,
          boost::boyer_myrvold_params::embedding = emb_map))
    return false;
  auto eidx = boost::get(boost::edge_index, g);
  rotation.assign(n, {});
  for (int v = 0; v < n; ++v)
    for (const auto& e : emb[v]) rotation[v].push_back(eidx[e]);
  return true;
}

// Underlying simple graph of a multigraph, loops stripped, vertices relabeled
// to 0..n-1 in ascending id order.
struct UnderlyingGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // relabeled endpoints
  std::vector<int> edge_ids;               // multiedge id per entry
  std::vector<int> vertex_ids;             // new index -> original id
};

inline UnderlyingGraph underlying_simple_graph(const Multigraph& g) {
  UnderlyingGraph u;
  u.vertex_ids = g.vertices();
  std::vector<int> pos(g.max_id() + 1, -1);
  for (size_t i = 0; i < u.vertex_ids.size(); ++i) pos[u.vertex_ids[i]] = i;
  u.n = static_cast<int>(u.vertex_ids.size());
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    u.edges.emplace_back(pos[e.u], pos[e.v]);
    u.edge_ids.push_back(e.id);
  }
  return u;
}

inline bool is_planar(const Multigraph& g) {
  UnderlyingGraph u = underlying_simple_graph(g);
  return planar_test(u.n, u.edges);
}

inline StructureProbe Multigraph::probe(int k) const {
  StructureProbe p = probe_basic(k);
  p.is_planar = is_planar(*this);
  return p;
}

}  // namespace tuttesim
