#pragma once

// Multigraph with integer-multiplicity multiedges.  At most one multiedge
// record exists per unordered endpoint pair; parallel edges are a multiplicity,
// self-loops a pair with equal endpoints.  Values are immutable once built:
// minor operations return new graphs.  Edge ids are stable across deletions of
// other edges; contraction keeps the smaller vertex id.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tuttesim {

struct Multiedge {
  int id;
  int u, v;  // u <= v
  long mult;
};

enum class EdgeClass { Loop, Coloop, Ordinary };

struct StructureProbe {
  bool is_looped_forest = false;
  bool is_multicycle = false;
  bool is_planar = false;
  bool is_vertigan = false;
  int nu = 0;      // multiedges whose multiplicity is not a multiple of k
  int kappa = 0;   // connected components, isolated vertices included
  long rank = 0;   // |V| - kappa
};

class Multigraph {
 public:
  Multigraph() = default;

  // Vertices 0..n-1; duplicate endpoint pairs are merged by summing
  // multiplicities.  Edge ids follow first appearance order.
  Multigraph(int n, const std::vector<std::tuple<int, int, long>>& edges) {
    for (int i = 0; i < n; ++i) verts_.push_back(i);
    std::map<std::pair<int, int>, size_t> seen;
    for (const auto& [a, b, m] : edges) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("Multigraph: endpoint out of range");
      if (m < 1) throw std::invalid_argument("Multigraph: multiplicity < 1");
      int u = std::min(a, b), v = std::max(a, b);
      auto it = seen.find({u, v});
      if (it != seen.end()) {
        edges_[it->second].mult += m;
      } else {
        seen[{u, v}] = edges_.size();
        edges_.push_back({next_id_++, u, v, m});
      }
    }
  }

  // Assembly from parts; callers keep the single-record-per-pair invariant.
  static Multigraph from_parts(std::vector<int> verts,
                               std::vector<Multiedge> edges, int next_id) {
    Multigraph g;
    g.verts_ = std::move(verts);
    g.edges_ = std::move(edges);
    g.next_id_ = next_id;
    return g;
  }
  int next_edge_id() const { return next_id_; }

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<Multiedge>& edges() const { return edges_; }
  bool empty() const { return verts_.empty() && edges_.empty(); }
  bool has_edges() const { return !edges_.empty(); }

  const Multiedge& edge(int id) const {
    for (const auto& e : edges_)
      if (e.id == id) return e;
    throw std::invalid_argument("Multigraph: unknown edge id " +
                                std::to_string(id));
  }

  long total_multiplicity() const {
    long t = 0;
    for (const auto& e : edges_) t += e.mult;
    return t;
  }

  // Connected components of (V, E); isolated vertices count.
  int kappa() const {
    DSU dsu(verts_);
    for (const auto& e : edges_) dsu.unite(e.u, e.v);
    return dsu.components();
  }
  long rank() const { return static_cast<long>(verts_.size()) - kappa(); }

  Multigraph deleted(int edge_id) const {
    Multigraph g = *this;
    auto it = std::find_if(g.edges_.begin(), g.edges_.end(),
                           [&](const Multiedge& e) { return e.id == edge_id; });
    if (it == g.edges_.end())
      throw std::invalid_argument("delete: unknown edge id");
    g.edges_.erase(it);
    return g;
  }

  Multigraph contracted(int edge_id) const {
    const Multiedge& e = edge(edge_id);
    if (e.u == e.v) throw std::invalid_argument("contract: edge is a loop");
    int keep = e.u, gone = e.v;  // keep the smaller id
    Multigraph g;
    g.next_id_ = next_id_;
    for (int v : verts_)
      if (v != gone) g.verts_.push_back(v);
    std::map<std::pair<int, int>, size_t> at;
    for (const auto& f : edges_) {
      if (f.id == edge_id) continue;
      int u = f.u == gone ? keep : f.u;
      int v = f.v == gone ? keep : f.v;
      if (u > v) std::swap(u, v);
      auto it = at.find({u, v});
      if (it != at.end()) {
        // parallel edges created by the merge: keep the lower id, sum mults
        g.edges_[it->second].mult += f.mult;
      } else {
        at[{u, v}] = g.edges_.size();
        g.edges_.push_back({f.id, u, v, f.mult});
      }
    }
    return g;
  }

  EdgeClass classify(int edge_id) const {
    const Multiedge& e = edge(edge_id);
    if (e.u == e.v) return EdgeClass::Loop;
    for (int b : bridge_edge_ids())
      if (b == edge_id) return EdgeClass::Coloop;
    return EdgeClass::Ordinary;
  }

  Multigraph without_isolated() const {
    std::vector<char> used(max_id() + 1, 0);
    for (const auto& e : edges_) used[e.u] = used[e.v] = 1;
    Multigraph g;
    g.next_id_ = next_id_;
    g.edges_ = edges_;
    for (int v : verts_)
      if (used[v]) g.verts_.push_back(v);
    return g;
  }

  // Bridges of the underlying simple graph (loops are never bridges, and a
  // multiedge's multiplicity does not matter: it is one underlying edge).
  std::vector<int> bridge_edge_ids() const {
    Adjacency adj = adjacency();
    int n = max_id() + 1;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> out;
    int timer = 0;
    // iterative DFS to keep deep recursions off the stack
    struct Frame {
      int v;
      int parent_edge;
      size_t next;
    };
    for (int root : verts_) {
      if (disc[root] != -1) continue;
      std::vector<Frame> stack{{root, -1, 0}};
      disc[root] = low[root] = timer++;
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < adj.nbrs[f.v].size()) {
          auto [w, eid] = adj.nbrs[f.v][f.next++];
          if (w == f.v) continue;  // loop
          if (eid == f.parent_edge) continue;
          if (disc[w] == -1) {
            disc[w] = low[w] = timer++;
            stack.push_back({w, eid, 0});
          } else {
            low[f.v] = std::min(low[f.v], disc[w]);
          }
        } else {
          int v = f.v, pe = f.parent_edge;
          stack.pop_back();
          if (!stack.empty()) {
            int p = stack.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] > disc[p]) out.push_back(pe);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Multigraph> split_connected() const {
    DSU dsu(verts_);
    for (const auto& e : edges_) dsu.unite(e.u, e.v);
    std::map<int, std::vector<Multiedge>> groups;
    for (const auto& e : edges_) groups[dsu.find(e.u)].push_back(e);
    return build_parts(groups);
  }

  // Biconnected components of the underlying graph; partitions the edge set
  // (Hopcroft-Tarjan edge-stack DFS).  Each loop forms its own component.
  std::vector<Multigraph> split_biconnected() const {
    Adjacency adj = adjacency();
    int n = max_id() + 1;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> estack;
    std::map<int, std::vector<Multiedge>> groups;
    int timer = 0, part = 0;
    for (const auto& e : edges_)
      if (e.u == e.v) groups[part++].push_back(e);  // loops split off

    struct Frame {
      int v;
      int parent_edge;
      size_t next;
    };
    auto emit = [&](int until_edge) {
      std::vector<Multiedge> comp;
      while (!estack.empty()) {
        int eid = estack.back();
        estack.pop_back();
        comp.push_back(edge(eid));
        if (eid == until_edge) break;
      }
      groups[part++] = std::move(comp);
    };
    for (int root : verts_) {
      if (disc[root] != -1) continue;
      std::vector<Frame> stack{{root, -1, 0}};
      disc[root] = low[root] = timer++;
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < adj.nbrs[f.v].size()) {
          auto [w, eid] = adj.nbrs[f.v][f.next++];
          if (w == f.v) continue;
          if (eid == f.parent_edge) continue;
          if (disc[w] == -1) {
            estack.push_back(eid);
            disc[w] = low[w] = timer++;
            stack.push_back({w, eid, 0});
          } else if (disc[w] < disc[f.v]) {
            estack.push_back(eid);
            low[f.v] = std::min(low[f.v], disc[w]);
          }
        } else {
          int v = f.v, pe = f.parent_edge;
          stack.pop_back();
          if (!stack.empty()) {
            int p = stack.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) emit(pe);
          }
        }
      }
    }
    return build_parts(groups);
  }

  // Underlying-graph degree per vertex id (loops excluded).
  std::vector<int> underlying_degrees() const {
    std::vector<int> deg(max_id() + 1, 0);
    for (const auto& e : edges_)
      if (e.u != e.v) {
        ++deg[e.u];
        ++deg[e.v];
      }
    return deg;
  }

  StructureProbe probe(int k) const;  // defined in planar.hpp

  // Everything except planarity, which needs the planarity test.
  StructureProbe probe_basic(int k) const {
    if (k < 1) throw std::invalid_argument("probe: k must be >= 1");
    StructureProbe p;
    p.kappa = kappa();
    p.rank = rank();
    p.is_vertigan = true;
    for (const auto& e : edges_) {
      if (e.mult % k != 0) {
        p.is_vertigan = false;
        ++p.nu;
      }
    }
    // looped forest: non-loop edges acyclic
    DSU dsu(verts_);
    p.is_looped_forest = true;
    for (const auto& e : edges_) {
      if (e.u == e.v) continue;
      if (!dsu.unite(e.u, e.v)) {
        p.is_looped_forest = false;
        break;
      }
    }
    // multicycle: connected, no loops, every underlying degree exactly 2
    p.is_multicycle = false;
    if (!edges_.empty() && kappa_edges_only() == 1) {
      bool ok = true;
      for (const auto& e : edges_)
        if (e.u == e.v) ok = false;
      if (ok) {
        auto deg = underlying_degrees();
        for (int v : verts_) {
          int d = deg[v];
          if (d != 0 && d != 2) ok = false;
        }
        // isolated vertices do not block the cycle shape
        p.is_multicycle = ok && edges_.size() >= 3;
      }
    }
    return p;
  }

  // Canonical (u, v, mult) list; isomorphism check helper for tests.
  std::vector<std::tuple<int, int, long>> canonical_edge_list() const {
    std::vector<std::tuple<int, int, long>> out;
    for (const auto& e : edges_) out.emplace_back(e.u, e.v, e.mult);
    std::sort(out.begin(), out.end());
    return out;
  }

  int max_id() const {
    int m = -1;
    for (int v : verts_) m = std::max(m, v);
    return m;
  }

 private:
  struct DSU {
    std::vector<int> parent;
    int count = 0;
    explicit DSU(const std::vector<int>& verts) {
      int n = 0;
      for (int v : verts) n = std::max(n, v + 1);
      parent.resize(n);
      for (int v : verts) parent[v] = v;
      count = static_cast<int>(verts.size());
    }
    int find(int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    }
    bool unite(int a, int b) {
      a = find(a);
      b = find(b);
      if (a == b) return false;
      parent[std::max(a, b)] = std::min(a, b);
      --count;
      return true;
    }
    int components() const { return count; }
  };

  struct Adjacency {
    std::vector<std::vector<std::pair<int, int>>> nbrs;  // (other vertex, edge id)
  };
  Adjacency adjacency() const {
    Adjacency a;
    a.nbrs.resize(max_id() + 1);
    for (const auto& e : edges_) {
      a.nbrs[e.u].emplace_back(e.v, e.id);
      if (e.u != e.v) a.nbrs[e.v].emplace_back(e.u, e.id);
    }
    return a;
  }

  int kappa_edges_only() const {
    std::vector<char> used(max_id() + 1, 0);
    for (const auto& e : edges_) used[e.u] = used[e.v] = 1;
    std::vector<int> touched;
    for (int v : verts_)
      if (used[v]) touched.push_back(v);
    if (touched.empty()) return 0;
    DSU dsu(touched);
    for (const auto& e : edges_) dsu.unite(e.u, e.v);
    return dsu.components();
  }

  std::vector<Multigraph> build_parts(
      const std::map<int, std::vector<Multiedge>>& groups) const {
    std::vector<Multigraph> out;
    for (const auto& [key, comp_edges] : groups) {
      Multigraph g;
      g.next_id_ = next_id_;
      g.edges_ = comp_edges;
      std::sort(g.edges_.begin(), g.edges_.end(),
                [](const Multiedge& a, const Multiedge& b) { return a.id < b.id; });
      std::vector<int> vs;
      for (const auto& e : comp_edges) {
        vs.push_back(e.u);
        vs.push_back(e.v);
      }
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      g.verts_ = std::move(vs);
      out.push_back(std::move(g));
    }
    // deterministic order: by smallest edge id
    std::sort(out.begin(), out.end(), [](const Multigraph& a, const Multigraph& b) {
      return a.edges_.front().id < b.edges_.front().id;
    });
    return out;
  }

  std::vector<int> verts_;
  std::vector<Multiedge> edges_;  // ascending id
  int next_id_ = 0;
};

}  // namespace tuttesim
