#pragma once

// Planar Ising partition sums by the dimer method.  The quantity computed is
// the weighted even-subgraph sum
//   E(s, c) = sum over A ⊆ E, all degrees even   prod_{e in A} s_e  prod_{e not in A} c_e
// for a planar simple graph, via a Fisher-style decoration whose perfect
// matchings are in weight-preserving bijection with even subgraphs, a
// Kasteleyn orientation from the tree-cotree fan-out, and one Pfaffian.
// Keeping (s_e, c_e) as a pair instead of normalising to tanh avoids blowing
// up on edges where cos(theta*m) = 0.

#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "tuttesim/backend.hpp"
#include "tuttesim/multigraph.hpp"
#include "tuttesim/planar.hpp"

namespace tuttesim {

namespace detail {

using Cx = std::complex<double>;

// Pfaffian of a skew-symmetric complex matrix, Parlett-Reid elimination with
// magnitude pivoting.
inline Cx pfaffian(std::vector<std::vector<Cx>> a) {
  size_t n = a.size();
  if (n % 2 != 0) return 0.0;
  Cx result = 1.0;
  for (size_t j = 0; j + 1 < n; j += 2) {
    size_t piv = j + 1;
    for (size_t i = j + 2; i < n; ++i)
      if (std::abs(a[i][j]) > std::abs(a[piv][j])) piv = i;
    if (a[piv][j] == Cx(0.0)) return 0.0;
    if (piv != j + 1) {
      std::swap(a[piv], a[j + 1]);
      for (size_t r = 0; r < n; ++r) std::swap(a[r][piv], a[r][j + 1]);
      result = -result;
    }
    for (size_t i = j + 2; i < n; ++i) {
      if (a[i][j] == Cx(0.0)) continue;
      Cx f = a[i][j] / a[j + 1][j];
      for (size_t cidx = 0; cidx < n; ++cidx) a[i][cidx] -= f * a[j + 1][cidx];
      for (size_t r = 0; r < n; ++r) a[r][i] -= f * a[r][j + 1];
    }
    result *= a[j][j + 1];
  }
  return result;
}

struct DecoratedEdge {
  int u, v;
  Cx w;
};

// Even-subgraph sum of one connected simple planar graph with >= 1 edge.
inline Cx even_subgraph_sum_connected(int n,
                                      const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<Cx>& s,
                                      const std::vector<Cx>& c) {
  std::vector<std::vector<int>> rot;
  if (!planar_embedding(n, edges, rot))
    throw std::logic_error("even_subgraph_sum: graph is not planar");

  // Reduce to max degree 3: high-degree vertices become chains laid out in
  // rotation order, chain links carrying weights (1, 1).
  struct RedEdge {
    int u = -1, v = -1;
    Cx s, c;
  };
  std::vector<RedEdge> red(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) {
    red[i].s = s[i];
    red[i].c = c[i];
  }
  auto attach = [&](int eidx, int node) {
    if (red[eidx].u < 0)
      red[eidx].u = node;
    else
      red[eidx].v = node;
  };
  int red_n = 0;
  for (int v = 0; v < n; ++v) {
    int d = static_cast<int>(rot[v].size());
    if (d == 0) continue;  // isolated inside a component cannot happen
    if (d <= 3) {
      int node = red_n++;
      for (int e : rot[v]) attach(e, node);
    } else {
      std::vector<int> chain(d - 2);
      for (int j = 0; j < d - 2; ++j) chain[j] = red_n++;
      attach(rot[v][0], chain[0]);
      attach(rot[v][1], chain[0]);
      for (int j = 2; j <= d - 3; ++j) attach(rot[v][j], chain[j - 1]);
      attach(rot[v][d - 2], chain[d - 3]);
      attach(rot[v][d - 1], chain[d - 3]);
      for (int j = 0; j + 1 < d - 2; ++j)
        red.push_back({chain[j], chain[j + 1], 1.0, 1.0});
    }
  }

  // Fisher decoration: one terminal node per (vertex, incident edge); pair and
  // triangle gadgets; each reduced edge becomes a 3-path with weights
  // (1, s_e, c_e) so covered/uncovered modes pick up s_e/c_e.
  std::vector<std::vector<std::pair<int, size_t>>> incid(red_n);
  for (size_t i = 0; i < red.size(); ++i) {
    incid[red[i].u].push_back({0, i});
    incid[red[i].v].push_back({1, i});
  }
  int dn = 0;
  std::vector<DecoratedEdge> dedges;
  std::vector<std::array<int, 2>> terminal(red.size(), {-1, -1});
  for (int v = 0; v < red_n; ++v) {
    int d = static_cast<int>(incid[v].size());
    assert(d >= 1 && d <= 3);
    std::vector<int> ts(d);
    for (int j = 0; j < d; ++j) ts[j] = dn++;
    if (d == 2) dedges.push_back({ts[0], ts[1], 1.0});
    if (d == 3) {
      dedges.push_back({ts[0], ts[1], 1.0});
      dedges.push_back({ts[1], ts[2], 1.0});
      dedges.push_back({ts[0], ts[2], 1.0});
    }
    for (int j = 0; j < d; ++j) {
      auto [side, eidx] = incid[v][j];
      terminal[eidx][side] = ts[j];
    }
  }
  std::vector<std::pair<int, int>> ref_matching;
  for (size_t i = 0; i < red.size(); ++i) {
    int p = dn++, q = dn++;
    dedges.push_back({terminal[i][0], p, 1.0});
    dedges.push_back({p, q, red[i].s});
    dedges.push_back({q, terminal[i][1], red[i].c});
    ref_matching.push_back({terminal[i][0], p});
    ref_matching.push_back({q, terminal[i][1]});
  }

  // Embed the decorated graph (planar by construction) and walk its faces.
  std::vector<std::pair<int, int>> dpairs;
  for (const auto& e : dedges) dpairs.push_back({e.u, e.v});
  std::vector<std::vector<int>> drot;
  if (!planar_embedding(dn, dpairs, drot))
    throw std::logic_error("even_subgraph_sum: decoration lost planarity");

  int m = static_cast<int>(dedges.size());
  // directed edge 2*e + dir, dir=0 means u->v
  auto head = [&](int de) { return de & 1 ? dedges[de >> 1].u : dedges[de >> 1].v; };
  auto next_around = [&](int de) {
    int h = head(de);
    const auto& r = drot[h];
    int pos = -1;
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] == de >> 1) pos = static_cast<int>(i);
    assert(pos >= 0);
    int f = r[(pos + 1) % r.size()];
    return 2 * f + (dedges[f].u == h ? 0 : 1);
  };
  std::vector<int> face_of(2 * m, -1);
  std::vector<std::vector<int>> faces;
  for (int de = 0; de < 2 * m; ++de) {
    if (face_of[de] != -1) continue;
    int f = static_cast<int>(faces.size());
    faces.push_back({});
    int cur = de;
    while (face_of[cur] == -1) {
      face_of[cur] = f;
      faces[f].push_back(cur);
      cur = next_around(cur);
    }
  }

  // Spanning tree of the decorated graph.
  std::vector<char> in_tree(m, 0), seen(dn, 0);
  {
    std::vector<std::vector<std::pair<int, int>>> adj(dn);
    for (int e = 0; e < m; ++e) {
      adj[dedges[e].u].push_back({dedges[e].v, e});
      adj[dedges[e].v].push_back({dedges[e].u, e});
    }
    std::vector<int> bfs{0};
    seen[0] = 1;
    for (size_t i = 0; i < bfs.size(); ++i)
      for (auto [w, e] : adj[bfs[i]])
        if (!seen[w]) {
          seen[w] = 1;
          in_tree[e] = 1;
          bfs.push_back(w);
        }
  }

  // Dual tree over faces via the non-tree edges; fix orientations so every
  // face but the root has an odd number of boundary edges aligned with its
  // traversal direction.
  int nf = static_cast<int>(faces.size());
  std::vector<std::vector<std::pair<int, int>>> dual(nf);  // (face, primal edge)
  for (int e = 0; e < m; ++e) {
    if (in_tree[e]) continue;
    int f0 = face_of[2 * e], f1 = face_of[2 * e + 1];
    assert(f0 != f1);
    dual[f0].push_back({f1, e});
    dual[f1].push_back({f0, e});
  }
  std::vector<int> order, parent_edge(nf, -1);
  {
    std::vector<char> vis(nf, 0);
    std::vector<int> bfs{0};
    vis[0] = 1;
    for (size_t i = 0; i < bfs.size(); ++i) {
      order.push_back(bfs[i]);
      for (auto [g, e] : dual[bfs[i]])
        if (!vis[g]) {
          vis[g] = 1;
          parent_edge[g] = e;
          bfs.push_back(g);
        }
    }
    if (static_cast<int>(order.size()) != nf)
      throw std::logic_error("even_subgraph_sum: dual graph not connected");
  }
  std::vector<int> orient(m, 0);    // 0: as stored (u->v)
  std::vector<char> decided(m, 0);
  for (int e = 0; e < m; ++e) decided[e] = in_tree[e];
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int f = *it;
    int pe = parent_edge[f];
    if (pe < 0) continue;  // root face keeps whatever parity it has
    int count = 0, pe_dir = -1;
    for (int de : faces[f]) {
      int e = de >> 1;
      if (e == pe) {
        pe_dir = de & 1;
        continue;
      }
      assert(decided[e]);
      if ((de & 1) == orient[e]) ++count;
    }
    assert(pe_dir >= 0);
    orient[pe] = (count % 2 == 0) ? pe_dir : 1 - pe_dir;
    decided[pe] = 1;
  }

  // Skew adjacency and the sign of the reference matching's Pfaffian term.
  std::vector<std::vector<Cx>> K(dn, std::vector<Cx>(dn, 0.0));
  for (int e = 0; e < m; ++e) {
    int a = dedges[e].u, b = dedges[e].v;
    if (orient[e] == 1) std::swap(a, b);
    K[a][b] += dedges[e].w;
    K[b][a] -= dedges[e].w;
  }
  int sign = 1;
  {
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : ref_matching) pairs.push_back({std::min(a, b), std::max(a, b)});
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> perm;
    for (auto [a, b] : pairs) {
      perm.push_back(a);
      perm.push_back(b);
    }
    std::vector<char> vis(dn, 0);
    int cycles = 0;
    for (int i = 0; i < dn; ++i) {
      if (vis[i]) continue;
      ++cycles;
      int j = i;
      while (!vis[j]) {
        vis[j] = 1;
        j = perm[j];
      }
    }
    if ((dn - cycles) % 2 != 0) sign = -sign;
    for (auto [a, b] : ref_matching) {
      int lo = std::min(a, b), hi = std::max(a, b);
      // find the edge to read its orientation
      for (int e = 0; e < m; ++e) {
        int x = dedges[e].u, y = dedges[e].v;
        if (std::min(x, y) == lo && std::max(x, y) == hi) {
          int from = orient[e] == 0 ? x : y;
          if (from != lo) sign = -sign;
          break;
        }
      }
    }
  }
  return static_cast<double>(sign) * pfaffian(std::move(K));
}

}  // namespace detail

// E(s, c) over a planar simple graph; factorises over connected components.
inline std::complex<double> planar_even_subgraph_sum(
    int n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<std::complex<double>>& s,
    const std::vector<std::complex<double>>& c) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].first].push_back(static_cast<int>(i));
    adj[edges[i].second].push_back(static_cast<int>(i));
  }
  std::complex<double> total = 1.0;
  for (int v0 = 0; v0 < n; ++v0) {
    if (comp[v0] >= 0 || adj[v0].empty()) continue;
    // collect the component
    std::vector<int> vs{v0}, es;
    comp[v0] = v0;
    std::vector<char> etaken(edges.size(), 0);
    for (size_t i = 0; i < vs.size(); ++i)
      for (int e : adj[vs[i]]) {
        if (etaken[e]) continue;
        etaken[e] = 1;
        es.push_back(e);
        for (int w : {edges[e].first, edges[e].second})
          if (comp[w] < 0) {
            comp[w] = v0;
            vs.push_back(w);
          }
      }
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub;
    std::vector<std::complex<double>> ss, cc;
    for (int e : es) {
      sub.push_back({pos[edges[e].first], pos[edges[e].second]});
      ss.push_back(s[e]);
      cc.push_back(c[e]);
    }
    total *= detail::even_subgraph_sum_connected(
        static_cast<int>(vs.size()), sub, ss, cc);
  }
  return total;
}

// T(g; x(k), y(k)) for a multigraph with planar underlying graph, through the
// Ising partition function:  psi = 2^{-|V|} Z_Ising(g; i*theta*mult, 0)  and
// T = psi * e^{i theta(|E|-r)} (i sin theta)^{-r}.
inline std::complex<double> planar_value(const Multigraph& g,
                                         const FloatBackend& backend) {
  double theta = backend.theta();
  std::complex<double> loop_factor = 1.0;
  for (const auto& e : g.edges())
    if (e.u == e.v) loop_factor *= std::polar(1.0, theta * e.mult);
  UnderlyingGraph u = underlying_simple_graph(g);
  std::vector<std::complex<double>> s, c;
  for (int id : u.edge_ids) {
    long m = g.edge(id).mult;
    s.push_back(std::complex<double>(0.0, std::sin(theta * m)));
    c.push_back(std::complex<double>(std::cos(theta * m), 0.0));
  }
  std::complex<double> psi =
      loop_factor * planar_even_subgraph_sum(u.n, u.edges, s, c);
  long E = g.total_multiplicity();
  long r = g.rank();
  std::complex<double> inv_isin = 1.0 / backend.isin_theta();
  std::complex<double> isin_pow = 1.0;
  for (long i = 0; i < r; ++i) isin_pow *= inv_isin;
  return psi * std::polar(1.0, theta * static_cast<double>(E - r)) * isin_pow;
}

}  // namespace tuttesim
