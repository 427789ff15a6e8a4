#pragma once

// Recursive deletion-contraction evaluation of T(G; x(k), y(k)) with
// structural pruning.  Per node, in order: drop isolated vertices; reduce
// multiplicities mod 4k; batch away loop and coloop multiedges; empty leaf;
// Vertigan (Clifford) leaf; component split; multicycle leaf; planar FKT leaf
// (float backend only); otherwise pick an edge by the configured heuristic and
// recurse with the multigraph branch weights
//   T(G) = T(G\e) + (sum_{i=0}^{|e|-1} y^i) T(G/e).

#include <atomic>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tuttesim/backend.hpp"
#include "tuttesim/clifford.hpp"
#include "tuttesim/fkt.hpp"
#include "tuttesim/multigraph.hpp"
#include "tuttesim/planar.hpp"

namespace tuttesim {

enum class Heuristic {
  NonVertigan,
  VertexOrder,
  MinDegree,
  MaxDegree,
  MinDegreeSum,
  MaxDegreeSum,
};

inline const std::vector<std::pair<Heuristic, std::string>>& heuristic_names() {
  static const std::vector<std::pair<Heuristic, std::string>> names = {
      {Heuristic::NonVertigan, "non-vertigan"},
      {Heuristic::VertexOrder, "vertex-order"},
      {Heuristic::MinDegree, "min-degree"},
      {Heuristic::MaxDegree, "max-degree"},
      {Heuristic::MinDegreeSum, "min-degree-sum"},
      {Heuristic::MaxDegreeSum, "max-degree-sum"}};
  return names;
}

inline std::string heuristic_name(Heuristic h) {
  for (const auto& [hh, n] : heuristic_names())
    if (hh == h) return n;
  return "?";
}

inline Heuristic parse_heuristic(const std::string& s) {
  for (const auto& [h, n] : heuristic_names())
    if (n == s) return h;
  throw std::invalid_argument("unknown heuristic: " + s);
}

struct PruningToggles {
  bool components = true;
  bool bicomponents = true;
  bool multicycle = true;
  bool vertigan = true;
  bool planar_fkt = false;  // float backend only
  bool mod4k_simplify = true;
};

struct EvalStats {
  uint64_t leaves_empty = 0;
  uint64_t leaves_vertigan = 0;
  uint64_t leaves_multicycle = 0;
  uint64_t leaves_planar = 0;
  uint64_t recursion_nodes = 0;

  uint64_t total_leaves() const {
    return leaves_empty + leaves_vertigan + leaves_multicycle + leaves_planar;
  }
  EvalStats& operator+=(const EvalStats& o) {
    leaves_empty += o.leaves_empty;
    leaves_vertigan += o.leaves_vertigan;
    leaves_multicycle += o.leaves_multicycle;
    leaves_planar += o.leaves_planar;
    recursion_nodes += o.recursion_nodes;
    return *this;
  }
};

template <class B>
struct EvalResult {
  typename B::Scalar value;
  EvalStats stats;
};

template <class B>
class Engine {
 public:
  using Scalar = typename B::Scalar;

  Engine(const B& backend, Heuristic h, PruningToggles t, int threads = 1)
      : b_(backend), h_(h), t_(t), spare_threads_(threads - 1) {
    if (t_.planar_fkt && B::exact)
      throw std::invalid_argument(
          "planar-fkt pruning requires the float backend");
  }

  EvalResult<B> evaluate(const Multigraph& g) const {
    EvalStats st;
    Scalar v = eval_node(g, st);
    return {v, st};
  }

  // --- pipeline pieces, exposed for direct testing ---

  // Multiplicities taken mod 4k; dropped edges contribute
  // (i e^{i theta} sin theta)^{kappa(E) - kappa(E')}.
  static std::pair<Multigraph, Scalar> simplify_mod_4k(const Multigraph& g,
                                                       const B& b) {
    long period = 4L * b.k();
    std::vector<Multiedge> kept;
    bool changed = false;
    for (const auto& e : g.edges()) {
      long m = e.mult % period;
      if (m == 0) {
        changed = true;
        continue;
      }
      if (m != e.mult) changed = true;
      kept.push_back({e.id, e.u, e.v, m});
    }
    if (!changed) return {g, b.one()};
    int kappa_before = g.kappa();
    Multigraph out = Multigraph::from_parts(g.vertices(), std::move(kept),
                                            g.next_edge_id());
    int kappa_after = out.kappa();
    return {std::move(out), b.simplify_base_pow(kappa_before - kappa_after)};
  }

  // Removes every loop multiedge (factor y^{|e|}) and contracts every coloop
  // multiedge (factor x + sum_{i=1}^{|e|-1} y^i) until none remain.
  static std::pair<Multigraph, Scalar> reduce_loops_coloops(const Multigraph& g,
                                                            const B& b) {
    Multigraph cur = g;
    Scalar factor = b.one();
    for (;;) {
      bool changed = false;
      std::vector<Multiedge> kept;
      for (const auto& e : cur.edges()) {
        if (e.u == e.v) {
          factor = factor * b.ypow(e.mult);
          changed = true;
        } else {
          kept.push_back(e);
        }
      }
      if (changed)
        cur = Multigraph::from_parts(cur.vertices(), std::move(kept),
                                     cur.next_edge_id());
      for (int id : cur.bridge_edge_ids()) {
        factor = factor * b.coloop_factor(cur.edge(id).mult);
        cur = cur.contracted(id);
        changed = true;
      }
      if (!changed) break;
    }
    return {std::move(cur), factor};
  }

  // Closed form for a multigraph whose underlying graph is an n-cycle
  // (n >= 3), edges indexed along the cycle:
  //   T = sum_{t=1}^{n-2} prod_{j>t} y_x(m_j) prod_{j<t} y_1(m_j)
  //       + y_x(m_n + m_{n-1}) prod_{j<=n-2} y_1(m_j)
  // with y_x(m) = x + sum_{i=1}^{m-1} y^i and y_1(m) = sum_{i=0}^{m-1} y^i.
  static Scalar multicycle_value(const Multigraph& g, const B& b) {
    std::vector<long> mults = cycle_multiplicities(g);
    size_t n = mults.size();
    std::vector<Scalar> pre1(n + 1, b.one());   // pre1[t] = prod_{j<=t} y1(m_j)
    std::vector<Scalar> sufx(n + 2, b.one());   // sufx[t] = prod_{j>=t} yx(m_j)
    for (size_t t = 1; t <= n; ++t) pre1[t] = pre1[t - 1] * b.ysum(mults[t - 1]);
    for (size_t t = n; t >= 1; --t)
      sufx[t] = sufx[t + 1] * b.coloop_factor(mults[t - 1]);
    Scalar total = b.zero();
    for (size_t t = 1; t + 2 <= n; ++t)
      total += sufx[t + 1] * pre1[t - 1];
    total += b.coloop_factor(mults[n - 1] + mults[n - 2]) * pre1[n - 2];
    return total;
  }

  // Deterministic edge choice; ties always break to the lowest edge id.
  static int select_edge(const Multigraph& g, Heuristic h, int k) {
    const auto& edges = g.edges();
    if (edges.empty()) throw std::logic_error("select_edge: no edges");
    switch (h) {
      case Heuristic::VertexOrder: {
        int u = g.vertices().front();
        const Multiedge* best = nullptr;
        for (const auto& e : edges) {
          if (e.u != u && e.v != u) continue;
          int other = e.u == u ? e.v : e.u;
          if (!best) {
            best = &e;
          } else {
            int bother = best->u == u ? best->v : best->u;
            if (other < bother) best = &e;
          }
        }
        if (!best) throw std::logic_error("select_edge: isolated low vertex");
        return best->id;
      }
      case Heuristic::MinDegree:
      case Heuristic::MaxDegree: {
        auto deg = g.underlying_degrees();
        bool mn = h == Heuristic::MinDegree;
        int target = -1;
        for (int v : g.vertices()) {
          if (deg[v] == 0) continue;
          if (target < 0 || (mn ? deg[v] < target : deg[v] > target))
            target = deg[v];
        }
        for (const auto& e : edges)
          if (deg[e.u] == target || deg[e.v] == target) return e.id;
        throw std::logic_error("select_edge: degree scan failed");
      }
      case Heuristic::MinDegreeSum:
      case Heuristic::MaxDegreeSum: {
        auto deg = g.underlying_degrees();
        bool mn = h == Heuristic::MinDegreeSum;
        const Multiedge* best = nullptr;
        int best_score = 0;
        for (const auto& e : edges) {
          int score = deg[e.u] + deg[e.v];
          if (!best || (mn ? score < best_score : score > best_score)) {
            best = &e;
            best_score = score;
          }
        }
        return best->id;
      }
      case Heuristic::NonVertigan: {
        for (const auto& e : edges)
          if (e.mult % k != 0) return e.id;
        // Vertigan pruning may be toggled off; fall back to the lowest id
        return edges.front().id;
      }
    }
    throw std::logic_error("select_edge: unhandled heuristic");
  }

 private:
  static bool all_mults_divisible(const Multigraph& g, int k) {
    for (const auto& e : g.edges())
      if (e.mult % k != 0) return false;
    return true;
  }

  static std::vector<long> cycle_multiplicities(const Multigraph& g) {
    // walk the cycle from the lowest vertex, first along its lower-id edge
    std::vector<std::vector<const Multiedge*>> at(g.max_id() + 1);
    for (const auto& e : g.edges()) {
      at[e.u].push_back(&e);
      at[e.v].push_back(&e);
    }
    int start = -1;
    for (int v : g.vertices())
      if (at[v].size() == 2) {
        start = v;
        break;
      }
    if (start < 0) throw std::logic_error("multicycle_value: not a cycle");
    const Multiedge* e = at[start][0]->id <= at[start][1]->id ? at[start][0]
                                                              : at[start][1];
    std::vector<long> mults;
    int cur = start;
    for (;;) {
      mults.push_back(e->mult);
      int nxt = e->u == cur ? e->v : e->u;
      if (nxt == start) break;
      e = at[nxt][0] == e ? at[nxt][1] : at[nxt][0];
      cur = nxt;
    }
    if (mults.size() < 3) throw std::logic_error("multicycle_value: n < 3");
    return mults;
  }

  Scalar eval_node(const Multigraph& input, EvalStats& st) const {
    ++st.recursion_nodes;
    Multigraph g = input.without_isolated();
    Scalar factor = b_.one();
    if (t_.mod4k_simplify) {
      auto [g2, f] = simplify_mod_4k(g, b_);
      g = std::move(g2).without_isolated();
      factor = factor * f;
    }
    {
      auto [g2, f] = reduce_loops_coloops(g, b_);
      g = std::move(g2).without_isolated();
      factor = factor * f;
    }
    if (g.empty()) {
      ++st.leaves_empty;
      return factor;
    }
    if (t_.vertigan && all_mults_divisible(g, b_.k())) {
      ++st.leaves_vertigan;
      return factor * vertigan_value(g, b_);
    }
    if (t_.components || t_.bicomponents) {
      std::vector<Multigraph> comps =
          t_.bicomponents ? g.split_biconnected() : g.split_connected();
      if (comps.size() > 1) {
        Scalar val = factor;
        for (const Multigraph& comp : comps) {
          // a Vertigan component folds into the product without becoming a
          // recursion node of its own, keeping the non-Vertigan 2^nu leaf
          // bound intact
          if (t_.vertigan && all_mults_divisible(comp, b_.k()))
            val = val * vertigan_value(comp, b_);
          else
            val = val * eval_node(comp, st);
        }
        return val;
      }
    }
    if (t_.multicycle && g.probe_basic(b_.k()).is_multicycle) {
      ++st.leaves_multicycle;
      return factor * multicycle_value(g, b_);
    }
    if constexpr (!B::exact) {
      if (t_.planar_fkt && is_planar(g)) {
        ++st.leaves_planar;
        return factor * planar_value(g, b_);
      }
    }
    int eid = select_edge(g, h_, b_.k());
    long m = g.edge(eid).mult;
    Multigraph del = g.deleted(eid);
    Multigraph con = g.contracted(eid);
    Scalar dval, cval;
    if (spare_threads_.fetch_sub(1, std::memory_order_relaxed) > 0) {
      EvalStats st2;
      auto fut = std::async(std::launch::async,
                            [&] { return eval_node(con, st2); });
      dval = eval_node(del, st);
      cval = fut.get();
      spare_threads_.fetch_add(1, std::memory_order_relaxed);
      st += st2;
    } else {
      spare_threads_.fetch_add(1, std::memory_order_relaxed);
      dval = eval_node(del, st);
      cval = eval_node(con, st);
    }
    return factor * (dval + b_.ysum(m) * cval);
  }

  const B& b_;
  Heuristic h_;
  PruningToggles t_;
  mutable std::atomic<int> spare_threads_;
};

// Convenience wrapper used by the CLI and tests.
template <class B>
EvalResult<B> evaluate(const Multigraph& g, const B& backend, Heuristic h,
                       PruningToggles t = {}, int threads = 1) {
  return Engine<B>(backend, h, t, threads).evaluate(g);
}

// Backend-appropriate defaults: FKT pruning is on for floats, off for exact.
inline PruningToggles default_toggles(bool exact_backend) {
  PruningToggles t;
  t.planar_fkt = !exact_backend;
  return t;
}

}  // namespace tuttesim
