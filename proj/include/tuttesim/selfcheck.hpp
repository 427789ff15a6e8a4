#pragma once

// Identity suite over random small weighted graphs:
//   1. external-field Potts equals zero-field Potts on the augmented graph
//      (q^{-kappa} normalisation),
//   2. integer-multiplier Potts ties to the Tutte polynomial along
//      (x-1)(y-1) = q,
//   3. the 2-state Potts sum reduces to the Ising sum,
//   4. the principal IQP amplitude is 2^{-|V|} times the imaginary-weight
//      Ising sum.
// All sides are computed by the brute-force oracles; exact variants run on
// the zeta-power grid where the weights are representable.

#include <complex>
#include <string>
#include <vector>

#include "tuttesim/backend.hpp"
#include "tuttesim/bench.hpp"
#include "tuttesim/oracle.hpp"

namespace tuttesim {

struct IdentityCheckResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  double max_err = 0.0;
  bool passed() const { return failures == 0; }
};

namespace detail {

struct RandomWeightedGraph {
  int n;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::complex<double>> omega;    // float weights
  std::vector<std::complex<double>> upsilon;
  std::vector<long> edge_m, vertex_m;         // grid multipliers
};

inline RandomWeightedGraph random_weighted_graph(SplitMix64& rng, int max_n,
                                                 long period) {
  RandomWeightedGraph g;
  g.n = 2 + static_cast<int>(rng.next() % (max_n - 1));
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (rng.next() & 1) {
        g.edges.push_back({u, v});
        g.edge_m.push_back(1 + static_cast<long>(rng.next() % (period - 1)));
      }
  for (int v = 0; v < g.n; ++v)
    g.vertex_m.push_back(static_cast<long>(rng.next() % period));
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (rng.next() >> 11) * 0x1.0p-53;
  };
  for (size_t i = 0; i < g.edges.size(); ++i)
    g.omega.push_back({uniform(-1.0, 1.0), uniform(-0.5, 0.5)});
  for (int v = 0; v < g.n; ++v)
    g.upsilon.push_back({uniform(-1.0, 1.0), uniform(-0.5, 0.5)});
  return g;
}

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

// Augmented graph of the paper's construction: one apex per connected
// component (isolated vertices included), apex edges carry the vertex weight.
inline void augment_for_potts(const RandomWeightedGraph& g,
                              std::vector<std::pair<int, int>>& edges,
                              std::vector<std::complex<double>>& w,
                              int& total_n, int& kappa) {
  std::vector<int> parent(g.n);
  for (int i = 0; i < g.n; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [u, v] : g.edges) {
    int a = find(u), b = find(v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> apex(g.n, -1);
  int next = g.n;
  kappa = 0;
  for (int v = 0; v < g.n; ++v)
    if (find(v) == v) {
      apex[v] = next++;
      ++kappa;
    }
  edges = g.edges;
  w = g.omega;
  for (int v = 0; v < g.n; ++v) {
    edges.push_back({v, apex[find(v)]});
    w.push_back(g.upsilon[v]);
  }
  total_n = next;
}

}  // namespace detail

inline IdentityCheckResult check_potts_external_field(uint64_t seed,
                                                      int trials) {
  IdentityCheckResult r{"potts-external-field-augmentation", trials};
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto g = detail::random_weighted_graph(rng, 5, 8);
    int q = 2 + static_cast<int>(rng.next() % 2);
    std::vector<std::pair<int, int>> aug_edges;
    std::vector<std::complex<double>> aug_w;
    int aug_n, kappa;
    detail::augment_for_potts(g, aug_edges, aug_w, aug_n, kappa);
    std::complex<double> lhs =
        potts_partition_w(q, g.n, g.edges, g.omega, g.upsilon);
    std::vector<std::complex<double>> zero_field(aug_n, 0.0);
    std::complex<double> rhs =
        potts_partition_w(q, aug_n, aug_edges, aug_w, zero_field) /
        std::pow(static_cast<double>(q), kappa);
    double err = detail::rel_err(lhs, rhs);
    r.max_err = std::max(r.max_err, err);
    if (err > 1e-9) ++r.failures;
  }
  return r;
}

// Exact variant on the grid: weights i*pi*m/4k, scalars in Q(zeta_8k).
inline IdentityCheckResult check_potts_external_field_exact(uint64_t seed,
                                                            int trials,
                                                            int k = 2) {
  IdentityCheckResult r{"potts-external-field-augmentation-exact", trials};
  SplitMix64 rng(seed);
  ExactBackend b(k);
  long period = 8L * k;
  for (int t = 0; t < trials; ++t) {
    auto g = detail::random_weighted_graph(rng, 5, period);
    int q = 2 + static_cast<int>(rng.next() % 2);
    std::vector<Cyclo> ew, vw;
    for (long m : g.edge_m) ew.push_back(b.zeta(m));
    for (long m : g.vertex_m) vw.push_back(b.zeta(m));
    Cyclo lhs = potts_partition<Cyclo>(q, g.n, g.edges, ew, vw, b.zero(), b.one());
    // augmented, zero field
    std::vector<std::pair<int, int>> aug_edges;
    std::vector<std::complex<double>> unused;
    int aug_n, kappa;
    detail::augment_for_potts(g, aug_edges, unused, aug_n, kappa);
    std::vector<Cyclo> aug_w = ew;
    for (long m : g.vertex_m) aug_w.push_back(b.zeta(m));
    std::vector<Cyclo> zero_field(aug_n, b.one());
    Cyclo rhs_sum = potts_partition<Cyclo>(q, aug_n, aug_edges, aug_w,
                                           zero_field, b.zero(), b.one());
    mpq_class qinv(1, 1);
    for (int i = 0; i < kappa; ++i) qinv /= q;
    Cyclo rhs = rhs_sum * qinv;
    if (lhs != rhs) ++r.failures;
  }
  return r;
}

inline IdentityCheckResult check_potts_tutte_hyperbola(uint64_t seed,
                                                       int trials) {
  IdentityCheckResult r{"potts-tutte-hyperbola", trials};
  SplitMix64 rng(seed);
  FloatBackend fb(1);  // scalar helpers only; point comes from theta below
  for (int t = 0; t < trials; ++t) {
    auto g = detail::random_weighted_graph(rng, 5, 6);
    if (g.edges.empty()) g = detail::random_weighted_graph(rng, 5, 6);
    int q = 2 + static_cast<int>(rng.next() % 2);
    std::complex<double> theta{
        0.2 + 1.5 * ((rng.next() >> 11) * 0x1.0p-53),
        -1.0 + 2.0 * ((rng.next() >> 11) * 0x1.0p-53)};
    std::vector<std::tuple<int, int, long>> medges;
    for (size_t i = 0; i < g.edges.size(); ++i)
      medges.emplace_back(g.edges[i].first, g.edges[i].second, g.edge_m[i]);
    Multigraph mg(g.n, medges);
    std::vector<std::complex<double>> ew;
    for (long m : g.edge_m)
      ew.push_back(std::exp(theta * static_cast<double>(m)));
    std::vector<std::complex<double>> vw(g.n, 1.0);
    std::complex<double> lhs = potts_partition<std::complex<double>>(
        q, g.n, g.edges, ew, vw, 0.0, 1.0);
    std::complex<double> et = std::exp(theta);
    std::complex<double> x = (et + static_cast<double>(q - 1)) / (et - 1.0);
    std::complex<double> y = et;
    TuttePoly tp = TuttePoly::subset_expansion(mg);
    std::complex<double> tutte = tp.eval_at(fb, x, y);
    std::complex<double> rhs = std::pow(static_cast<double>(q), mg.kappa()) *
                               std::pow(et - 1.0, static_cast<double>(mg.rank())) *
                               tutte;
    double err = detail::rel_err(lhs, rhs);
    r.max_err = std::max(r.max_err, err);
    if (err > 1e-9) ++r.failures;
  }
  return r;
}

inline IdentityCheckResult check_potts_tutte_hyperbola_exact(uint64_t seed,
                                                             int trials,
                                                             int k = 2) {
  IdentityCheckResult r{"potts-tutte-hyperbola-exact", trials};
  SplitMix64 rng(seed);
  ExactBackend b(k);
  long period = 8L * k;
  for (int t = 0; t < trials; ++t) {
    auto g = detail::random_weighted_graph(rng, 5, period);
    if (g.edges.empty()) continue;
    int q = 2 + static_cast<int>(rng.next() % 2);
    long m0 = 1 + 2 * static_cast<long>(rng.next() % (period / 2));  // odd
    std::vector<std::tuple<int, int, long>> medges;
    for (size_t i = 0; i < g.edges.size(); ++i)
      medges.emplace_back(g.edges[i].first, g.edges[i].second, g.edge_m[i]);
    Multigraph mg(g.n, medges);
    std::vector<Cyclo> ew;
    for (long m : g.edge_m) ew.push_back(b.zeta(m0 * m));
    std::vector<Cyclo> vw(g.n, b.one());
    Cyclo lhs = potts_partition<Cyclo>(q, g.n, g.edges, ew, vw, b.zero(), b.one());
    Cyclo et = b.zeta(m0);
    Cyclo qs = b.from_int(q);
    Cyclo x = (et + qs - b.one()) * (et - b.one()).inverse();
    Cyclo y = et;
    TuttePoly tp = TuttePoly::subset_expansion(mg);
    Cyclo tutte = tp.eval_at(b, x, y);
    Cyclo rhs = qs.pow(mg.kappa()) * (et - b.one()).pow(mg.rank()) * tutte;
    if (lhs != rhs) ++r.failures;
  }
  return r;
}

inline IdentityCheckResult check_potts_ising(uint64_t seed, int trials) {
  IdentityCheckResult r{"potts-ising-q2", trials};
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto g = detail::random_weighted_graph(rng, 5, 8);
    std::complex<double> lhs =
        potts_partition_w(2, g.n, g.edges, g.omega, g.upsilon);
    std::complex<double> wsum = 0.0;
    for (auto& o : g.omega) wsum += o;
    for (auto& u : g.upsilon) wsum += u;
    std::vector<std::complex<double>> half_o, half_u;
    for (auto& o : g.omega) half_o.push_back(o * 0.5);
    for (auto& u : g.upsilon) half_u.push_back(u * 0.5);
    std::complex<double> rhs =
        std::exp(0.5 * wsum) * ising_partition_w(g.n, g.edges, half_o, half_u);
    double err = detail::rel_err(lhs, rhs);
    r.max_err = std::max(r.max_err, err);
    if (err > 1e-9) ++r.failures;
  }
  return r;
}

inline IdentityCheckResult check_iqp_ising(uint64_t seed, int trials) {
  IdentityCheckResult r{"iqp-ising-amplitude", trials};
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto g = detail::random_weighted_graph(rng, 5, 8);
    // real angles for the X-program
    std::vector<double> w_edge, w_vertex;
    for (auto& o : g.omega) w_edge.push_back(o.real());
    for (auto& u : g.upsilon) w_vertex.push_back(u.real());
    std::vector<std::pair<uint64_t, double>> terms;
    for (size_t i = 0; i < g.edges.size(); ++i)
      terms.push_back({(1ULL << g.edges[i].first) | (1ULL << g.edges[i].second),
                       w_edge[i]});
    for (int v = 0; v < g.n; ++v) terms.push_back({1ULL << v, w_vertex[v]});
    auto state = xrotation_state(g.n, terms);
    std::complex<double> lhs = state[0];
    std::vector<std::complex<double>> io, iu;
    for (double w : w_edge) io.push_back({0.0, w});
    for (double w : w_vertex) iu.push_back({0.0, w});
    std::complex<double> rhs =
        ising_partition_w(g.n, g.edges, io, iu) / std::pow(2.0, g.n);
    double err = detail::rel_err(lhs, rhs);
    r.max_err = std::max(r.max_err, err);
    if (err > 1e-9) ++r.failures;
  }
  return r;
}

inline std::vector<IdentityCheckResult> run_identity_suite(uint64_t seed,
                                                           int trials) {
  return {check_potts_external_field(seed, trials),
          check_potts_external_field_exact(seed + 1, trials / 4 + 1),
          check_potts_tutte_hyperbola(seed + 2, trials),
          check_potts_tutte_hyperbola_exact(seed + 3, trials / 4 + 1),
          check_potts_ising(seed + 4, trials),
          check_iqp_ising(seed + 5, trials)};
}

}  // namespace tuttesim
