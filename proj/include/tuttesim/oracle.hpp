#pragma once

// Independent exponential-time reference implementations used by the tests:
// the Tutte polynomial by subset expansion, Potts/Ising partition sums by
// direct configuration enumeration, and dense statevector amplitudes.  None
// of these share code with the deletion-contraction engine.

#include <complex>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "tuttesim/backend.hpp"
#include "tuttesim/circuit.hpp"
#include "tuttesim/multigraph.hpp"
#include "tuttesim/xprogram.hpp"

namespace tuttesim {

struct OracleBudget {
  int max_multiedges = 24;  // subset expansion enumerates 2^multiedges
  int max_spins = 16;       // partition sums enumerate q^spins
  int max_qubits = 20;      // statevector holds 2^qubits amplitudes
};

// Integer bivariate polynomial sum_{a,b} C[a][b] (x-1)^a (y-1)^b.
//
// Computed from the subset expansion
//   T(G) = sum_{A subseteq E} (x-1)^{kappa(A)-kappa(E)} (y-1)^{kappa(A)+|A|-|V|}
// over parallel copies, grouped per underlying subset S: choosing j >= 1 of
// the m_e copies of e contributes binom(m_e, j)(y-1)^j, and
// sum_j binom(m_e,j) t^j = (1+t)^{m_e} - 1.
class TuttePoly {
 public:
  static TuttePoly subset_expansion(const Multigraph& g,
                                    const OracleBudget& budget = {}) {
    const auto& edges = g.edges();
    int ne = static_cast<int>(edges.size());
    if (ne > budget.max_multiedges)
      throw std::invalid_argument("subset_expansion: too many multiedges");
    int nv = static_cast<int>(g.vertices().size());
    std::vector<int> pos(g.max_id() + 1, -1);
    for (int i = 0; i < nv; ++i) pos[g.vertices()[i]] = i;
    int kappa_all = g.kappa();

    // (1+t)^m - 1 per multiedge
    std::vector<std::vector<mpz_class>> edge_poly(ne);
    for (int i = 0; i < ne; ++i) {
      long m = edges[i].mult;
      std::vector<mpz_class> p(m + 1);
      mpz_class binom = 1;
      for (long j = 1; j <= m; ++j) {
        binom = binom * (m - j + 1) / j;
        p[j] = binom;
      }
      edge_poly[i] = std::move(p);
    }

    TuttePoly out;
    out.c_.assign(nv + 1, {});
    std::vector<int> chosen;
    std::vector<mpz_class> prod{mpz_class(1)};
    dfs(g, edge_poly, 0, chosen, prod, nv, kappa_all, pos, out);
    return out;
  }

  const mpz_class& coeff(int a, int b) const {
    static const mpz_class zero = 0;
    if (a < 0 || a >= static_cast<int>(c_.size())) return zero;
    if (b < 0 || b >= static_cast<int>(c_[a].size())) return zero;
    return c_[a][b];
  }

  template <class B>
  typename B::Scalar eval_at(const B& b, const typename B::Scalar& x,
                             const typename B::Scalar& y) const {
    using S = typename B::Scalar;
    S xm1 = x - b.one();
    S ym1 = y - b.one();
    S total = b.zero();
    S xpow = b.one();
    for (const auto& row : c_) {
      S acc = b.zero();
      for (auto it = row.rbegin(); it != row.rend(); ++it)
        acc = acc * ym1 + b.from_mpz(*it);
      total += xpow * acc;
      xpow = xpow * xm1;
    }
    return total;
  }

  template <class B>
  typename B::Scalar eval_quantum(const B& b) const {
    return eval_at(b, b.x(), b.y());
  }

 private:
  static void dfs(const Multigraph& g,
                  const std::vector<std::vector<mpz_class>>& edge_poly, int idx,
                  std::vector<int>& chosen, const std::vector<mpz_class>& prod,
                  int nv, int kappa_all, const std::vector<int>& pos,
                  TuttePoly& out) {
    const auto& edges = g.edges();
    if (idx == static_cast<int>(edges.size())) {
      // kappa(S) over all |V| vertices
      std::vector<int> parent(nv);
      for (int i = 0; i < nv; ++i) parent[i] = i;
      auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
      };
      int kappa = nv;
      for (int e : chosen) {
        int a = find(pos[edges[e].u]), b = find(pos[edges[e].v]);
        if (a != b) {
          parent[a] = b;
          --kappa;
        }
      }
      int a_exp = kappa - kappa_all;
      int b_shift = kappa - nv;  // added to each t-degree; total stays >= 0
      auto& row = out.c_[a_exp];
      if (row.size() < prod.size() + b_shift)
        row.resize(prod.size() + b_shift);
      for (size_t j = 0; j < prod.size(); ++j) {
        if (prod[j] == 0) continue;
        row[j + b_shift] += prod[j];
      }
      return;
    }
    dfs(g, edge_poly, idx + 1, chosen, prod, nv, kappa_all, pos, out);
    std::vector<mpz_class> next(prod.size() + edge_poly[idx].size() - 1);
    for (size_t i = 0; i < prod.size(); ++i) {
      if (prod[i] == 0) continue;
      for (size_t j = 1; j < edge_poly[idx].size(); ++j)
        next[i + j] += prod[i] * edge_poly[idx][j];
    }
    chosen.push_back(idx);
    dfs(g, edge_poly, idx + 1, chosen, next, nv, kappa_all, pos, out);
    chosen.pop_back();
  }

  std::vector<std::vector<mpz_class>> c_;
};

// Copy-wise subset expansion over individual parallel copies; cross-check for
// the grouped version on tiny inputs.
template <class B>
typename B::Scalar tutte_subset_naive(const Multigraph& g, const B& b,
                                      const typename B::Scalar& x,
                                      const typename B::Scalar& y,
                                      int max_copies = 20) {
  using S = typename B::Scalar;
  std::vector<std::pair<int, int>> copies;
  for (const auto& e : g.edges())
    for (long j = 0; j < e.mult; ++j) copies.push_back({e.u, e.v});
  int ne = static_cast<int>(copies.size());
  if (ne > max_copies)
    throw std::invalid_argument("tutte_subset_naive: too many edge copies");
  int nv = static_cast<int>(g.vertices().size());
  std::vector<int> pos(g.max_id() + 1, -1);
  for (int i = 0; i < nv; ++i) pos[g.vertices()[i]] = i;
  int kappa_all = g.kappa();
  S xm1 = x - b.one();
  S ym1 = y - b.one();
  S total = b.zero();
  for (uint64_t mask = 0; mask < (1ULL << ne); ++mask) {
    std::vector<int> parent(nv);
    for (int i = 0; i < nv; ++i) parent[i] = i;
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    int kappa = nv, size = 0;
    for (int e = 0; e < ne; ++e) {
      if (!(mask >> e & 1)) continue;
      ++size;
      int a = find(pos[copies[e].first]), c = find(pos[copies[e].second]);
      if (a != c) {
        parent[a] = c;
        --kappa;
      }
    }
    S term = b.one();
    for (int i = 0; i < kappa - kappa_all; ++i) term = term * xm1;
    for (int i = 0; i < kappa + size - nv; ++i) term = term * ym1;
    total += term;
  }
  return total;
}

// q-state Potts configuration sum; edge_w[i] multiplies when the endpoints
// agree, vertex_w[v] when the spin is 0.
template <class S>
S potts_partition(int q, int n, const std::vector<std::pair<int, int>>& edges,
                  const std::vector<S>& edge_w, const std::vector<S>& vertex_w,
                  const S& zero, const S& one, int max_spins = 16) {
  if (n > max_spins)
    throw std::invalid_argument("potts_partition: too many spins");
  std::vector<int> sigma(n, 0);
  S total = zero;
  for (;;) {
    S w = one;
    for (size_t i = 0; i < edges.size(); ++i)
      if (sigma[edges[i].first] == sigma[edges[i].second]) w = w * edge_w[i];
    for (int v = 0; v < n; ++v)
      if (sigma[v] == 0) w = w * vertex_w[v];
    total += w;
    int p = 0;
    while (p < n && ++sigma[p] == q) sigma[p++] = 0;
    if (p == n) break;
  }
  return total;
}

// Ising configuration sum over spins in {-1,+1}; weights are passed as
// exp(+w) / exp(-w) pairs so no scalar division is needed.
template <class S>
S ising_partition(int n, const std::vector<std::pair<int, int>>& edges,
                  const std::vector<S>& edge_wp, const std::vector<S>& edge_wm,
                  const std::vector<S>& vertex_wp,
                  const std::vector<S>& vertex_wm, const S& zero, const S& one,
                  int max_spins = 16) {
  if (n > max_spins)
    throw std::invalid_argument("ising_partition: too many spins");
  S total = zero;
  for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    auto spin = [&](int v) { return (mask >> v & 1) ? -1 : +1; };
    S w = one;
    for (size_t i = 0; i < edges.size(); ++i) {
      int s = spin(edges[i].first) * spin(edges[i].second);
      w = w * (s > 0 ? edge_wp[i] : edge_wm[i]);
    }
    for (int v = 0; v < n; ++v) w = w * (spin(v) > 0 ? vertex_wp[v] : vertex_wm[v]);
    total += w;
  }
  return total;
}

inline std::complex<double> cis(double a) { return std::polar(1.0, a); }

// Convenience float forms taking raw complex weights.
inline std::complex<double> potts_partition_w(
    int q, int n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<std::complex<double>>& omega,
    const std::vector<std::complex<double>>& upsilon, int max_spins = 16) {
  std::vector<std::complex<double>> ew, vw;
  for (auto& o : omega) ew.push_back(std::exp(o));
  for (auto& u : upsilon) vw.push_back(std::exp(u));
  return potts_partition<std::complex<double>>(q, n, edges, ew, vw, 0.0, 1.0,
                                               max_spins);
}

inline std::complex<double> ising_partition_w(
    int n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<std::complex<double>>& omega,
    const std::vector<std::complex<double>>& upsilon, int max_spins = 16) {
  std::vector<std::complex<double>> ep, em, vp, vm;
  for (auto& o : omega) {
    ep.push_back(std::exp(o));
    em.push_back(std::exp(-o));
  }
  for (auto& u : upsilon) {
    vp.push_back(std::exp(u));
    vm.push_back(std::exp(-u));
  }
  return ising_partition<std::complex<double>>(n, edges, ep, em, vp, vm, 0.0,
                                               1.0, max_spins);
}

// State prod_j e^{i alpha_j X_{mask_j}} |0^n>; masks are qubit bit-sets.
inline std::vector<std::complex<double>> xrotation_state(
    int n, const std::vector<std::pair<uint64_t, double>>& terms,
    int max_qubits = 20) {
  if (n > max_qubits)
    throw std::invalid_argument("xrotation_state: too many qubits");
  std::vector<std::complex<double>> v(1ULL << n, 0.0);
  v[0] = 1.0;
  for (auto [mask, alpha] : terms) {
    double c = std::cos(alpha), s = std::sin(alpha);
    if (mask == 0) {
      for (auto& a : v) a *= std::complex<double>(c, s);
      continue;
    }
    for (uint64_t i = 0; i < v.size(); ++i) {
      uint64_t j = i ^ mask;
      if (j < i) continue;
      auto a = v[i], b = v[j];
      v[i] = c * a + std::complex<double>(0, s) * b;
      v[j] = c * b + std::complex<double>(0, s) * a;
    }
  }
  return v;
}

inline std::complex<double> statevector_amplitude(const XProgram& xp,
                                                  uint64_t outcome,
                                                  int max_qubits = 20) {
  double theta = std::numbers::pi / (4.0 * xp.k);
  std::vector<std::pair<uint64_t, double>> terms;
  for (const auto& r : xp.rows) {
    uint64_t mask = 0;
    for (int c : r.support) mask |= 1ULL << c;
    terms.push_back({mask, theta * r.mult});
  }
  auto v = xrotation_state(xp.cols, terms, max_qubits);
  return cis(theta * xp.phase_zeta) * v[outcome];
}

// Gate-by-gate statevector amplitude <outcome| C |0^n>.
inline std::complex<double> statevector_amplitude(const Circuit& c,
                                                  uint64_t outcome,
                                                  int max_qubits = 20) {
  if (c.qubits > max_qubits)
    throw std::invalid_argument("statevector_amplitude: too many qubits");
  double theta = std::numbers::pi / (4.0 * c.k);
  std::vector<std::complex<double>> v(1ULL << c.qubits, 0.0);
  v[0] = 1.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::H: {
        uint64_t bit = 1ULL << g.q0;
        for (uint64_t i = 0; i < v.size(); ++i) {
          if (i & bit) continue;
          auto a = v[i], b = v[i | bit];
          v[i] = inv_sqrt2 * (a + b);
          v[i | bit] = inv_sqrt2 * (a - b);
        }
        break;
      }
      case Gate::Kind::RX:
      case Gate::Kind::RXX: {
        uint64_t mask = 1ULL << g.q0;
        if (g.kind == Gate::Kind::RXX) mask |= 1ULL << g.q1;
        double alpha = theta * g.mult;
        double co = std::cos(alpha), si = std::sin(alpha);
        for (uint64_t i = 0; i < v.size(); ++i) {
          uint64_t j = i ^ mask;
          if (j < i) continue;
          auto a = v[i], b = v[j];
          v[i] = co * a + std::complex<double>(0, si) * b;
          v[j] = co * b + std::complex<double>(0, si) * a;
        }
        break;
      }
    }
  }
  return v[outcome];
}

// Gauss sum target sqrt(2)^{d+dim} e^{i pi sigma/4} as an exact Gaussian
// integer (the sum of i^{|x|} over a code always lies in Z[i]).
inline std::pair<long long, long long> gauss_target(int d_plus_dim,
                                                    int sigma) {
  long long re[8] = {1, 1, 0, -1, -1, -1, 0, 1};
  long long im[8] = {0, 1, 1, 1, 0, -1, -1, -1};
  // even exponent: 2^{e/2} * i^{sigma/2}-style lattice point; odd exponent:
  // sqrt2 * unit must still be a Gaussian integer, which forces odd sigma
  bool odd = d_plus_dim & 1;
  if (odd != (sigma & 1))
    throw std::domain_error("gauss_target: parity mismatch");
  long long scale = 1LL << ((d_plus_dim - (odd ? 1 : 0)) / 2);
  if (!odd) return {scale * re[sigma], scale * im[sigma]};
  // sqrt(2) e^{i pi sigma/4} with odd sigma is (+-1 +- i)
  long long r = (sigma == 1 || sigma == 7) ? 1 : -1;
  long long i = (sigma == 1 || sigma == 3) ? 1 : -1;
  return {scale * r, scale * i};
}

}  // namespace tuttesim
