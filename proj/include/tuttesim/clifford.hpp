#pragma once

// Polynomial-time evaluation of T(M(V); -i, i) for the cut-space code of a
// multigraph:
//   T = sqrt(2)^{d(V)} * e^{(i pi/4)(2|S| - 3 r(M) - sigma(V))}
// and 0 when Brown's invariant is undefined.  A multigraph whose edge
// multiplicities are all multiples of k reduces to this point:
//   T(G; x(k), y(k)) = (sqrt(2) e^{i pi (1-k)/4k} sin(pi/4k))^{-r(G)} T(G'; -i, i)
// where G' divides every multiplicity by k.

#include <stdexcept>
#include <tuple>

#include "tuttesim/backend.hpp"
#include "tuttesim/binary_code.hpp"
#include "tuttesim/multigraph.hpp"

namespace tuttesim {

template <class B>
typename B::Scalar tutte_clifford_point(const Multigraph& g, const B& backend) {
  BinaryCode code = BinaryCode::from_graph(g);
  BrownInvariant brown = code.brown_invariant();
  if (!brown.defined) return backend.zero();
  int d = code.bicycle_dimension();
  long s = code.length();
  long r = code.dim();
  long t = 2 * s - 3 * r - brown.sigma;
  return backend.sqrt2_pow(d) * backend.zeta8(t);
}

inline Multigraph divide_multiplicities(const Multigraph& g, int k) {
  std::vector<std::tuple<int, int, long>> edges;
  for (const auto& e : g.edges()) {
    if (e.mult % k != 0)
      throw std::logic_error("vertigan_value: multiplicity not divisible by k");
    edges.emplace_back(e.u, e.v, e.mult / k);
  }
  Multigraph out(g.max_id() + 1, edges);
  return out.without_isolated();
}

// T(g; x(k), y(k)) for a Vertigan graph (every multiplicity divisible by k).
template <class B>
typename B::Scalar vertigan_value(const Multigraph& g, const B& backend) {
  Multigraph reduced = divide_multiplicities(g, backend.k());
  long r = g.rank();
  return backend.vertigan_base_pow(-r) * tutte_clifford_point(reduced, backend);
}

}  // namespace tuttesim
