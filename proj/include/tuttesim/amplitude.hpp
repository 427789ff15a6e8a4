#pragma once

// Amplitude assembly: an X-program's principal amplitude through the graph
// pipeline is
//   psi(0) = z^{phase} * e^{i theta (r - |E'|)} (i sin theta)^r T(G'; x, y)
// over the augmented multigraph G', and a circuit amplitude adds the
// sqrt(2)^m Hadamard-gadget normalisation.  Other outcomes x at theta=pi/4k
// append 2k rows equal to x and multiply by -i.

#include <stdexcept>
#include <vector>

#include "tuttesim/circuit.hpp"
#include "tuttesim/engine.hpp"
#include "tuttesim/xprogram.hpp"

namespace tuttesim {

template <class S>
S scalar_npow(const S& base, long e, const S& one) {
  S r = one, b = base;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

template <class B>
struct AmplitudeResult {
  typename B::Scalar value;
  EvalStats stats;
};

template <class B>
AmplitudeResult<B> xprogram_amplitude(const XProgram& xp, const B& backend,
                                      Heuristic h = Heuristic::VertexOrder,
                                      PruningToggles t = {}, int threads = 1) {
  if (xp.k != backend.k())
    throw std::invalid_argument("xprogram_amplitude: k mismatch with backend");
  WeightedGraph wg = xprogram_to_graph(xp);
  Multigraph aug = augment_graph(wg);
  long E = aug.total_multiplicity();
  long r = aug.rank();
  EvalResult<B> res = evaluate(aug, backend, h, t, threads);
  typename B::Scalar value =
      backend.zeta(xp.phase_zeta) * backend.zeta(r - E) *
      scalar_npow(backend.isin_theta(), r, backend.one()) * res.value;
  return {value, res.stats};
}

// <x| exp(-i H_{(P,theta)}) |0^n> for theta = pi/4k: append k' = 2k copies of
// the outcome row (so they compose to i * X^{(x)}) and read the principal
// amplitude of the extended program times -i.
template <class B>
AmplitudeResult<B> amplitude_for_outcome(const XProgram& xp,
                                         const std::vector<bool>& outcome,
                                         long k_prime, const B& backend,
                                         Heuristic h = Heuristic::VertexOrder,
                                         PruningToggles t = {},
                                         int threads = 1) {
  if (static_cast<int>(outcome.size()) != xp.cols)
    throw std::invalid_argument("amplitude_for_outcome: outcome width");
  if (k_prime != 2L * xp.k)
    throw std::invalid_argument(
        "amplitude_for_outcome: program grid theta=pi/4k requires k' = 2k");
  XProgram ext = xp;
  std::vector<int> support;
  for (int c = 0; c < xp.cols; ++c)
    if (outcome[c]) support.push_back(c);
  ext.add_row(support, k_prime);
  AmplitudeResult<B> res = xprogram_amplitude(ext, backend, h, t, threads);
  res.value = backend.zeta(-2L * backend.k()) * res.value;  // -i
  return res;
}

// <0^n| C |0^n> = sqrt(2)^m * psi(0^{n+m}) over the compiled program.
template <class B>
AmplitudeResult<B> amplitude(const Circuit& c, const B& backend,
                             Heuristic h = Heuristic::VertexOrder,
                             PruningToggles t = {}, int threads = 1) {
  if (c.k != backend.k())
    throw std::invalid_argument("amplitude: k mismatch with backend");
  CompiledCircuit comp = compile_circuit(c);
  AmplitudeResult<B> res = xprogram_amplitude(comp.xp, backend, h, t, threads);
  res.value = backend.sqrt2_pow(comp.hadamards) * res.value;
  return res;
}

}  // namespace tuttesim
