#pragma once

// Random instance generation and heuristic-comparison statistics.
//
// PRNG discipline: instance i of a suite draws from SplitMix64 whose state is
// initialised to seed + i * 0x9E3779B97F4A7C15 (one independent stream per
// instance index), making every table bit-reproducible across platforms.
// Draw order per instance: edge slots in lexicographic (u, v) order -- for the
// sparse class one word per slot decides presence (word < p * 2^64), then one
// word per present edge gives the weight multiplier (word & 7); optional
// random vertex weights draw one word per vertex, ascending.

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tuttesim/amplitude.hpp"
#include "tuttesim/engine.hpp"
#include "tuttesim/xprogram.hpp"

namespace tuttesim {

struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, m) for m a power of two
  uint64_t bits(int b) { return next() >> (64 - b); }
};

struct InstanceSpec {
  enum class Class { Dense, Sparse };
  Class cls = Class::Dense;
  int n = 8;
  int k = 2;
  uint64_t seed = 1;
  double p = 0.5;                     // sparse edge probability
  bool random_vertex_weights = false;
};

inline InstanceSpec::Class parse_instance_class(const std::string& s) {
  if (s == "dense") return InstanceSpec::Class::Dense;
  if (s == "sparse") return InstanceSpec::Class::Sparse;
  throw std::invalid_argument("unknown instance class: " + s);
}

// Deterministic weighted-graph instance; weight multiplier 0 means the edge
// is absent.
inline WeightedGraph gen_instance(const InstanceSpec& spec, uint64_t index) {
  if (spec.n < 2) throw std::invalid_argument("gen_instance: n must be >= 2");
  SplitMix64 rng(spec.seed + index * 0x9E3779B97F4A7C15ULL);
  WeightedGraph wg;
  wg.k = spec.k;
  wg.n = spec.n;
  wg.vertex_mult.assign(spec.n, 0);
  long period = 4L * spec.k;  // weights m * theta with m in Z/(4k): pi/8 grid at k=2
  const double two64 = 18446744073709551616.0;
  uint64_t threshold =
      spec.p >= 1.0 ? ~0ULL : static_cast<uint64_t>(spec.p * two64);
  for (int u = 0; u < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) {
      if (spec.cls == InstanceSpec::Class::Sparse) {
        uint64_t w = rng.next();
        bool present = spec.p >= 1.0 ? true : w < threshold;
        if (!present) continue;
      }
      long m = static_cast<long>(rng.next() % period);
      if (m != 0) wg.edge_mult[{u, v}] = m;
    }
  }
  if (spec.random_vertex_weights)
    for (int v = 0; v < spec.n; ++v)
      wg.vertex_mult[v] = static_cast<long>(rng.next() % period);
  return wg;
}

struct HeuristicStats {
  Heuristic heuristic;
  uint64_t sum = 0;
  double mean = 0, mean_dev = 0;
  uint64_t empty = 0, vertigan = 0, multicycle = 0, planar = 0;
};

struct SuiteStats {
  std::vector<HeuristicStats> rows;
};

// Evaluates every instance under every heuristic (float backend, FKT pruning
// on), asserting that all heuristics agree on the amplitude; aggregates the
// leaf statistics.  Optional JSON-lines log, one record per (instance,
// heuristic) pair.
inline SuiteStats run_suite(const InstanceSpec& spec, int count,
                            const std::vector<Heuristic>& heuristics,
                            int threads = 1, std::ostream* jsonl = nullptr) {
  FloatBackend backend(spec.k);
  PruningToggles toggles = default_toggles(/*exact_backend=*/false);
  std::vector<std::vector<uint64_t>> leaves(heuristics.size());
  SuiteStats out;
  for (size_t h = 0; h < heuristics.size(); ++h)
    out.rows.push_back({heuristics[h]});
  for (int i = 0; i < count; ++i) {
    WeightedGraph wg = gen_instance(spec, i);
    XProgram xp;  // instance as a graph-induced X-program for the amplitude
    xp.k = spec.k;
    xp.cols = wg.n;
    for (const auto& [uv, m] : wg.edge_mult) xp.add_row({uv.first, uv.second}, m);
    for (int v = 0; v < wg.n; ++v)
      if (wg.vertex_mult[v] > 0) xp.add_row({v}, wg.vertex_mult[v]);
    std::complex<double> ref{};
    for (size_t h = 0; h < heuristics.size(); ++h) {
      AmplitudeResult<FloatBackend> res =
          xprogram_amplitude(xp, backend, heuristics[h], toggles, threads);
      if (h == 0) {
        ref = res.value;
      } else {
        double scale = std::max({1.0, std::abs(ref), std::abs(res.value)});
        if (std::abs(ref - res.value) > 1e-9 * scale)
          throw std::logic_error(
              "run_suite: heuristics disagree on instance " +
              std::to_string(i));
      }
      const EvalStats& st = res.stats;
      leaves[h].push_back(st.total_leaves());
      out.rows[h].sum += st.total_leaves();
      out.rows[h].empty += st.leaves_empty;
      out.rows[h].vertigan += st.leaves_vertigan;
      out.rows[h].multicycle += st.leaves_multicycle;
      out.rows[h].planar += st.leaves_planar;
      if (jsonl) {
        *jsonl << "{\"instance\":" << i << ",\"heuristic\":\""
               << heuristic_name(heuristics[h]) << "\",\"leaves\":"
               << st.total_leaves() << ",\"empty\":" << st.leaves_empty
               << ",\"vertigan\":" << st.leaves_vertigan
               << ",\"multicycle\":" << st.leaves_multicycle
               << ",\"planar\":" << st.leaves_planar
               << ",\"nodes\":" << st.recursion_nodes
               << ",\"value_re\":" << res.value.real()
               << ",\"value_im\":" << res.value.imag() << "}\n";
      }
    }
  }
  for (size_t h = 0; h < heuristics.size(); ++h) {
    double mean = count ? static_cast<double>(out.rows[h].sum) / count : 0.0;
    double dev = 0;
    for (uint64_t l : leaves[h]) dev += std::abs(static_cast<double>(l) - mean);
    out.rows[h].mean = mean;
    out.rows[h].mean_dev = count ? dev / count : 0.0;
  }
  return out;
}

// CSV with the leaf-count column set; means rounded to integers.
inline std::string suite_csv(const SuiteStats& s) {
  std::ostringstream out;
  out << "heuristic,sum,mean,mean_dev,empty,vertigan,multicycle,planar\n";
  for (const auto& r : s.rows) {
    out << heuristic_name(r.heuristic) << "," << r.sum << ","
        << std::llround(r.mean) << "," << std::llround(r.mean_dev) << ","
        << r.empty << "," << r.vertigan << "," << r.multicycle << ","
        << r.planar << "\n";
  }
  return out.str();
}

}  // namespace tuttesim
