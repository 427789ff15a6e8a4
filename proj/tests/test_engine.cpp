#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>

#include "tuttesim/bench.hpp"
#include "tuttesim/engine.hpp"
#include "tuttesim/oracle.hpp"

using namespace tuttesim;
using Cx = std::complex<double>;

namespace {
Multigraph triangle(long a = 1, long b = 1, long c = 1) {
  return Multigraph(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}});
}
Multigraph cycle(int n, long mult = 1) {
  std::vector<std::tuple<int, int, long>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, mult});
  return Multigraph(n, edges);
}
Multigraph random_multigraph(SplitMix64& rng, int max_v, int max_e,
                             long max_mult) {
  int n = 2 + static_cast<int>(rng.next() % (max_v - 1));
  std::vector<std::tuple<int, int, long>> edges;
  int ecount = static_cast<int>(rng.next() % (max_e + 1));
  for (int i = 0; i < ecount; ++i)
    edges.push_back({static_cast<int>(rng.next() % n),
                     static_cast<int>(rng.next() % n),
                     1 + static_cast<long>(rng.next() % max_mult)});
  return Multigraph(n, edges);
}
}  // namespace

TEST_CASE("single edge and single loop") {
  for (int k : {1, 2, 3}) {
    ExactBackend b(k);
    auto edge = evaluate(Multigraph(2, {{0, 1, 1}}), b, Heuristic::VertexOrder);
    CHECK(edge.value == b.x());
    CHECK(edge.stats.total_leaves() == 1);
    auto loop = evaluate(Multigraph(1, {{0, 0, 1}}), b, Heuristic::VertexOrder);
    CHECK(loop.value == b.y());
    // loop of multiplicity 3 -> y^3
    auto loop3 = evaluate(Multigraph(1, {{0, 0, 3}}), b, Heuristic::VertexOrder);
    CHECK(loop3.value == b.ypow(3));
  }
}

TEST_CASE("empty graph evaluates to 1 with one empty leaf") {
  ExactBackend b(2);
  auto res = evaluate(Multigraph(), b, Heuristic::MinDegree);
  CHECK(res.value == b.one());
  CHECK(res.stats.leaves_empty == 1);
  auto iso = evaluate(Multigraph(4, {}), b, Heuristic::MinDegree);
  CHECK(iso.value == b.one());
}

TEST_CASE("triangle and C4 at the Clifford point") {
  ExactBackend b(1);
  auto tri = evaluate(triangle(), b, Heuristic::VertexOrder);
  CHECK(tri.value == Cyclo::integer(1, -1));
  auto c4 = evaluate(cycle(4), b, Heuristic::VertexOrder);
  CHECK(c4.value == Cyclo::integer(1, -1) + Cyclo::zeta_pow(1, 2));  // -1 + i
}

TEST_CASE("coloop batching closed forms") {
  ExactBackend b(2);
  // multiplicity-2 coloop alone: factor x + y, empty remainder
  auto res = evaluate(Multigraph(2, {{0, 1, 2}}), b, Heuristic::MinDegree);
  CHECK(res.value == b.x() + b.y());
  CHECK(res.stats.leaves_empty == 1);
  CHECK(res.stats.total_leaves() == 1);

  // looped forest: product of loop and coloop factors
  Multigraph lf(4, {{0, 0, 2}, {0, 1, 3}, {1, 2, 1}, {1, 3, 5}});
  auto lfres = evaluate(lf, b, Heuristic::MinDegree);
  Cyclo expect = b.ypow(2) * b.coloop_factor(3) * b.coloop_factor(1) *
                 b.coloop_factor(5);
  CHECK(lfres.value == expect);
  CHECK(lfres.stats.total_leaves() == 1);
  CHECK(lfres.stats.leaves_empty == 1);
}

TEST_CASE("mod-4k simplification factor, both routes") {
  // single multiedge of multiplicity 8 at k=2: the edge drops entirely and
  // the factor equals the coloop closed form x + sum_{1..7} y^i = x - 1
  ExactBackend b(2);
  Multigraph g(2, {{0, 1, 8}});
  auto [simplified, factor] = Engine<ExactBackend>::simplify_mod_4k(g, b);
  CHECK(simplified.edges().empty());
  CHECK(factor == b.simplify_base_pow(-1));
  CHECK(factor == b.coloop_factor(8));
  auto full = evaluate(g, b, Heuristic::VertexOrder);
  CHECK(full.value == factor);

  // multiplicity 9 reduces to 1 with unit factor
  auto [s9, f9] = Engine<ExactBackend>::simplify_mod_4k(
      Multigraph(2, {{0, 1, 9}}), b);
  REQUIRE(s9.edges().size() == 1);
  CHECK(s9.edges()[0].mult == 1);
  CHECK(f9 == b.one());

  // all multiplicities < 4k: identity
  Multigraph small = triangle(2, 3, 7);
  auto [ss, sf] = Engine<ExactBackend>::simplify_mod_4k(small, b);
  CHECK(ss.canonical_edge_list() == small.canonical_edge_list());
  CHECK(sf == b.one());
}

TEST_CASE("multicycle closed form matches the oracle") {
  ExactBackend b(2);
  // triangle with unit multiplicities: x^2 + x + y
  Cyclo t3 = Engine<ExactBackend>::multicycle_value(triangle(), b);
  CHECK(t3 == b.x() * b.x() + b.x() + b.y());
  // C4: x^3 + x^2 + x + y
  Cyclo t4 = Engine<ExactBackend>::multicycle_value(cycle(4), b);
  CHECK(t4 == b.x() * b.x() * b.x() + b.x() * b.x() + b.x() + b.y());
  // mixed multiplicities against the subset oracle, several rotations
  for (auto mults : std::vector<std::array<long, 3>>{
           {2, 1, 1}, {1, 2, 1}, {5, 3, 2}, {7, 7, 7}}) {
    Multigraph g = triangle(mults[0], mults[1], mults[2]);
    CHECK(Engine<ExactBackend>::multicycle_value(g, b) ==
          TuttePoly::subset_expansion(g).eval_quantum(b));
  }
  for (int k : {1, 2, 3}) {
    ExactBackend bk(k);
    SplitMix64 rng(77 + k);
    for (int t = 0; t < 10; ++t) {
      int n = 3 + static_cast<int>(rng.next() % 4);
      std::vector<std::tuple<int, int, long>> edges;
      for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n,
                         1 + static_cast<long>(rng.next() % (4 * k))});
      Multigraph g(n, edges);
      CHECK(Engine<ExactBackend>::multicycle_value(g, bk) ==
            TuttePoly::subset_expansion(g).eval_quantum(bk));
    }
  }
}

TEST_CASE("component factorization") {
  ExactBackend b(2);
  Heuristic h = Heuristic::VertexOrder;
  // two disjoint triangles: T = T(C3)^2
  Multigraph two(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1},
                     {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  Cyclo t3 = evaluate(triangle(), b, h).value;
  CHECK(evaluate(two, b, h).value == t3 * t3);
  // bowtie: also T(C3)^2
  Multigraph bow(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1},
                     {2, 3, 1}, {3, 4, 1}, {2, 4, 1}});
  CHECK(evaluate(bow, b, h).value == t3 * t3);
  // disjoint-union factorization on random instances
  SplitMix64 rng(101);
  for (int t = 0; t < 15; ++t) {
    Multigraph a = random_multigraph(rng, 4, 5, 4);
    Multigraph c = random_multigraph(rng, 4, 5, 4);
    std::vector<std::tuple<int, int, long>> merged;
    for (const auto& e : a.edges()) merged.push_back({e.u, e.v, e.mult});
    int off = a.max_id() + 1;
    for (const auto& e : c.edges())
      merged.push_back({e.u + off, e.v + off, e.mult});
    Multigraph un(off + c.max_id() + 1, merged);
    CHECK(evaluate(un, b, h).value ==
          evaluate(a, b, h).value * evaluate(c, b, h).value);
  }
}

TEST_CASE("edge selection heuristics") {
  int k = 2;
  // star K1,3 under min-degree picks an edge at a leaf (all qualify; lowest id)
  Multigraph star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  CHECK(Engine<ExactBackend>::select_edge(star, Heuristic::MinDegree, k) == 0);
  // path a-b-c-d under max-degree-sum picks the middle edge (sum 4)
  Multigraph path(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  CHECK(Engine<ExactBackend>::select_edge(path, Heuristic::MaxDegreeSum, k) ==
        1);
  // triangle multiplicities (2,4,3) at k=2: non-Vertigan picks the odd one
  Multigraph tri = triangle(2, 4, 3);
  CHECK(Engine<ExactBackend>::select_edge(tri, Heuristic::NonVertigan, k) == 2);
  // vertex-order picks, at the lowest vertex, the edge to its lowest neighbour
  Multigraph g(4, {{1, 3, 1}, {0, 3, 1}, {0, 2, 1}, {2, 3, 1}});
  CHECK(Engine<ExactBackend>::select_edge(g, Heuristic::VertexOrder, k) == 2);
}

TEST_CASE("oracle equivalence on random multigraphs, exact") {
  SplitMix64 rng(2025);
  for (int k : {1, 2, 3}) {
    ExactBackend b(k);
    for (int t = 0; t < 40; ++t) {
      Multigraph g = random_multigraph(rng, 6, 8, 4 * k + 1);
      Cyclo oracle = TuttePoly::subset_expansion(g).eval_quantum(b);
      auto res = evaluate(g, b, Heuristic::NonVertigan);
      INFO("k=" << k << " t=" << t);
      CHECK(res.value == oracle);
      CHECK(res.stats.total_leaves() >= 1);
    }
  }
}

TEST_CASE("heuristic and toggle invariance, exact backend") {
  SplitMix64 rng(31337);
  ExactBackend b(2);
  for (int t = 0; t < 12; ++t) {
    Multigraph g = random_multigraph(rng, 6, 7, 9);
    Cyclo ref = TuttePoly::subset_expansion(g).eval_quantum(b);
    for (int mask = 0; mask < 32; ++mask) {
      PruningToggles tg;
      tg.components = mask & 1;
      tg.bicomponents = mask & 2;
      tg.multicycle = mask & 4;
      tg.vertigan = mask & 8;
      tg.mod4k_simplify = mask & 16;
      tg.planar_fkt = false;
      for (const auto& [h, name] : heuristic_names()) {
        auto res = evaluate(g, b, h, tg);
        INFO("mask=" << mask << " heuristic=" << name);
        CHECK(res.value == ref);
        CHECK(res.stats.total_leaves() ==
              res.stats.leaves_empty + res.stats.leaves_vertigan +
                  res.stats.leaves_multicycle + res.stats.leaves_planar);
      }
    }
  }
}

TEST_CASE("non-Vertigan leaf bound") {
  SplitMix64 rng(555);
  for (int k : {2, 3}) {
    ExactBackend b(k);
    for (int t = 0; t < 60; ++t) {
      Multigraph g = random_multigraph(rng, 6, 10, 9);
      auto [simplified, factor] =
          Engine<ExactBackend>::simplify_mod_4k(g, b);
      int nu = simplified.probe_basic(k).nu;
      auto res = evaluate(g, b, Heuristic::NonVertigan);
      INFO("k=" << k << " t=" << t << " nu=" << nu);
      CHECK(res.stats.total_leaves() <= (1ULL << nu));
    }
  }
}

TEST_CASE("deterministic parallel evaluation") {
  SplitMix64 rng(777);
  ExactBackend b(2);
  for (int t = 0; t < 6; ++t) {
    Multigraph g = random_multigraph(rng, 6, 9, 7);
    auto seq = evaluate(g, b, Heuristic::MaxDegreeSum, {}, 1);
    auto par = evaluate(g, b, Heuristic::MaxDegreeSum, {}, 4);
    CHECK(seq.value == par.value);
    CHECK(seq.stats.total_leaves() == par.stats.total_leaves());
    CHECK(seq.stats.recursion_nodes == par.stats.recursion_nodes);
  }
}

TEST_CASE("float backend tracks the exact backend") {
  SplitMix64 rng(888);
  FloatBackend f(2);
  ExactBackend b(2);
  for (int t = 0; t < 20; ++t) {
    Multigraph g = random_multigraph(rng, 6, 8, 9);
    PruningToggles tg;  // FKT stays off so the float path mirrors the exact one
    Cx fe = evaluate(g, f, Heuristic::VertexOrder, tg).value;
    Cx ee = evaluate(g, b, Heuristic::VertexOrder, tg).value.to_complex();
    CHECK(std::abs(fe - ee) <= 1e-9 * std::max({1.0, std::abs(fe), std::abs(ee)}));
  }
}

TEST_CASE("config conflict: FKT under the exact backend is rejected") {
  ExactBackend b(2);
  PruningToggles tg;
  tg.planar_fkt = true;
  CHECK_THROWS_AS(Engine<ExactBackend>(b, Heuristic::VertexOrder, tg),
                  std::invalid_argument);
}
