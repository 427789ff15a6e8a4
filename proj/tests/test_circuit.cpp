#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <sstream>

#include "tuttesim/amplitude.hpp"
#include "tuttesim/bench.hpp"
#include "tuttesim/circuit.hpp"
#include "tuttesim/oracle.hpp"
#include "tuttesim/selfcheck.hpp"
#include "tuttesim/xprogram.hpp"

using namespace tuttesim;
using Cx = std::complex<double>;

namespace {
double dist(Cx a, Cx b) { return std::abs(a - b); }

Circuit random_circuit(SplitMix64& rng, int k, int max_qubits, int max_gates,
                       int max_hadamards) {
  Circuit c;
  c.k = k;
  c.qubits = 1 + static_cast<int>(rng.next() % max_qubits);
  int hs = 0;
  int gates = 1 + static_cast<int>(rng.next() % max_gates);
  for (int i = 0; i < gates; ++i) {
    int kind = static_cast<int>(rng.next() % 3);
    int q = static_cast<int>(rng.next() % c.qubits);
    if (kind == 0 && hs < max_hadamards) {
      c.gates.push_back({Gate::Kind::H, q, 0, 0});
      ++hs;
    } else if (kind == 1 || c.qubits < 2) {
      c.gates.push_back(
          {Gate::Kind::RX, q, 0, static_cast<long>(rng.next() % (8 * k))});
    } else {
      int r = static_cast<int>(rng.next() % c.qubits);
      if (r == q) r = (q + 1) % c.qubits;
      c.gates.push_back(
          {Gate::Kind::RXX, q, r, static_cast<long>(rng.next() % (8 * k))});
    }
  }
  return c;
}
}  // namespace

TEST_CASE("circuit text format round trip and errors") {
  std::istringstream in("k 2\nqubits 3\nH 0\nRX 1 3\nRXX 0 2 5\n");
  Circuit c = Circuit::parse(in);
  CHECK(c.k == 2);
  CHECK(c.qubits == 3);
  REQUIRE(c.gates.size() == 3);
  CHECK(c.gates[0].kind == Gate::Kind::H);
  CHECK(c.gates[2].mult == 5);
  std::istringstream back(c.str());
  CHECK(Circuit::parse(back).str() == c.str());

  std::istringstream bad1("k 2\nH 0\n");
  CHECK_THROWS_AS(Circuit::parse(bad1), std::invalid_argument);
  std::istringstream bad2("k 2\nqubits 1\nH 3\n");
  CHECK_THROWS_AS(Circuit::parse(bad2), std::invalid_argument);
  std::istringstream bad3("k 2\nqubits 1\nCX 0\n");
  CHECK_THROWS_AS(Circuit::parse(bad3), std::invalid_argument);
}

TEST_CASE("xprogram text format round trip") {
  std::istringstream in("k 2\ncols 3\n110*3\n011\n001*2\n");
  XProgram xp = XProgram::parse(in);
  CHECK(xp.k == 2);
  CHECK(xp.cols == 3);
  REQUIRE(xp.rows.size() == 3);
  CHECK(xp.rows[0].mult == 3);
  std::istringstream back(xp.str());
  CHECK(XProgram::parse(back).str() == xp.str());
  std::istringstream bad("k 2\ncols 2\n111\n");
  CHECK_THROWS_AS(XProgram::parse(bad), std::invalid_argument);
}

TEST_CASE("compilation: rotations only") {
  Circuit c;
  c.k = 2;
  c.qubits = 2;
  c.gates.push_back({Gate::Kind::RX, 0, 0, 3});
  c.gates.push_back({Gate::Kind::RXX, 0, 1, 2});
  CompiledCircuit comp = compile_circuit(c);
  CHECK(comp.hadamards == 0);
  CHECK(comp.xp.cols == 2);
  REQUIRE(comp.xp.rows.size() == 2);
  CHECK(comp.xp.phase_zeta == 0);
}

TEST_CASE("compilation: Hadamard gadget rows") {
  Circuit c;
  c.k = 2;
  c.qubits = 1;
  c.gates.push_back({Gate::Kind::H, 0, 0, 0});
  CompiledCircuit comp = compile_circuit(c);
  CHECK(comp.hadamards == 1);
  CHECK(comp.xp.cols == 2);
  REQUIRE(comp.xp.rows.size() == 3);
  // the commuting expansion of the gadget exponent carries -k on the
  // single-qubit terms, i.e. multiplicity 7k mod 8k, and z^k global phase
  for (const auto& r : comp.xp.rows) {
    if (r.support.size() == 1) CHECK(r.mult == 14);
    if (r.support.size() == 2) CHECK(r.mult == 2);
  }
  CHECK(comp.xp.phase_zeta == 2);
  CHECK(comp.wire_of_qubit[0] == 1);
}

TEST_CASE("xprogram to weighted graph and augmentation") {
  XProgram xp;
  xp.k = 2;
  xp.cols = 3;
  xp.add_row({1, 2}, 3);
  xp.add_row({0}, 2);
  xp.add_row({0, 1}, 1);
  WeightedGraph wg = xprogram_to_graph(xp);
  CHECK(wg.edge_mult.at({1, 2}) == 3);
  CHECK(wg.edge_mult.at({0, 1}) == 1);
  CHECK(wg.vertex_mult[0] == 2);
  Multigraph aug = augment_graph(wg);
  // one component, one apex joined to vertex 0 with multiplicity 2
  CHECK(aug.max_id() == 3);
  CHECK(aug.edge(2).mult == 2);

  XProgram wide;
  wide.k = 1;
  wide.cols = 3;
  wide.add_row({0, 1, 2}, 1);
  CHECK_THROWS_AS(xprogram_to_graph(wide), std::invalid_argument);

  // empty program -> empty graph, amplitude 1
  XProgram empty;
  empty.k = 2;
  empty.cols = 2;
  ExactBackend b(2);
  CHECK(xprogram_amplitude(empty, b).value == b.one());
}

TEST_CASE("augmentation examples") {
  // single vertex with weight 1: one edge to the apex
  WeightedGraph wg;
  wg.k = 2;
  wg.n = 1;
  wg.vertex_mult = {1};
  Multigraph aug = augment_graph(wg);
  REQUIRE(aug.edges().size() == 1);
  CHECK(aug.edges()[0].mult == 1);
  CHECK(aug.vertices().size() == 2);

  // triangle with zero vertex weights: no apex at all
  WeightedGraph tri;
  tri.k = 2;
  tri.n = 3;
  tri.vertex_mult = {0, 0, 0};
  tri.edge_mult[{0, 1}] = 1;
  tri.edge_mult[{1, 2}] = 1;
  tri.edge_mult[{0, 2}] = 1;
  CHECK(augment_graph(tri).max_id() == 2);

  // path with vertex weights (1, 0, 2): apex joined by multiplicities 1 and 2
  WeightedGraph path;
  path.k = 2;
  path.n = 3;
  path.vertex_mult = {1, 0, 2};
  path.edge_mult[{0, 1}] = 1;
  path.edge_mult[{1, 2}] = 1;
  Multigraph paug = augment_graph(path);
  CHECK(paug.edges().size() == 4);
  CHECK(paug.edge(2).mult == 1);
  CHECK(paug.edge(3).mult == 2);
}

TEST_CASE("single-gate anchors, exactly") {
  // <0| e^{i theta X} |0> = cos theta = (z + z^-1)/2
  for (int k : {1, 2, 3}) {
    ExactBackend b(k);
    Circuit c;
    c.k = k;
    c.qubits = 1;
    c.gates.push_back({Gate::Kind::RX, 0, 0, 1});
    Cyclo expect = (b.zeta(1) + b.zeta(-1)) * mpq_class(1, 2);
    CHECK(amplitude(c, b).value == expect);
  }
  // <0| H |0> = 1/sqrt(2) = sqrt(2)/2, exactly
  for (int k : {1, 2}) {
    ExactBackend b(k);
    Circuit h;
    h.k = k;
    h.qubits = 1;
    h.gates.push_back({Gate::Kind::H, 0, 0, 0});
    CHECK(amplitude(h, b).value == b.sqrt2() * mpq_class(1, 2));
  }
}

TEST_CASE("two sequential Hadamards compose to the identity") {
  for (int k : {1, 2}) {
    ExactBackend b(k);
    Circuit c;
    c.k = k;
    c.qubits = 1;
    c.gates.push_back({Gate::Kind::H, 0, 0, 0});
    c.gates.push_back({Gate::Kind::H, 0, 0, 0});
    CHECK(amplitude(c, b).value == b.one());
  }
}

TEST_CASE("H - RX - H interferes as a phase") {
  // <0| H e^{i m theta X} H |0> = e^{i m theta}; exercises the sign of the
  // gadget's single-qubit terms
  for (long m : {1L, 2L, 5L}) {
    ExactBackend b(2);
    Circuit c;
    c.k = 2;
    c.qubits = 1;
    c.gates.push_back({Gate::Kind::H, 0, 0, 0});
    c.gates.push_back({Gate::Kind::RX, 0, 0, m});
    c.gates.push_back({Gate::Kind::H, 0, 0, 0});
    CHECK(amplitude(c, b).value == b.zeta(m));
    Cx sv = statevector_amplitude(c, 0);
    CHECK(dist(sv, b.zeta(m).to_complex()) < 1e-12);
  }
}

TEST_CASE("random circuits match the statevector oracle") {
  SplitMix64 rng(20250);
  FloatBackend fb(2);
  ExactBackend eb(2);
  for (int t = 0; t < 30; ++t) {
    Circuit c = random_circuit(rng, 2, 4, 7, 4);
    Cx sv = statevector_amplitude(c, 0);
    Cx fl = amplitude(c, fb).value;
    Cx ex = amplitude(c, eb).value.to_complex();
    INFO("t=" << t << "\n" << c.str());
    CHECK(dist(fl, sv) < 1e-9);
    CHECK(dist(ex, sv) < 1e-9);
  }
}

TEST_CASE("amplitude_for_outcome") {
  // program {0} with multiplicity 2 at k=1 applies e^{i pi/2 X}; outcome 1
  // has amplitude i sin(pi/2) = i
  ExactBackend b(1);
  XProgram xp;
  xp.k = 1;
  xp.cols = 1;
  xp.add_row({0}, 2);
  auto res = amplitude_for_outcome(xp, {true}, 2, b);
  CHECK(res.value == b.zeta(2));  // i
  // zero outcome reduces to the principal amplitude
  auto res0 = amplitude_for_outcome(xp, {false}, 2, b);
  CHECK(res0.value == xprogram_amplitude(xp, b).value);
  // wrong grid parameter is rejected
  CHECK_THROWS_AS(amplitude_for_outcome(xp, {true}, 3, b),
                  std::invalid_argument);

  // 2-qubit program, all outcomes match the statevector oracle
  SplitMix64 rng(606);
  FloatBackend fb(2);
  for (int t = 0; t < 10; ++t) {
    XProgram p;
    p.k = 2;
    p.cols = 2;
    p.add_row({0}, static_cast<long>(rng.next() % 16));
    p.add_row({1}, static_cast<long>(rng.next() % 16));
    p.add_row({0, 1}, static_cast<long>(rng.next() % 16));
    double norm = 0.0;
    for (uint64_t x = 0; x < 4; ++x) {
      std::vector<bool> bits{static_cast<bool>(x & 1),
                             static_cast<bool>(x >> 1 & 1)};
      Cx got = amplitude_for_outcome(p, bits, 4, fb).value;
      Cx want = statevector_amplitude(p, x);
      CHECK(dist(got, want) < 1e-9);
      norm += std::norm(got);
    }
    CHECK(std::abs(norm - 1.0) < 1e-9);
  }
}

TEST_CASE("identity suite passes") {
  for (const auto& r : run_identity_suite(31415, 25)) {
    INFO(r.name << " max_err=" << r.max_err);
    CHECK(r.failures == 0);
  }
}
