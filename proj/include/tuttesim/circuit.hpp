#pragma once

// Circuits over the gate set { H, e^{i theta X}, e^{i theta XX} } at
// theta = pi/4k, compiled to X-programs.  Each Hadamard becomes the
// postselected gadget e^{(i pi/4)(I-X)_t (I-X)_a} on the current wire t and a
// fresh ancilla a; expanding the commuting exponent gives
//   e^{i pi/4} e^{-i theta k X_t} e^{-i theta k X_a} e^{+i theta k X_t X_a},
// i.e. rows {t} and {a} with multiplicity 7k (= -k mod 8k), row {t,a} with
// multiplicity k, and a tracked global phase z^k per gadget.  The logical
// qubit continues on the ancilla wire.
//
// Text format: header lines "k <int>" and "qubits <int>", then one gate per
// line: "H q", "RX q m", "RXX q1 q2 m".

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tuttesim/xprogram.hpp"

namespace tuttesim {

struct Gate {
  enum class Kind { H, RX, RXX };
  Kind kind;
  int q0 = 0, q1 = 0;
  long mult = 0;  // theta multiplier for RX/RXX
};

struct Circuit {
  int k = 1;
  int qubits = 0;
  std::vector<Gate> gates;

  int hadamard_count() const {
    int m = 0;
    for (const auto& g : gates)
      if (g.kind == Gate::Kind::H) ++m;
    return m;
  }

  static Circuit parse(std::istream& in) {
    Circuit c;
    std::string line;
    int lineno = 0;
    bool have_k = false, have_q = false;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("circuit line " + std::to_string(lineno) +
                                  ": " + msg);
    };
    auto check_q = [&](int q) {
      if (q < 0 || q >= c.qubits) fail("qubit index out of range");
    };
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ss(line);
      std::string head;
      if (!(ss >> head) || head[0] == '#') continue;
      if (head == "k") {
        if (!(ss >> c.k) || c.k < 1) fail("bad k");
        have_k = true;
      } else if (head == "qubits") {
        if (!(ss >> c.qubits) || c.qubits < 0) fail("bad qubit count");
        have_q = true;
      } else if (head == "H") {
        if (!have_k || !have_q) fail("gate before k/qubits header");
        int q;
        if (!(ss >> q)) fail("H needs a qubit");
        check_q(q);
        c.gates.push_back({Gate::Kind::H, q, 0, 0});
      } else if (head == "RX") {
        if (!have_k || !have_q) fail("gate before k/qubits header");
        int q;
        long m;
        if (!(ss >> q >> m)) fail("RX needs qubit and multiplier");
        check_q(q);
        if (m < 0) fail("negative multiplier");
        c.gates.push_back({Gate::Kind::RX, q, 0, m});
      } else if (head == "RXX") {
        if (!have_k || !have_q) fail("gate before k/qubits header");
        int a, b;
        long m;
        if (!(ss >> a >> b >> m)) fail("RXX needs two qubits and a multiplier");
        check_q(a);
        check_q(b);
        if (a == b) fail("RXX qubits must differ");
        if (m < 0) fail("negative multiplier");
        c.gates.push_back({Gate::Kind::RXX, a, b, m});
      } else {
        fail("unknown gate '" + head + "'");
      }
    }
    if (!have_k || !have_q) {
      lineno = 0;
      fail("missing k/qubits header");
    }
    return c;
  }

  std::string str() const {
    std::ostringstream out;
    out << "k " << k << "\n" << "qubits " << qubits << "\n";
    for (const auto& g : gates) {
      switch (g.kind) {
        case Gate::Kind::H: out << "H " << g.q0 << "\n"; break;
        case Gate::Kind::RX: out << "RX " << g.q0 << " " << g.mult << "\n"; break;
        case Gate::Kind::RXX:
          out << "RXX " << g.q0 << " " << g.q1 << " " << g.mult << "\n";
          break;
      }
    }
    return out.str();
  }
};

struct CompiledCircuit {
  XProgram xp;
  int hadamards = 0;
  std::vector<int> wire_of_qubit;  // final physical wire per logical qubit
};

inline CompiledCircuit compile_circuit(const Circuit& c) {
  CompiledCircuit out;
  out.xp.k = c.k;
  out.xp.cols = c.qubits + c.hadamard_count();
  out.wire_of_qubit.resize(c.qubits);
  for (int q = 0; q < c.qubits; ++q) out.wire_of_qubit[q] = q;
  int next_wire = c.qubits;
  for (const auto& g : c.gates) {
    int t = out.wire_of_qubit[g.q0];
    switch (g.kind) {
      case Gate::Kind::H: {
        int a = next_wire++;
        out.xp.add_row({t}, 7L * c.k);
        out.xp.add_row({a}, 7L * c.k);
        out.xp.add_row({t, a}, c.k);
        out.xp.phase_zeta = (out.xp.phase_zeta + c.k) % (8L * c.k);
        out.wire_of_qubit[g.q0] = a;
        ++out.hadamards;
        break;
      }
      case Gate::Kind::RX:
        out.xp.add_row({t}, g.mult);
        break;
      case Gate::Kind::RXX:
        out.xp.add_row({t, out.wire_of_qubit[g.q1]}, g.mult);
        break;
    }
  }
  return out;
}

}  // namespace tuttesim
