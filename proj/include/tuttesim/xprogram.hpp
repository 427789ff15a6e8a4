#pragma once

// X-programs on the theta = pi/4k grid: a binary matrix of Pauli-X product
// rows with integer multiplicities.  Rows of Hamming weight <= 2 map onto a
// weighted graph (weight-2 rows are edge multipliers, weight-1 rows vertex
// multipliers); vertex weights fold into per-component apex edges, giving the
// zero-field multigraph the engine evaluates.
//
// Text format: header lines "k <int>" and "cols <int>", then one row per
// line as a bit-string with an optional "*<mult>" suffix.

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tuttesim/multigraph.hpp"

namespace tuttesim {

struct XRow {
  std::vector<int> support;  // sorted column indices
  long mult = 0;
};

struct XProgram {
  int k = 1;
  int cols = 0;
  std::vector<XRow> rows;   // distinct supports, mult in 1..8k-1
  long phase_zeta = 0;      // accumulated global phase z^{phase_zeta}, z = e^{i pi/4k}

  // Multiplicities are reduced mod 8k (e^{i theta 8k X} = 1); zero-support
  // rows contribute the global phase e^{i theta m} instead of a row.
  void add_row(std::vector<int> support, long mult) {
    long period = 8L * k;
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (int c : support)
      if (c < 0 || c >= cols)
        throw std::invalid_argument("XProgram: column out of range");
    if (support.empty()) {
      phase_zeta = (phase_zeta + mult) % period;
      return;
    }
    for (auto& r : rows) {
      if (r.support == support) {
        r.mult = ((r.mult + mult) % period + period) % period;
        if (r.mult == 0)
          rows.erase(rows.begin() + (&r - rows.data()));
        return;
      }
    }
    long m = ((mult % period) + period) % period;
    if (m != 0) rows.push_back({std::move(support), m});
  }

  long total_rows() const {
    long t = 0;
    for (const auto& r : rows) t += r.mult;
    return t;
  }

  static XProgram parse(std::istream& in) {
    XProgram xp;
    std::string line;
    int lineno = 0;
    bool have_k = false, have_cols = false;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("xprogram line " + std::to_string(lineno) +
                                  ": " + msg);
    };
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = strip(line);
      if (t.empty() || t[0] == '#') continue;
      std::istringstream ss(t);
      std::string head;
      ss >> head;
      if (head == "k") {
        if (!(ss >> xp.k) || xp.k < 1) fail("bad k");
        have_k = true;
      } else if (head == "cols") {
        if (!(ss >> xp.cols) || xp.cols < 0) fail("bad cols");
        have_cols = true;
      } else {
        if (!have_k || !have_cols) fail("row before k/cols header");
        std::string bits = head;
        long mult = 1;
        auto star = bits.find('*');
        if (star != std::string::npos) {
          try {
            mult = std::stol(bits.substr(star + 1));
          } catch (...) {
            fail("bad multiplicity suffix");
          }
          if (mult < 0) fail("negative multiplicity");
          bits = bits.substr(0, star);
        }
        if (static_cast<int>(bits.size()) != xp.cols)
          fail("row width does not match cols");
        std::vector<int> support;
        for (int i = 0; i < xp.cols; ++i) {
          if (bits[i] == '1')
            support.push_back(i);
          else if (bits[i] != '0')
            fail("row must be a bit-string");
        }
        xp.add_row(std::move(support), mult);
      }
    }
    if (!have_k || !have_cols) {
      lineno = 0;
      fail("missing k/cols header");
    }
    return xp;
  }

  std::string str() const {
    std::ostringstream out;
    out << "k " << k << "\n" << "cols " << cols << "\n";
    for (const auto& r : rows) {
      std::string bits(cols, '0');
      for (int c : r.support) bits[c] = '1';
      out << bits;
      if (r.mult != 1) out << "*" << r.mult;
      out << "\n";
    }
    return out.str();
  }

 private:
  static std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
  }
};

struct WeightedGraph {
  int k = 1;
  int n = 0;
  std::map<std::pair<int, int>, long> edge_mult;  // (u < v) -> multiplier >= 1
  std::vector<long> vertex_mult;                  // per-vertex multiplier >= 0
};

// Weight-2 rows become edge multipliers, weight-1 rows vertex multipliers.
inline WeightedGraph xprogram_to_graph(const XProgram& xp) {
  WeightedGraph wg;
  wg.k = xp.k;
  wg.n = xp.cols;
  wg.vertex_mult.assign(xp.cols, 0);
  for (const auto& r : xp.rows) {
    if (r.support.size() > 2)
      throw std::invalid_argument(
          "xprogram_to_graph: row of Pauli weight > 2 is unsupported");
    if (r.support.size() == 1) {
      wg.vertex_mult[r.support[0]] += r.mult;
    } else {
      wg.edge_mult[{r.support[0], r.support[1]}] += r.mult;
    }
  }
  return wg;
}

// Zero-field form: per connected component with any vertex weight, one apex
// vertex joined to each weighted vertex by a multiedge of that multiplier.
inline Multigraph augment_graph(const WeightedGraph& wg) {
  std::vector<int> parent(wg.n);
  for (int i = 0; i < wg.n; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [uv, m] : wg.edge_mult)
    if (m > 0) {
      int a = find(uv.first), b = find(uv.second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, int> apex;  // component root -> apex vertex id
  int next = wg.n;
  for (int v = 0; v < wg.n; ++v)
    if (wg.vertex_mult[v] > 0) {
      int root = find(v);
      if (!apex.count(root)) apex[root] = next++;
    }
  std::vector<std::tuple<int, int, long>> edges;
  for (const auto& [uv, m] : wg.edge_mult)
    if (m > 0) edges.emplace_back(uv.first, uv.second, m);
  for (int v = 0; v < wg.n; ++v)
    if (wg.vertex_mult[v] > 0)
      edges.emplace_back(v, apex[find(v)], wg.vertex_mult[v]);
  return Multigraph(next, edges);
}

}  // namespace tuttesim
