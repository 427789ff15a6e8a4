#pragma once

// GF(2) linear codes: the cut space of a graph, bicycle dimension
// d(V) = dim(V ∩ V⊥), and Brown's invariant sigma(V) in Z/8 defined by
//   sum_{x in V} i^{|supp(x)|} = sqrt(2)^{d+dim} e^{i pi sigma/4}
// whenever every bicycle has |supp| ≡ 0 (mod 4); the sum vanishes otherwise.
// sigma is computed in polynomial time by block-reducing the Z4-valued form
// q(x) = |supp(x)| mod 4 over a complement of the radical.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tuttesim/multigraph.hpp"

namespace tuttesim {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool b) {
    uint64_t m = 1ULL << (i & 63);
    if (b)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(int i) { w_[i >> 6] ^= 1ULL << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  bool is_zero() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  int popcount() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  // GF(2) inner product (parity of the AND)
  bool dot(const BitVec& o) const {
    uint64_t acc = 0;
    for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return __builtin_popcountll(acc) & 1;
  }
  int leading_bit() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64) + __builtin_ctzll(w_[i]);
    return -1;
  }
  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BrownInvariant {
  bool defined = false;
  int sigma = 0;  // canonical representative in 0..7
};

class BinaryCode {
 public:
  BinaryCode() = default;

  // Spanning set is reduced to an independent basis over GF(2).
  BinaryCode(int length, const std::vector<BitVec>& gens) : length_(length) {
    for (BitVec v : gens) {
      for (const auto& b : basis_) {
        int lb = b.leading_bit();
        if (v.get(lb)) v ^= b;
      }
      if (!v.is_zero()) basis_.push_back(v);
    }
  }

  // Row space of the vertex-edge incidence matrix over GF(2), one column per
  // parallel edge copy.  Loop columns are identically zero.
  static BinaryCode from_graph(const Multigraph& g) {
    long cols = g.total_multiplicity();
    if (cols > (1 << 22))
      throw std::invalid_argument("BinaryCode: graph too large");
    int n = static_cast<int>(cols);
    std::vector<int> pos(g.max_id() + 1, -1);
    const auto& vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
    std::vector<BitVec> rows(vs.size(), BitVec(n));
    int col = 0;
    for (const auto& e : g.edges())
      for (long c = 0; c < e.mult; ++c, ++col)
        if (e.u != e.v) {
          rows[pos[e.u]].flip(col);
          rows[pos[e.v]].flip(col);
        }
    return BinaryCode(n, rows);
  }

  int length() const { return length_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BitVec>& basis() const { return basis_; }

  // Basis of V ∩ V⊥ = { yB : (BB^T) y = 0 }.
  std::vector<BitVec> bicycle_basis() const {
    int d = dim();
    std::vector<BitVec> gram(d, BitVec(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (basis_[i].dot(basis_[j])) gram[i].set(j, true);
    std::vector<BitVec> kernel = nullspace(gram, d);
    std::vector<BitVec> out;
    for (const auto& y : kernel) {
      BitVec v(length_);
      for (int i = 0; i < d; ++i)
        if (y.get(i)) v ^= basis_[i];
      out.push_back(v);
    }
    return out;
  }

  int bicycle_dimension() const {
    return static_cast<int>(bicycle_basis().size());
  }

  BrownInvariant brown_invariant() const {
    std::vector<BitVec> rad = bicycle_basis();
    // q is linear on the radical; any weight ≡ 2 (mod 4) kills the Gauss sum
    for (const auto& r : rad)
      if (r.popcount() % 4 != 0) return {false, 0};
    // complement of the radical inside V
    std::vector<BitVec> ech = rad;  // echelonized below
    echelonize(ech);
    std::vector<BitVec> w;
    for (BitVec v : basis_) {
      reduce(v, ech);
      if (!v.is_zero()) {
        w.push_back(v);
        insert_echelon(ech, v);
      }
    }
    // block reduction of q(x) = |x| mod 4 on the nondegenerate complement
    int sigma = 0;
    std::vector<BitVec> rem = std::move(w);
    while (!rem.empty()) {
      int odd = -1;
      for (size_t i = 0; i < rem.size(); ++i)
        if (rem[i].popcount() & 1) {
          odd = static_cast<int>(i);
          break;
        }
      if (odd >= 0) {
        BitVec v = rem[odd];
        rem.erase(rem.begin() + odd);
        sigma += (v.popcount() % 4 == 1) ? 1 : 7;
        for (auto& u : rem)
          if (u.dot(v)) u ^= v;
      } else {
        // all even: find a hyperbolic pair
        int a = -1, b = -1;
        for (size_t i = 0; i < rem.size() && a < 0; ++i)
          for (size_t j = i + 1; j < rem.size(); ++j)
            if (rem[i].dot(rem[j])) {
              a = static_cast<int>(i);
              b = static_cast<int>(j);
              break;
            }
        if (a < 0)
          throw std::logic_error("brown_invariant: degenerate complement");
        BitVec va = rem[a], vb = rem[b];
        rem.erase(rem.begin() + b);
        rem.erase(rem.begin() + a);
        if (va.popcount() % 4 == 2 && vb.popcount() % 4 == 2) sigma += 4;
        for (auto& u : rem) {
          bool ca = u.dot(va), cb = u.dot(vb);
          if (cb) u ^= va;
          if (ca) u ^= vb;
        }
      }
    }
    return {true, ((sigma % 8) + 8) % 8};
  }

  // Gauss sum as a Gaussian integer (a+bi); enumeration over all 2^dim
  // codewords, test-oracle only.
  std::pair<long long, long long> gauss_sum(int max_dim = 24) const {
    if (dim() > max_dim)
      throw std::invalid_argument("gauss_sum: dimension over budget");
    long long cnt[4] = {0, 0, 0, 0};
    uint64_t total = 1ULL << dim();
    BitVec cur(length_);
    cnt[0] += 1;  // zero word
    uint64_t gray = 0;
    for (uint64_t s = 1; s < total; ++s) {
      uint64_t g = s ^ (s >> 1);
      uint64_t diff = g ^ gray;
      int bit = __builtin_ctzll(diff);
      gray = g;
      cur ^= basis_[bit];
      cnt[cur.popcount() & 3] += 1;
    }
    return {cnt[0] - cnt[2], cnt[1] - cnt[3]};
  }

 private:
  static void echelonize(std::vector<BitVec>& rows) {
    std::vector<BitVec> out;
    for (BitVec v : rows) {
      reduce(v, out);
      if (!v.is_zero()) insert_echelon(out, v);
    }
    rows = std::move(out);
  }
  static void reduce(BitVec& v, const std::vector<BitVec>& ech) {
    for (const auto& b : ech) {
      int lb = b.leading_bit();
      if (lb >= 0 && v.get(lb)) v ^= b;
    }
  }
  static void insert_echelon(std::vector<BitVec>& ech, const BitVec& v) {
    ech.push_back(v);
  }
  // right kernel of square bit matrix given as rows, acting on vectors of
  // width `width`
  static std::vector<BitVec> nullspace(std::vector<BitVec> rows, int width) {
    std::vector<int> pivot_col;
    std::vector<BitVec> ech;
    for (BitVec r : rows) {
      for (size_t i = 0; i < ech.size(); ++i)
        if (r.get(pivot_col[i])) r ^= ech[i];
      int lb = r.leading_bit();
      if (lb >= 0) {
        // normalize previous rows against the new pivot
        for (size_t i = 0; i < ech.size(); ++i)
          if (ech[i].get(lb)) ech[i] ^= r;
        ech.push_back(r);
        pivot_col.push_back(lb);
      }
    }
    std::vector<char> is_pivot(width, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<BitVec> out;
    for (int free = 0; free < width; ++free) {
      if (is_pivot[free]) continue;
      BitVec v(width);
      v.set(free, true);
      for (size_t i = 0; i < ech.size(); ++i)
        if (ech[i].get(free)) v.set(pivot_col[i], true);
      out.push_back(v);
    }
    return out;
  }

  int length_ = 0;
  std::vector<BitVec> basis_;
};

}  // namespace tuttesim
