#pragma once

// Exact arithmetic in Q[z]/(z^{4k}+1) where z = exp(i*pi/(4k)) is a primitive
// 8k-th root of unity.  Elements are coefficient vectors of length 4k over
// arbitrary-precision rationals.  The representation is canonical, so equality
// is coefficient-wise.

#include <complex>
#include <cstdint>
#include <gmpxx.h>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tuttesim {

class Cyclo {
 public:
  Cyclo() : k_(0) {}
  explicit Cyclo(int k) : k_(k), c_(4 * k) { check_k(k); }

  static Cyclo rational(int k, const mpq_class& r) {
    Cyclo v(k);
    v.c_[0] = r;
    return v;
  }
  static Cyclo integer(int k, long n) { return rational(k, mpq_class(n)); }

  // z^j for any integer j (z^{4k} = -1, so the power is reduced mod 8k).
  static Cyclo zeta_pow(int k, long j) {
    Cyclo v(k);
    long n = 4L * k;
    long r = ((j % (2 * n)) + 2 * n) % (2 * n);
    if (r < n)
      v.c_[r] = 1;
    else
      v.c_[r - n] = -1;
    return v;
  }

  int k() const { return k_; }
  int degree() const { return 4 * k_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& coeff(int j) const { return c_.at(j); }

  bool is_zero() const {
    for (const auto& q : c_)
      if (q != 0) return false;
    return true;
  }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.k_ == b.k_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo operator-() const {
    Cyclo r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
  }

  Cyclo& operator+=(const Cyclo& o) {
    match(o);
    for (int i = 0; i < degree(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclo& operator-=(const Cyclo& o) {
    match(o);
    for (int i = 0; i < degree(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }

  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    a.match(b);
    int n = a.degree();
    std::vector<mpq_class> acc(2 * n - 1);
    for (int i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b.c_[j] == 0) continue;
        acc[i + j] += a.c_[i] * b.c_[j];
      }
    }
    Cyclo r(a.k_);
    for (int i = 0; i < n; ++i) r.c_[i] = acc[i];
    for (int i = n; i < 2 * n - 1; ++i) r.c_[i - n] -= acc[i];  // z^n = -1
    return r;
  }

  Cyclo& scale(const mpq_class& q) {
    for (auto& v : c_) v *= q;
    return *this;
  }
  friend Cyclo operator*(Cyclo a, const mpq_class& q) { return a.scale(q); }

  // Multiplicative inverse via the extended Euclidean algorithm over Q[x]
  // against x^{4k}+1.  Nonzero elements of the quotient ring can still be
  // zero divisors when x^{4k}+1 is reducible; those raise domain_error too.
  Cyclo inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    int n = degree();
    Poly m(n + 1);
    m[0] = 1;
    m[n] = 1;
    Poly a(c_.begin(), c_.end());
    trim(a);
    // invariant: s0*a = r0, s1*a = r1 (mod m)
    Poly r0 = m, r1 = a, s0, s1{mpq_class(1)};
    while (!r1.empty()) {
      Poly q = divmod(r0, r1);
      Poly t = sub(s0, mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(t);
      std::swap(r0, r1);
    }
    if (r0.size() != 1)
      throw std::domain_error("Cyclo: zero divisor has no inverse");
    Cyclo inv(k_);
    mpq_class lead = r0[0];
    for (size_t i = 0; i < s0.size(); ++i) inv.c_[i] = s0[i] / lead;
    return inv;
  }

  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) {
    a.match(b);
    return a * b.inverse();
  }

  Cyclo pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo r = integer(k_, 1);
    Cyclo base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  std::complex<double> to_complex() const {
    long double re = 0, im = 0;
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int j = 0; j < degree(); ++j) {
      if (c_[j] == 0) continue;
      long double v = mpq_to_ld(c_[j]);
      long double ang = pi * j / (4.0L * k_);
      re += v * std::cos(ang);
      im += v * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  // Canonical rendering: nonzero terms in ascending power, "a/b * z^j".
  std::string str() const {
    std::ostringstream out;
    bool first = true;
    for (int j = 0; j < degree(); ++j) {
      if (c_[j] == 0) continue;
      if (!first) out << " + ";
      out << c_[j].get_str();
      if (j > 0) out << " * z^" << j;
      first = false;
    }
    if (first) out << "0";
    return out.str();
  }

 private:
  using Poly = std::vector<mpq_class>;

  static void check_k(int k) {
    if (k < 1) throw std::invalid_argument("Cyclo: k must be >= 1");
  }
  void match(const Cyclo& o) const {
    if (k_ != o.k_) throw std::invalid_argument("Cyclo: mixed k operands");
  }

  static void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  }
  // r := r - q*d for the long-division step; returns quotient, r becomes remainder.
  static Poly divmod(Poly& r, const Poly& d) {
    Poly q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0);
    while (r.size() >= d.size() && !r.empty()) {
      mpq_class f = r.back() / d.back();
      size_t shift = r.size() - d.size();
      q[shift] = f;
      for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
      trim(r);
    }
    trim(q);
    return q;
  }
  static Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
  }
  static Poly sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
  }
  static long double mpq_to_ld(const mpq_class& q) {
    // get_d truncates to double; split num/den for a hair more headroom
    return static_cast<long double>(q.get_num().get_d()) /
           static_cast<long double>(q.get_den().get_d());
  }

  int k_;
  std::vector<mpq_class> c_;
};

}  // namespace tuttesim
