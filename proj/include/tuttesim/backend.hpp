#pragma once

// Scalar backends for evaluation at the quantum point
//   x = -i*cot(pi/4k),  y = exp(i*pi/2k),  theta = pi/4k.
// ExactBackend works in Q(zeta_{8k}); FloatBackend in complex<double>.
// Both expose the same set of precomputed point values and power helpers so
// the engine can be written once.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tuttesim/cyclotomic.hpp"

namespace tuttesim {

class ExactBackend {
 public:
  using Scalar = Cyclo;
  static constexpr bool exact = true;

  explicit ExactBackend(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("backend: k must be >= 1");
    const int n = 4 * k;
    one_ = Cyclo::integer(k, 1);
    zero_ = Cyclo(k);
    y_ = Cyclo::zeta_pow(k, 2);
    // x = (z^2+1)/(z^2-1); z^2-1 is a unit mod z^{4k}+1
    Cyclo y_minus_1 = y_ - one_;
    Cyclo inv_ym1 = y_minus_1.inverse();
    x_ = (y_ + one_) * inv_ym1;
    // i*sin(theta) = (z - z^{-1})/2
    isin_ = (Cyclo::zeta_pow(k, 1) - Cyclo::zeta_pow(k, -1)) *
            mpq_class(1, 2);
    Cyclo i = Cyclo::zeta_pow(k, 2 * k);
    sin_ = isin_ * i.inverse();
    sqrt2_ = Cyclo::zeta_pow(k, k) - Cyclo::zeta_pow(k, 3 * k);
    inv_sqrt2_ = sqrt2_ * mpq_class(1, 2);
    // (i e^{i theta} sin theta) = (z^2 - 1)/2
    simplify_base_ = y_minus_1 * mpq_class(1, 2);
    simplify_base_inv_ = simplify_base_.inverse();
    vertigan_base_ = sqrt2_ * Cyclo::zeta_pow(k, 1 - k) * sin_;
    vertigan_base_inv_ = vertigan_base_.inverse();
    ypow_.resize(n);
    ysum_.resize(n + 1, zero_);
    for (int j = 0; j < n; ++j) ypow_[j] = Cyclo::zeta_pow(k, 2 * j);
    for (int j = 0; j < n; ++j) ysum_[j + 1] = ysum_[j] + ypow_[j];
  }

  int k() const { return k_; }
  double theta() const { return std::numbers::pi / (4.0 * k_); }

  const Scalar& zero() const { return zero_; }
  const Scalar& one() const { return one_; }
  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }
  const Scalar& isin_theta() const { return isin_; }
  const Scalar& sqrt2() const { return sqrt2_; }

  Scalar from_int(long v) const { return Cyclo::integer(k_, v); }
  Scalar from_mpz(const mpz_class& z) const {
    return Cyclo::rational(k_, mpq_class(z));
  }
  Scalar zeta(long j) const { return Cyclo::zeta_pow(k_, j); }
  // e^{i pi t/4}
  Scalar zeta8(long t) const { return Cyclo::zeta_pow(k_, t * k_); }

  Scalar ypow(long j) const { return ypow_[umod(j, 4L * k_)]; }
  // sum_{i=0}^{j-1} y^i; the full-period sum vanishes, so only j mod 4k matters
  Scalar ysum(long j) const {
    if (j < 0) throw std::invalid_argument("ysum: negative length");
    return ysum_[umod(j, 4L * k_)];
  }
  // x + sum_{i=1}^{m-1} y^i for a coloop multiedge of multiplicity m
  Scalar coloop_factor(long m) const { return x_ - one_ + ysum(m); }

  Scalar sqrt2_pow(long j) const {
    return j >= 0 ? sqrt2_.pow(j) : inv_sqrt2_.pow(-j);
  }
  Scalar simplify_base_pow(long e) const {
    return e >= 0 ? simplify_base_.pow(e) : simplify_base_inv_.pow(-e);
  }
  Scalar vertigan_base_pow(long e) const {
    return e >= 0 ? vertigan_base_.pow(e) : vertigan_base_inv_.pow(-e);
  }

  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  static std::complex<double> approx(const Scalar& s) { return s.to_complex(); }

 private:
  static long umod(long a, long m) { return ((a % m) + m) % m; }

  int k_;
  Cyclo zero_, one_, x_, y_, isin_, sin_, sqrt2_, inv_sqrt2_;
  Cyclo simplify_base_, simplify_base_inv_, vertigan_base_, vertigan_base_inv_;
  std::vector<Cyclo> ypow_, ysum_;
};

class FloatBackend {
 public:
  using Scalar = std::complex<double>;
  static constexpr bool exact = false;

  explicit FloatBackend(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("backend: k must be >= 1");
    theta_ = std::numbers::pi / (4.0 * k);
    y_ = std::polar(1.0, 2.0 * theta_);
    x_ = Scalar(0.0, -1.0) * (std::cos(theta_) / std::sin(theta_));
    isin_ = Scalar(0.0, std::sin(theta_));
    sqrt2_ = std::sqrt(2.0);
    simplify_base_ = Scalar(0.0, 1.0) * std::polar(1.0, theta_) * std::sin(theta_);
    vertigan_base_ =
        sqrt2_ * std::polar(1.0, std::numbers::pi * (1.0 - k) / (4.0 * k)) *
        std::sin(theta_);
    const int n = 4 * k;
    ypow_.resize(n);
    ysum_.resize(n + 1, 0.0);
    for (int j = 0; j < n; ++j) ypow_[j] = std::polar(1.0, 2.0 * theta_ * j);
    for (int j = 0; j < n; ++j) ysum_[j + 1] = ysum_[j] + ypow_[j];
  }

  int k() const { return k_; }
  double theta() const { return theta_; }

  Scalar zero() const { return 0.0; }
  Scalar one() const { return 1.0; }
  Scalar x() const { return x_; }
  Scalar y() const { return y_; }
  Scalar isin_theta() const { return isin_; }
  Scalar sqrt2() const { return sqrt2_; }

  Scalar from_int(long v) const { return static_cast<double>(v); }
  Scalar from_mpz(const mpz_class& z) const { return z.get_d(); }
  Scalar zeta(long j) const { return std::polar(1.0, theta_ * j); }
  Scalar zeta8(long t) const { return std::polar(1.0, std::numbers::pi * t / 4.0); }

  Scalar ypow(long j) const { return ypow_[umod(j, 4L * k_)]; }
  Scalar ysum(long j) const {
    if (j < 0) throw std::invalid_argument("ysum: negative length");
    return ysum_[umod(j, 4L * k_)];
  }
  Scalar coloop_factor(long m) const { return x_ - 1.0 + ysum(m); }

  Scalar sqrt2_pow(long j) const { return std::pow(sqrt2_, static_cast<double>(j)); }
  Scalar simplify_base_pow(long e) const { return ipow(simplify_base_, e); }
  Scalar vertigan_base_pow(long e) const { return ipow(vertigan_base_, e); }

  static bool is_zero(const Scalar& s) { return s == 0.0; }
  static std::complex<double> approx(const Scalar& s) { return s; }

 private:
  static long umod(long a, long m) { return ((a % m) + m) % m; }
  static Scalar ipow(Scalar b, long e) {
    if (e < 0) {
      b = 1.0 / b;
      e = -e;
    }
    Scalar r = 1.0;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  int k_;
  double theta_;
  Scalar x_, y_, isin_, simplify_base_, vertigan_base_;
  double sqrt2_;
  std::vector<Scalar> ypow_, ysum_;
};

}  // namespace tuttesim
