#pragma once

// Stable textual rendering of scalar values.  Floats print in shortest
// round-trip form so identical invocations produce byte-identical output;
// exact scalars print in the canonical sorted zeta-power form of Cyclo::str.

#include <charconv>
#include <complex>
#include <string>

#include "tuttesim/cyclotomic.hpp"

namespace tuttesim {

inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_complex(const std::complex<double>& z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string s = format_double(z.real());
  if (z.imag() >= 0.0 || std::isnan(z.imag())) s += "+";
  s += format_double(z.imag());
  s += "i";
  return s;
}

inline std::string format_scalar(const Cyclo& v) { return v.str(); }
inline std::string format_scalar(const std::complex<double>& v) {
  return format_complex(v);
}

}  // namespace tuttesim
