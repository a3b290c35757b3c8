#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace stdpuzzle {

using BigInt = mpz_class;
using Rational = mpq_class;

// Throws std::domain_error when `q` is not an integer.
inline BigInt to_integer(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() != 1) throw std::domain_error("non-integral value " + c.get_str());
  return c.get_num();
}

inline BigInt to_big(unsigned __int128 x) {
  BigInt hi = static_cast<unsigned long>(x >> 64);
  hi <<= 64;
  hi += static_cast<unsigned long>(x & ~static_cast<unsigned long>(0));
  return hi;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

}  // namespace stdpuzzle
