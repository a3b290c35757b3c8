#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stdpuzzle/bigint.hpp"

namespace stdpuzzle {

struct RegistryEntry {
  std::string name;
  std::string oeis;  // A-number used as a label only
  int first_index;   // smallest k with a defined term
  int last_index;    // largest k the generator supports (-1: unbounded)
  std::function<BigInt(int)> term;
};

const std::vector<RegistryEntry>& sequence_registry();

struct RegistryMatch {
  std::string name;
  std::string oeis;
  int offset;       // s_n = factor * term(n + offset)
  Rational factor;
  std::string describe() const;  // "catalan, offset +1"
};

inline constexpr int kIdentifyMinTerms = 4;

// Matches s_1..s_N against every registry entry with offsets 0..3 and
// factors 1, 2, 4/3, 3/2; exact factors first, then smaller offsets.
// Throws std::invalid_argument with fewer than kIdentifyMinTerms terms.
std::vector<RegistryMatch> identify(const std::vector<BigInt>& prefix);

}  // namespace stdpuzzle
