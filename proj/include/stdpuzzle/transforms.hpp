#pragma once

#include "stdpuzzle/pieces.hpp"

namespace stdpuzzle {

// Puzzle-level transformations.
Puzzle t1(const Puzzle& p);  // mirror: reverse both rows
Puzzle t2(const Puzzle& p);  // swap top and bottom rows
Puzzle t3(const Puzzle& p);  // label a -> m + 1 - a, m = 2n + 2

enum class SupportMap { F1 = 1, F2 = 2, F3 = 3 };

SupportMap parse_support_map(std::string_view name);  // "f1" | "F1" | "1"

// Piece-level maps as explicit lookup tables:
//   F1: A_i -> A_{i+3}, B_i -> C_{i+3}, C_i -> B_{i+3}, D_i -> D_{i+3} (indices mod 6)
//   F2: A_i <-> D_i, B_i <-> C_i
//   F3: A <-> D, B <-> C with index 1,5,6,4,2,3 -> 1,2,3,4,5,6
PieceId apply(SupportMap f, PieceId id);
Support apply(SupportMap f, const Support& s);

inline Support f1(const Support& s) { return apply(SupportMap::F1, s); }
inline Support f2(const Support& s) { return apply(SupportMap::F2, s); }
inline Support f3(const Support& s) { return apply(SupportMap::F3, s); }

struct InvarianceResult {
  bool holds;
  long long count_before;
  long long count_after;
};

inline constexpr int kInvarianceMaxN = 4;

// Compares brute-force and transfer counts of `s` and F(s).
// Throws std::domain_error when n exceeds `max_n`.
InvarianceResult check_invariance(const Support& s, int n, SupportMap f, int max_n = kInvarianceMaxN);

}  // namespace stdpuzzle
