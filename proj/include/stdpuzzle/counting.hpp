#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "stdpuzzle/bigint.hpp"
#include "stdpuzzle/pieces.hpp"

namespace stdpuzzle {

inline constexpr int kEnumerationMaxN = 5;

// Counts of partial puzzles with m columns refined by the merged ranks of the
// rightmost column: u = rank of the bottom value, v = rank of the top value,
// both among the 2m labels placed so far.
class CornerTable {
 public:
  explicit CornerTable(int columns);

  int columns() const { return columns_; }
  int labels() const { return 2 * columns_; }

  // 1-based ranks; entries with u == v are always zero.
  const BigInt& at(int u, int v) const { return cells_[index(u, v)]; }
  BigInt& at(int u, int v) { return cells_[index(u, v)]; }

  BigInt total() const;
  BigInt bottom_sum(int u) const;  // puzzles whose bottom-right label is u
  BigInt top_sum(int v) const;     // puzzles whose top-right label is v

 private:
  std::size_t index(int u, int v) const;
  int columns_;
  std::vector<BigInt> cells_;
};

// All puzzles with minimal support inside `s`, ordered lexicographically by
// (bottom row, top row). Throws std::domain_error when n > max_n.
std::vector<Puzzle> enumerate_puzzles(const Support& s, int n, int max_n = kEnumerationMaxN);

// Backtracking over explicit labels, column by column, pruning on each window.
BigInt count_bruteforce(const Support& s, int n, int max_n = kEnumerationMaxN);

// Number of labellings of a 2 x (n+1) grid per exact minimal support (bitmask),
// over all (2n+2)! labellings. Throws std::domain_error when n > max_n.
std::unordered_map<std::uint32_t, long long> minimal_support_histogram(int n, int max_n = 4);

// Rank-profile transfer counting.
BigInt count_dp(const Support& s, int n);
std::vector<BigInt> count_dp_prefix(const Support& s, int nmax);  // s_1..s_nmax
CornerTable corner_table(const Support& s, int columns);

// Puzzles of n pieces with label x in the bottom-right (top-right) corner.
// Throws std::out_of_range unless 1 <= x <= 2n+2.
BigInt count_corner_bottom(const Support& s, int n, int x);
BigInt count_corner_top(const Support& s, int n, int x);

}  // namespace stdpuzzle
