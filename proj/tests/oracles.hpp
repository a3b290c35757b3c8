// Independent reference implementations used only by the tests. Nothing here
// calls into the library's counting code.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

// Piece grids (TL, TR, BL, BR) in A1..D6 order, typed in separately from the library.
inline const std::array<std::array<int, 4>, 24>& grids() {
  static const std::array<std::array<int, 4>, 24> g = {{
      {4, 3, 1, 2}, {3, 4, 1, 2}, {2, 4, 1, 3}, {3, 4, 2, 1}, {4, 3, 2, 1}, {4, 2, 3, 1},
      {4, 2, 1, 3}, {3, 2, 1, 4}, {2, 3, 1, 4}, {3, 1, 2, 4}, {4, 1, 2, 3}, {4, 1, 3, 2},
      {1, 3, 4, 2}, {1, 4, 3, 2}, {1, 4, 2, 3}, {2, 4, 3, 1}, {2, 3, 4, 1}, {3, 2, 4, 1},
      {1, 2, 4, 3}, {1, 2, 3, 4}, {1, 3, 2, 4}, {2, 1, 3, 4}, {2, 1, 4, 3}, {3, 1, 4, 2},
  }};
  return g;
}

inline int piece_of(int tl, int tr, int bl, int br) {
  const std::array<int, 4> v{tl, tr, bl, br};
  std::array<int, 4> r{};
  for (int i = 0; i < 4; ++i) r[i] = 1 + static_cast<int>(std::count_if(v.begin(), v.end(), [&](int x) { return x < v[i]; }));
  for (int id = 0; id < 24; ++id) {
    if (grids()[id] == r) return id;
  }
  return -1;
}

// s_n(mask) by running over every permutation of 1..2n+2 (top row first).
inline unsigned long count_permutations(std::uint32_t mask, int n) {
  const int len = 2 * n + 2, cols = n + 1;
  std::vector<int> p(len);
  std::iota(p.begin(), p.end(), 1);
  unsigned long count = 0;
  do {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      const int id = piece_of(p[k], p[k + 1], p[cols + k], p[cols + k + 1]);
      ok = (mask >> id) & 1u;
    }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// The transfer rule written out literally: for each old state (u, v) and new
// ranks (u', v'), map the old ranks into the merged label set and test the
// window. Returns the final table keyed by (u, v).
inline std::map<std::pair<int, int>, unsigned long> transfer_table(std::uint32_t mask, int columns) {
  std::map<std::pair<int, int>, unsigned long> c{{{1, 2}, 1}, {{2, 1}, 1}};
  for (int cols = 1; cols < columns; ++cols) {
    const int total = 2 * cols + 2;
    std::map<std::pair<int, int>, unsigned long> next;
    for (const auto& [state, count] : c) {
      for (int nu = 1; nu <= total; ++nu) {
        for (int nv = 1; nv <= total; ++nv) {
          if (nu == nv) continue;
          std::vector<int> rest;
          for (int r = 1; r <= total; ++r) {
            if (r != nu && r != nv) rest.push_back(r);
          }
          const int ou = rest[state.first - 1], ov = rest[state.second - 1];
          if ((mask >> piece_of(ov, nv, ou, nu)) & 1u) next[{nu, nv}] += count;
        }
      }
    }
    c = std::move(next);
  }
  return c;
}

inline unsigned long transfer_count(std::uint32_t mask, int n) {
  unsigned long t = 0;
  for (const auto& [state, count] : transfer_table(mask, n + 1)) t += count;
  return t;
}

// Down-up permutations of 1..len (p1 > p2 < p3 > ...), optionally by first entry.
inline std::vector<unsigned long> down_up_by_first(int len) {
  std::vector<unsigned long> by_first(len + 1, 0);
  std::vector<int> p(len);
  std::iota(p.begin(), p.end(), 1);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < len && ok; ++i) ok = (i % 2 == 0) ? p[i] > p[i + 1] : p[i] < p[i + 1];
    if (ok) ++by_first[p[0]];
  } while (std::next_permutation(p.begin(), p.end()));
  return by_first;
}

inline unsigned long down_up_count(int len) {
  const auto v = down_up_by_first(len);
  return std::accumulate(v.begin(), v.end(), 0ul);
}

// Partitions of 1..2m+2p into A (2m) and B (2p), counted per ordering
// pattern: [0] a_i < b_k < b_{k+l} < a_{i+j}, [1] a_i < b_k < a_{i+j} < b_{k+l},
// [2] a_i < a_{i+j} < b_k < b_{k+l}.
inline std::array<unsigned long, 3> partition_counts(int i, int j, int k, int l, int m, int p) {
  const int total = 2 * m + 2 * p;
  std::array<unsigned long, 3> r{};
  for (std::uint32_t bits = 0; bits < (1u << total); ++bits) {
    if (__builtin_popcount(bits) != 2 * m) continue;
    std::vector<int> a, b;
    for (int x = 0; x < total; ++x) ((bits >> x) & 1u ? a : b).push_back(x + 1);
    const int ai = a[i - 1], aij = a[i + j - 1], bk = b[k - 1], bkl = b[k + l - 1];
    if (ai < bk && bk < bkl && bkl < aij) ++r[0];
    if (ai < bk && bk < aij && aij < bkl) ++r[1];
    if (ai < aij && aij < bk && bk < bkl) ++r[2];
  }
  return r;
}

}  // namespace oracle
