#pragma once

#include "stdpuzzle/bigint.hpp"

namespace stdpuzzle {

BigInt factorial(long k);
// Zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

// k(k-2)(k-4)...; (-1)!! = 0!! = 1. Throws std::domain_error for k < -1.
BigInt double_factorial(long k);

BigInt catalan(long k);
BigInt fibonacci(long k);  // F(0) = 0, F(1) = 1

// Down-up permutations of n+1 starting with k+1 (boustrophedon recurrence).
// Throws std::out_of_range unless 0 <= k <= n.
BigInt entringer(long n, long k);
BigInt secant(long k);  // E(2k, 2k)

// Weighted Catalan-tree triangle, 1 <= k <= n+1, n >= 0:
//   closed form k (2n-k+1)! / ((n-k+1)! 2^(n-k+1)),
//   recurrence T(n,k) = k * sum_{i=k-1}^{n} T(n-1,i), T(m,0) = 0, T(0,1) = 1.
BigInt triangle_T(long n, long k);
BigInt triangle_T_closed(long n, long k);
BigInt triangle_T_recurrence(long n, long k);

// Catalan triangle, 0 <= k <= n:
//   closed form (n-k+1)/(n+1) * binom(n+k, n),
//   recurrence t(n,k) = sum_{j=0}^{k} t(n-1,j), t(n,n+1) = 0.
BigInt catalan_triangle_t(long n, long k);
BigInt catalan_triangle_t_closed(long n, long k);
BigInt catalan_triangle_t_recurrence(long n, long k);

inline constexpr int kLatticeMaxN = 12;
// Lattice paths from (2,...,2) to (0,...,0) in n coordinates, unit decrements,
// with |p_i - p_{i+1}| <= 1 at every point. Throws std::domain_error past max_n.
BigInt lattice_L(int n, int max_n = kLatticeMaxN);

inline constexpr int kWhirlpoolMaxN = 5;
// Permutations p of 1..2n with p[2k-1] < p[2k] <=> p[2k] < p[2k+1], by
// exhaustive search. Throws std::domain_error past max_n.
BigInt whirlpool_W(int n, int max_n = kWhirlpoolMaxN);
// Same count, summed over the admissible up/down signatures with an
// insertion DP per signature; for arguments beyond the search bound.
BigInt whirlpool_W_by_signature(int n);

BigInt multinomial_all_pairs(long m);  // (2m)! / 2^m

}  // namespace stdpuzzle
