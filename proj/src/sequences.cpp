#include "stdpuzzle/sequences.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace stdpuzzle {

BigInt factorial(long k) {
  if (k < 0) throw std::domain_error("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt double_factorial(long k) {
  if (k < -1) throw std::domain_error("(" + std::to_string(k) + ")!! is undefined");
  if (k <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigInt catalan(long k) {
  if (k < 0) throw std::domain_error("catalan index must be >= 0");
  return binomial(2 * k, k) / (k + 1);
}

BigInt fibonacci(long k) {
  if (k < 0) throw std::domain_error("fibonacci index must be >= 0");
  BigInt a = 0, b = 1;
  for (long i = 0; i < k; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

BigInt entringer(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("entringer(n,k) needs 0 <= k <= n");
  std::vector<BigInt> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1);
    next[0] = 0;
    for (long j = 1; j <= i; ++j) next[j] = next[j - 1] + row[i - j];
    row = std::move(next);
  }
  return row[k];
}

BigInt secant(long k) { return entringer(2 * k, 2 * k); }

namespace {
void check_T(long n, long k) {
  if (n < 0 || k < 1 || k > n + 1) throw std::out_of_range("T(n,k) needs n >= 0 and 1 <= k <= n+1");
}
void check_t(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("t(n,k) needs 0 <= k <= n");
}
}  // namespace

BigInt triangle_T_closed(long n, long k) {
  check_T(n, k);
  BigInt den = factorial(n - k + 1);
  den <<= static_cast<mp_bitcnt_t>(n - k + 1);
  return to_integer(Rational(k * factorial(2 * n - k + 1), den));
}

BigInt triangle_T_recurrence(long n, long k) {
  check_T(n, k);
  // row[k] = T(level, k), index 0 holds T(level, 0) = 0.
  std::vector<BigInt> row{0, 1};
  for (long level = 1; level <= n; ++level) {
    std::vector<BigInt> next(level + 2);
    // suffix[i] = sum_{j >= i} row[j]
    std::vector<BigInt> suffix(row.size() + 1, 0);
    for (long i = static_cast<long>(row.size()) - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + row[i];
    next[0] = 0;
    for (long kk = 1; kk <= level + 1; ++kk) next[kk] = kk * suffix[kk - 1];
    row = std::move(next);
  }
  return row[k];
}

BigInt triangle_T(long n, long k) { return triangle_T_closed(n, k); }

BigInt catalan_triangle_t_closed(long n, long k) {
  check_t(n, k);
  return to_integer(Rational(BigInt(n - k + 1) * binomial(n + k, n), BigInt(n + 1)));
}

BigInt catalan_triangle_t_recurrence(long n, long k) {
  check_t(n, k);
  std::vector<BigInt> row{1};
  for (long level = 1; level <= n; ++level) {
    std::vector<BigInt> next(level + 1);
    BigInt run = 0;
    for (long j = 0; j <= level; ++j) {
      if (j < level) run += row[j];  // t(level-1, level) = 0
      next[j] = run;
    }
    row = std::move(next);
  }
  return row[k];
}

BigInt catalan_triangle_t(long n, long k) { return catalan_triangle_t_closed(n, k); }

BigInt lattice_L(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("lattice_L needs n >= 1");
  if (n > max_n) throw std::domain_error("lattice_L bound exceeded");
  // State p in {0,1,2}^n, encoded base 3; memo holds path counts to zero.
  std::vector<int> pow3(n + 1, 1);
  for (int i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
  std::vector<BigInt> memo(pow3[n]);
  std::vector<bool> known(pow3[n], false);
  auto digit = [&](int code, int i) { return code / pow3[i] % 3; };
  auto admissible = [&](int code) {
    for (int i = 0; i + 1 < n; ++i) {
      if (std::abs(digit(code, i) - digit(code, i + 1)) > 1) return false;
    }
    return true;
  };
  // Every step lowers the coordinate sum, so increasing codes are a valid
  // evaluation order only per sum level; iterate by total.
  std::vector<std::vector<int>> by_sum(2 * n + 1);
  for (int code = 0; code < pow3[n]; ++code) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += digit(code, i);
    by_sum[s].push_back(code);
  }
  memo[0] = 1;
  known[0] = true;
  for (int s = 1; s <= 2 * n; ++s) {
    for (int code : by_sum[s]) {
      if (!admissible(code)) continue;
      BigInt total = 0;
      for (int i = 0; i < n; ++i) {
        if (digit(code, i) == 0) continue;
        const int prev = code - pow3[i];
        if (known[prev]) total += memo[prev];
      }
      memo[code] = total;
      known[code] = true;
    }
  }
  return memo[pow3[n] - 1];
}

namespace {

class WhirlpoolSearch {
 public:
  explicit WhirlpoolSearch(int n) : len_(2 * n), perm_(len_ + 1) {}

  unsigned long long run() {
    place(1, 0);
    return count_;
  }

 private:
  // Positions are 1-based; the condition for k involves p[2k-1], p[2k], p[2k+1]
  // and is checked as soon as p[2k+1] is placed.
  void place(int pos, unsigned used) {
    if (pos > len_) {
      ++count_;
      return;
    }
    for (int v = 1; v <= len_; ++v) {
      if (used >> v & 1u) continue;
      perm_[pos] = v;
      if (pos >= 3 && pos % 2 == 1) {
        const bool first = perm_[pos - 2] < perm_[pos - 1];
        const bool second = perm_[pos - 1] < perm_[pos];
        if (first != second) continue;
      }
      place(pos + 1, used | (1u << v));
    }
  }

  int len_;
  std::vector<int> perm_;
  unsigned long long count_ = 0;
};

// Permutations of 1..N with a prescribed up (true) / down (false) sequence
// between consecutive entries, via the standard insertion DP on the rank of
// the last entry.
BigInt count_with_signature(const std::vector<bool>& up) {
  const std::size_t len = up.size() + 1;
  std::vector<BigInt> f{1};  // f[j]: arrangements of i items ending at rank j (0-based)
  for (std::size_t i = 1; i < len; ++i) {
    std::vector<BigInt> prefix(i + 1, 0);
    for (std::size_t j = 0; j < i; ++j) prefix[j + 1] = prefix[j] + f[j];
    std::vector<BigInt> g(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      // New last entry has rank j among i+1; previous last had rank r among i.
      g[j] = up[i - 1] ? prefix[j] : prefix[i] - prefix[j];
    }
    f = std::move(g);
  }
  BigInt total = 0;
  for (const auto& x : f) total += x;
  return total;
}

}  // namespace

BigInt whirlpool_W(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("whirlpool_W needs n >= 1");
  if (n > max_n) throw std::domain_error("whirlpool_W bound exceeded");
  return BigInt(static_cast<unsigned long>(WhirlpoolSearch(n).run()));
}

BigInt whirlpool_W_by_signature(int n) {
  if (n < 1) throw std::invalid_argument("whirlpool_W needs n >= 1");
  // Comparisons c_1..c_{2n-1}; c_{2k-1} == c_{2k} for k = 1..n-1, c_{2n-1} free.
  BigInt total = 0;
  const unsigned long choices = 1ul << n;
  for (unsigned long bits = 0; bits < choices; ++bits) {
    std::vector<bool> up(2 * n - 1);
    for (int k = 1; k <= n - 1; ++k) up[2 * k - 2] = up[2 * k - 1] = (bits >> (k - 1)) & 1u;
    up[2 * n - 2] = (bits >> (n - 1)) & 1u;
    total += count_with_signature(up);
  }
  return total;
}

BigInt multinomial_all_pairs(long m) {
  if (m < 0) throw std::domain_error("multinomial_all_pairs needs m >= 0");
  BigInt r = factorial(2 * m);
  r >>= static_cast<mp_bitcnt_t>(m);
  return r;
}

}  // namespace stdpuzzle
