#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "stdpuzzle/counting.hpp"

using namespace stdpuzzle;

#ifndef STDPUZZLE_GOLDEN_DIR
#error "STDPUZZLE_GOLDEN_DIR must be defined"
#endif

TEST_CASE("small counts") {
  CHECK(count_dp(Support::parse("A2,A3"), 5) == 132);
  CHECK(count_dp(Support::parse("A1"), 7) == 1);
  CHECK(count_dp(Support::parse("B1"), 3) == 0);
  CHECK(count_bruteforce(Support::parse("A1,B1,C1"), 3) == 8);
  CHECK(count_bruteforce(Support{}, 2) == 0);
  CHECK(count_dp(Support::all(), 2) == 720);
  CHECK_THROWS_AS(count_bruteforce(Support::all(), 6), std::domain_error);
  CHECK_THROWS_AS(count_dp(Support::all(), 0), std::invalid_argument);
}

TEST_CASE("engines agree with the permutation oracle") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << 24) - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t m = mask(rng);
    const Support s = Support::from_mask(m);
    for (int n = 1; n <= 3; ++n) {
      const auto expect = oracle::count_permutations(m, n);
      CHECK(count_bruteforce(s, n) == expect);
      CHECK(count_dp(s, n) == expect);
      CHECK(oracle::transfer_count(m, n) == expect);
    }
  }
}

TEST_CASE("count_dp agrees with count_bruteforce on 200 random supports up to n = 4") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    // Mix dense and sparse supports.
    std::bernoulli_distribution keep(trial % 2 ? 0.25 : 0.6);
    Support s;
    for (PieceId id = 0; id < kPieceCount; ++id) {
      if (keep(rng)) s.insert(id);
    }
    const auto prefix = count_dp_prefix(s, 4);
    for (int n = 1; n <= 4; ++n) {
      INFO("support " << s.to_string() << " n " << n);
      CHECK(prefix[n - 1] == count_bruteforce(s, n));
    }
  }
}

TEST_CASE("corner table matches the literal transfer rule") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << 24) - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t m = mask(rng);
    for (int columns = 1; columns <= 5; ++columns) {
      const CornerTable t = corner_table(Support::from_mask(m), columns);
      const auto ref = oracle::transfer_table(m, columns);
      for (int u = 1; u <= t.labels(); ++u) {
        for (int v = 1; v <= t.labels(); ++v) {
          const auto it = ref.find({u, v});
          const unsigned long expect = it == ref.end() ? 0 : it->second;
          CHECK(t.at(u, v) == expect);
        }
      }
    }
  }
}

TEST_CASE("corner sums equal direct enumeration") {
  const Support s = Support::parse("A1,A2,A3,A4,A5");
  const int n = 3;
  std::vector<int> bottom(2 * n + 3, 0), top(2 * n + 3, 0);
  for (const auto& p : enumerate_puzzles(s, n)) {
    ++bottom[p.bottom().back()];
    ++top[p.top().back()];
  }
  for (int x = 1; x <= 2 * n + 2; ++x) {
    CHECK(count_corner_bottom(s, n, x) == bottom[x]);
    CHECK(count_corner_top(s, n, x) == top[x]);
  }
  CHECK_THROWS_AS(count_corner_bottom(s, n, 0), std::out_of_range);
}

TEST_CASE("big-integer path matches the native path") {
  const Support s = Support::parse("A1,A2,A3,A4,A5,A6");
  const auto big = count_dp_prefix(s, 17);
  // (2n+2)! / 2^(n+1)
  for (int n = 1; n <= 17; ++n) {
    BigInt expect;
    mpz_fac_ui(expect.get_mpz_t(), 2 * n + 2);
    expect >>= n + 1;
    CHECK(big[n - 1] == expect);
  }
  CHECK(count_dp(Support::parse("A2,A3"), 20) == BigInt("24466267020"));
}

TEST_CASE("enumeration of {A2,A3} at n = 3 reproduces the golden list") {
  std::ifstream in(std::string(STDPUZZLE_GOLDEN_DIR) + "/a2a3_n3.txt");
  REQUIRE(in);
  std::vector<std::string> golden;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) golden.push_back("[" + line + "]");
  }
  const auto puzzles = enumerate_puzzles(Support::parse("A2,A3"), 3);
  REQUIRE(puzzles.size() == golden.size());
  for (std::size_t i = 0; i < golden.size(); ++i) CHECK(puzzles[i].to_string() == golden[i]);
}
