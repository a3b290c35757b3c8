// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <bit>
#include <map>
#include <set>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stdpuzzle/counting.hpp"
#include "stdpuzzle/sequences.hpp"
#include "stdpuzzle/skeleton.hpp"
#include "stdpuzzle/theorems.hpp"
#include "stdpuzzle/transforms.hpp"
#include "stdpuzzle/verify.hpp"

#ifndef STDPUZZLE_GOLDEN_DIR
#error "STDPUZZLE_GOLDEN_DIR must be defined"
#endif

using namespace stdpuzzle;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failures for one criterion; notes are printed either way.
struct Check {
  int failures = 0;
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (problems.size() < 8) problems.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

PieceId A(int i) { return piece_id(PieceClass::A, i); }
PieceId Bp(int i) { return piece_id(PieceClass::B, i); }
PieceId Cp(int i) { return piece_id(PieceClass::C, i); }

std::string str(const BigInt& v) { return v.get_str(); }

// k!! by direct multiplication.
BigInt dfact(long k) {
  BigInt r = 1;
  for (long j = k; j > 1; j -= 2) r *= j;
  return r;
}

BigInt fib(int k) {
  BigInt a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    BigInt t = a + b;
    a = b;
    b = t;
  }
  return a;
}

// Lattice paths from (2,..,2) to (0,..,0) in `dims` coordinates, by memoized
// recursion over points written in base 3.
BigInt lattice_paths(int dims) {
  std::map<std::vector<int>, BigInt> memo;
  std::function<BigInt(std::vector<int>&)> go = [&](std::vector<int>& p) -> BigInt {
    bool zero = true;
    for (int v : p) zero = zero && v == 0;
    if (zero) return 1;
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    BigInt total = 0;
    for (int i = 0; i < dims; ++i) {
      if (p[i] == 0) continue;
      --p[i];
      bool ok = true;
      for (int j = 0; j + 1 < dims; ++j) ok = ok && std::abs(p[j] - p[j + 1]) <= 1;
      if (ok) total += go(p);
      ++p[i];
    }
    memo.emplace(p, total);
    return total;
  };
  std::vector<int> start(dims, 2);
  return go(start);
}

// ---------------------------------------------------------------------------

Check criterion1() {
  Check c;
  const auto t0 = Clock::now();
  const auto got = count_dp_prefix(Support::of({A(2), A(3)}), 6);
  const long want[] = {2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 6; ++n) c.expect(got[n - 1] == want[n - 1], "s_" + std::to_string(n) + " = " + str(got[n - 1]));
  const double t = seconds_since(t0);
  c.expect(t < 1.0, "took " + std::to_string(t) + " s");

  std::ifstream in(std::string(STDPUZZLE_GOLDEN_DIR) + "/a2a3_n3.txt");
  c.expect(static_cast<bool>(in), "golden file missing");
  std::vector<Puzzle> golden;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) golden.push_back(Puzzle::parse(line));
  }
  const auto puzzles = enumerate_puzzles(Support::of({A(2), A(3)}), 3);
  c.expect(golden.size() == 14, "golden file has " + std::to_string(golden.size()) + " matrices");
  c.expect(puzzles == golden, "enumeration differs from the golden file");
  c.note("2 5 14 42 132 429; 14 matrices match the golden file");
  return c;
}

Check criterion2() {
  Check c;
  const auto t0 = Clock::now();
  const auto p = count_dp_prefix(Support::of({A(1), A(2), A(3)}), 6);
  const auto q = count_dp_prefix(Support::of({A(1), A(2)}), 6);
  for (int n = 1; n <= 6; ++n) {
    c.expect(p[n - 1] == dfact(2 * n + 1), "{A1,A2,A3} n=" + std::to_string(n));
    c.expect(q[n - 1] == dfact(2 * n), "{A1,A2} n=" + std::to_string(n));
  }
  c.expect(seconds_since(t0) < 1.0, "too slow");
  return c;
}

Check criterion3() {
  Check c;
  const auto t0 = Clock::now();
  const Support s = Support::of({A(1), A(2), A(3), A(4), A(5)});
  for (int n = 1; n <= 4; ++n) {
    const BigInt count = count_dp(s, n);
    c.expect(count == secant(n + 1), "secant n=" + std::to_string(n));
    c.expect(count == entringer(2 * n + 2, 2 * n + 2), "E(2n+2,2n+2) n=" + std::to_string(n));
  }
  for (int len = 2; len <= 10; len += 2) {
    c.expect(secant(len / 2) == oracle::down_up_count(len), "down-up permutations of length " + std::to_string(len));
  }
  const double t = seconds_since(t0);
  c.expect(t < 30.0, "took " + std::to_string(t) + " s");
  c.note("E values confirmed by permutation search up to length 10");
  return c;
}

Check criterion4() {
  Check c;
  const Support s = Support::of({A(1), A(2), A(4), A(5)});
  for (int n = 1; n <= 4; ++n) {
    const BigInt count = count_dp(s, n);
    c.expect(count == lattice_L(n + 1), "L(n+1) n=" + std::to_string(n));
    c.expect(count == lattice_paths(n + 1), "path recursion n=" + std::to_string(n));
  }
  return c;
}

Check criterion5() {
  Check c;
  const Support s = Support::of({A(1), Bp(1), Cp(1)});
  for (int n = 1; n <= 8; ++n) c.expect(count_dp(s, n) == fib(n + 3), "F(n+3) n=" + std::to_string(n));
  for (int n = 1; n <= 3; ++n) c.expect(count_bruteforce(s, n) == fib(n + 3), "brute force n=" + std::to_string(n));
  const ClaimResult eq = verify_claim("eq79", 5);
  c.expect(eq.status == ClaimStatus::PaperInconsistency, "eq79 reported as " + to_string(eq.status));
  c.note("eq79 (F(n+2)) flagged as " + to_string(eq.status));
  return c;
}

Check criterion6() {
  Check c;
  const Support p = Support::of({A(1), A(2), A(3)});
  const Support a23 = Support::of({A(2), A(3)});
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      c.expect(count_corner_bottom(p, n, 2 * n - k + 2) == triangle_T(n, k), "T(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    for (int k = 0; k <= n; ++k) {
      c.expect(count_corner_bottom(a23, n, n + k + 1) == catalan_triangle_t(n, k),
               "t(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }
  // Corner counts by explicit enumeration.
  for (int n = 1; n <= 4; ++n) {
    std::map<int, long> by_p, by_a23;
    for (const auto& z : enumerate_puzzles(p, n)) ++by_p[z.bottom().back()];
    for (const auto& z : enumerate_puzzles(a23, n)) ++by_a23[z.bottom().back()];
    for (int k = 1; k <= n + 1; ++k) c.expect(triangle_T(n, k) == by_p[2 * n - k + 2], "enumerated T n=" + std::to_string(n));
    for (int k = 0; k <= n; ++k) c.expect(catalan_triangle_t(n, k) == by_a23[n + k + 1], "enumerated t n=" + std::to_string(n));
  }
  for (int n = 0; n <= 30; ++n) {
    for (int k = 1; k <= n + 1; ++k) c.expect(triangle_T_closed(n, k) == triangle_T_recurrence(n, k), "T closed vs recurrence");
  }
  return c;
}

Check criterion7() {
  Check c;
  for (int n = 1; n <= 20; ++n) {
    BigInt s1 = 0, s2 = 0, s3 = 0;
    for (int k = 1; k <= n; ++k) {
      const BigInt t = triangle_T(n - 1, k);
      s1 += BigInt(k + 1) * t;
      s2 += BigInt((2 * n - k) * (k + 1)) * t;
      s3 += binomial(2 * n - k + 1, 2) * t;
    }
    const std::string tag = " n=" + std::to_string(n);
    c.expect(s1 == dfact(2 * n), "sum (k+1)T = (2n)!!" + tag);
    c.expect(s2 % 2 == 0 && s2 / 2 + dfact(2 * n + 1) == (BigInt(1) << n) * factorial(n + 1), "B4/B5 identity" + tag);
    c.expect(s3 + dfact(2 * n + 1) == BigInt(n + 3) * dfact(2 * n + 1) - dfact(2 * n + 2), "B6 identity" + tag);
  }
  c.note("sums over k = 1..n");
  return c;
}

Check criterion8() {
  Check c;
  const auto t0 = Clock::now();
  const std::set<std::string> groups = {"thm42", "thm43", "thm44", "thm46", "thm47", "thm48"};
  int forms = 0, engine_bad = 0;
  std::vector<std::string> printed_bad;
  for (const auto& f : formula_claims()) {
    if (f.kind != FormKind::Closed || !groups.count(f.group)) continue;
    ++forms;
    const int top = f.support.size() <= 5 ? 4 : 3;
    bool printed_ok = true;
    for (int n = f.min_n; n <= top; ++n) {
      const BigInt count = count_dp(f.support, n);
      if (f.engine(n) != count) ++engine_bad;
      if (f.printed(n) != Rational(count)) printed_ok = false;
    }
    if (!printed_ok) printed_bad.push_back(f.id);
  }
  for (const auto& id : printed_bad) c.expect(false, "displayed form " + id + " disagrees with count_dp");
  c.expect(engine_bad == 0, std::to_string(engine_bad) + " library values disagree with count_dp");
  c.expect(seconds_since(t0) < 120.0, "too slow");
  c.note(std::to_string(forms) + " displayed forms; library (corrected) values all equal count_dp");
  return c;
}

Check criterion9() {
  Check c;
  long cases = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int p = 1; m + p <= 4; ++p) {
      for (int i = 1; i < 2 * m; ++i) {
        for (int j = 1; i + j <= 2 * m; ++j) {
          for (int k = 1; k < 2 * p; ++k) {
            for (int l = 1; k + l <= 2 * p; ++l) {
              const auto o = oracle::partition_counts(i, j, k, l, m, p);
              ++cases;
              c.expect(Q1(i, j, k, l, m, p) == o[0] && Q2(i, j, k, l, m, p) == o[1] && Q3(i, j, k, l, m, p) == o[2],
                       "Q at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) +
                           "," + std::to_string(m) + "," + std::to_string(p) + ")");
            }
          }
        }
      }
    }
  }
  c.note(std::to_string(cases) + " argument tuples");
  return c;
}

Check criterion10() {
  Check c;
  std::mt19937 rng(66);
  std::uniform_int_distribution<int> xs(1, 19), ys(1, 6);
  auto simple = [&] {
    const int v = xs(rng);
    return v >= kUnsolvedRow ? v + 1 : v;
  };
  auto run = [&](ConverterKind kind, int triples) {
    for (int t = 0; t < triples; ++t) {
      const int x = simple(), y = ys(rng), z = simple();
      const Support s = assembled_support(x, y, z, kind);
      for (int n = 1; n <= 3; ++n) {
        c.expect(compose(x, y, z, n, kind) == count_dp(s, n),
                 std::string(kind == ConverterKind::B ? "B" : "C") + " (" + std::to_string(x) + "," + std::to_string(y) + "," +
                     std::to_string(z) + ") n=" + std::to_string(n));
      }
      if (t < 3) c.expect(count_dp(s, 2) == count_bruteforce(s, 2), "brute force spot check");
    }
  };
  run(ConverterKind::B, 30);
  run(ConverterKind::C, 12);
  c.note("30 B-converter and 12 C-converter triples, n = 1..3");
  return c;
}

Check criterion11() {
  Check c;
  std::vector<std::string> bad_rows;
  bool corrected_ok = true;
  for (int x = 1; x <= 20; ++x) {
    if (x == kUnsolvedRow) continue;
    const Support s = simple_piece_row(x).support;
    bool row_ok = true;
    for (int m = 1; m <= 4; ++m) {
      const CornerTable t = corner_table(s, m);
      for (int i = 1; i < 2 * m; ++i) {
        for (int j = 1; i + j <= 2 * m; ++j) {
          row_ok = row_ok && table3_as_printed(x, i, j, m) == t.at(i, i + j);
          corrected_ok = corrected_ok && Px(x, i, j, m) == t.at(i, i + j);
        }
      }
    }
    if (!row_ok) bad_rows.push_back(std::to_string(x));
  }
  for (const auto& r : bad_rows) c.expect(false, "published row " + r + " disagrees with the corner table");
  c.expect(corrected_ok, "corrected Px disagrees with the corner table");
  c.note(std::string("corrected Px ") + (corrected_ok ? "matches" : "does not match") + " every corner table entry");
  return c;
}

Check criterion12() {
  Check c;
  long cases = 0;
  for (int a = 0; a < 64; ++a) {
    if (std::popcount(static_cast<unsigned>(a)) > 2) continue;
    const auto alpha = static_cast<IndexSet>(a);
    for (int u = 0; u < 64; ++u) {
      if (u & ~a) continue;
      for (int v = 0; v < 64; ++v) {
        if (v & ~a) continue;
        for (int n = 1; n <= 3; ++n) {
          ++cases;
          c.expect(thm51_check(alpha, static_cast<IndexSet>(u), static_cast<IndexSet>(v), n).holds(), "thm51 alpha=" + std::to_string(a));
          c.expect(corollary52_check(alpha, static_cast<IndexSet>(u), static_cast<IndexSet>(v), n).holds(),
                   "cor52 alpha=" + std::to_string(a));
        }
      }
    }
  }
  std::mt19937 rng(51);
  for (int t = 0; t < 20; ++t) {
    int a = 0;
    while (std::popcount(static_cast<unsigned>(a)) < 3) a = static_cast<int>(rng() % 64);
    const int u = static_cast<int>(rng() % 64) & a, v = static_cast<int>(rng() % 64) & a, n = 1 + static_cast<int>(rng() % 3);
    c.expect(thm51_check(static_cast<IndexSet>(a), static_cast<IndexSet>(u), static_cast<IndexSet>(v), n).holds(), "random thm51");
    c.expect(corollary52_check(static_cast<IndexSet>(a), static_cast<IndexSet>(u), static_cast<IndexSet>(v), n).holds(), "random cor52");
  }
  for (int n = 1; n <= 3; ++n) c.expect(count_dp(knuth_support(), n) == whirlpool_W(n + 1), "whirlpool instance n=" + std::to_string(n));
  for (int classes = 0; classes < 16; ++classes) {
    for (int a = 1; a < 64; ++a) {
      if (std::popcount(static_cast<unsigned>(a)) > 2) continue;
      for (int n = 1; n <= 3; ++n) {
        c.expect(thm_P_eq_AP(static_cast<std::uint8_t>(classes), static_cast<IndexSet>(a), n).holds(),
                 "P_alpha product classes=" + std::to_string(classes) + " alpha=" + std::to_string(a));
      }
    }
  }
  c.note(std::to_string(cases) + " small cases, 20 random larger ones");
  return c;
}

Check criterion13() {
  Check c;
  const auto dist = cross_edge_distribution(1);
  const std::vector<int> stated = {1, 9, 8, 2};
  c.expect(all_simple_pieces(1).size() == 20, "class 1 has " + std::to_string(all_simple_pieces(1).size()) + " supports");
  std::string got;
  for (int v : dist) got += (got.empty() ? "" : "+") + std::to_string(v);
  c.expect(dist == stated, "edge-count distribution is " + got + ", stated 1+9+8+2");
  std::size_t total = 0;
  for (int cls = 1; cls <= 4; ++cls) total += all_simple_pieces(cls).size();
  c.expect(total == 80, "four classes give " + std::to_string(total));
  c.expect(simple_piece(parse_basic("b>a,b>c,d>c")) == Support::of({A(1), A(2), A(3), A(4), A(5)}), "skeleton b>a,b>c,d>c");
  for (const auto& row : simple_piece_rows()) {
    for (int n = 1; n <= 4; ++n) {
      c.expect(simple_piece_count(row.x, n) == count_dp(row.support, n), "row " + std::to_string(row.x) + " n=" + std::to_string(n));
    }
  }
  c.note("distribution by cross edges: " + got);
  return c;
}

Check criterion14() {
  Check c;
  std::mt19937 rng(14);
  std::uniform_int_distribution<std::uint32_t> masks(0, (1u << 24) - 1);
  for (int t = 0; t < 200; ++t) {
    const Support s = Support::from_mask(masks(rng));
    const auto dp = count_dp_prefix(s, 4);
    for (int n = 1; n <= 4; ++n) c.expect(dp[n - 1] == count_bruteforce(s, n), "support " + s.to_string());
  }
  for (int n = 1; n <= 4; ++n) {
    const auto hist = minimal_support_histogram(n);
    for (auto f : {SupportMap::F1, SupportMap::F2, SupportMap::F3}) {
      for (const auto& [mask, count] : hist) {
        const auto it = hist.find(apply(f, Support::from_mask(mask)).mask());
        c.expect(it != hist.end() && it->second == count, "histogram not invariant at n=" + std::to_string(n));
      }
    }
  }
  c.note("invariance for all supports via minimal-support histograms, n <= 4");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"Catalan family and golden enumeration", criterion1},
      {"double factorial families", criterion2},
      {"secant family", criterion3},
      {"lattice path family", criterion4},
      {"Fibonacci family", criterion5},
      {"corner refinements", criterion6},
      {"hypergeometric identities", criterion7},
      {"displayed closed forms", criterion8},
      {"Q lemma", criterion9},
      {"composition sum", criterion10},
      {"published refinement table", criterion11},
      {"two-choice identities, whirlpool instance, product theorem", criterion12},
      {"skeleton model", criterion13},
      {"engine equivalence and F-invariance", criterion14},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = Clock::now();
    Check c;
    try {
      c = criteria[k].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (c.failures ? "FAIL" : "PASS") << " criterion " << (k + 1) << ": " << criteria[k].first;
    line.precision(2);
    line << std::fixed << " (" << seconds_since(t0) << " s)";
    for (const auto& n : c.notes) line << "; " << n;
    for (const auto& p : c.problems) line << "; " << p;
    if (c.failures > static_cast<int>(c.problems.size())) line << "; ... " << c.failures << " failures";
    std::cout << line.str() << std::endl;
    failed += c.failures > 0;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
