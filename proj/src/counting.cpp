#include "stdpuzzle/counting.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace stdpuzzle {

CornerTable::CornerTable(int columns) : columns_(columns) {
  if (columns < 1) throw std::invalid_argument("corner table needs at least one column");
  cells_.resize(static_cast<std::size_t>(labels()) * labels());
}

std::size_t CornerTable::index(int u, int v) const {
  if (u < 1 || v < 1 || u > labels() || v > labels()) throw std::out_of_range("corner rank out of range");
  return static_cast<std::size_t>(u - 1) * labels() + (v - 1);
}

BigInt CornerTable::total() const {
  BigInt t = 0;
  for (const auto& c : cells_) t += c;
  return t;
}

BigInt CornerTable::bottom_sum(int u) const {
  BigInt t = 0;
  for (int v = 1; v <= labels(); ++v) t += at(u, v);
  return t;
}

BigInt CornerTable::top_sum(int v) const {
  BigInt t = 0;
  for (int u = 1; u <= labels(); ++u) t += at(u, v);
  return t;
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

void check_bound(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > max_n) throw std::domain_error("n=" + std::to_string(n) + " exceeds enumeration bound " + std::to_string(max_n));
}

// Visits every labelling of the 2 x (n+1) grid whose windows all lie in
// `allowed`, passing the rows and the accumulated minimal-support mask.
template <class Visit>
class Backtracker {
 public:
  Backtracker(Support allowed, int n, Visit& visit)
      : allowed_(allowed), cols_(n + 1), labels_(2 * n + 2), top_(cols_), bottom_(cols_), visit_(visit) {}

  void run() { place(0, 0, 0); }

 private:
  void place(int col, std::uint32_t used, std::uint32_t mask) {
    if (col == cols_) {
      visit_(top_, bottom_, mask);
      return;
    }
    for (int b = 1; b <= labels_; ++b) {
      if (used >> b & 1u) continue;
      for (int t = 1; t <= labels_; ++t) {
        if (t == b || (used >> t & 1u)) continue;
        std::uint32_t m = mask;
        if (col > 0) {
          const PieceId id = reduce(top_[col - 1], t, bottom_[col - 1], b);
          if (!allowed_.contains(id)) continue;
          m |= 1u << id;
        }
        top_[col] = t;
        bottom_[col] = b;
        place(col + 1, used | (1u << b) | (1u << t), m);
      }
    }
  }

  Support allowed_;
  int cols_;
  int labels_;
  std::vector<int> top_;
  std::vector<int> bottom_;
  Visit& visit_;
};

template <class Visit>
void backtrack(Support allowed, int n, Visit visit) {
  Backtracker<Visit> bt(allowed, n, visit);
  bt.run();
}

}  // namespace

std::vector<Puzzle> enumerate_puzzles(const Support& s, int n, int max_n) {
  check_bound(n, max_n);
  std::vector<Puzzle> out;
  backtrack(s, n, [&](const std::vector<int>& top, const std::vector<int>& bottom, std::uint32_t) {
    out.emplace_back(top, bottom);
  });
  std::sort(out.begin(), out.end(), [](const Puzzle& a, const Puzzle& b) {
    if (!std::ranges::equal(a.bottom(), b.bottom())) return std::ranges::lexicographical_compare(a.bottom(), b.bottom());
    return std::ranges::lexicographical_compare(a.top(), b.top());
  });
  return out;
}

BigInt count_bruteforce(const Support& s, int n, int max_n) {
  check_bound(n, max_n);
  unsigned long long count = 0;
  backtrack(s, n, [&](const std::vector<int>&, const std::vector<int>&, std::uint32_t) { ++count; });
  return BigInt(static_cast<unsigned long>(count));
}

std::unordered_map<std::uint32_t, long long> minimal_support_histogram(int n, int max_n) {
  check_bound(n, max_n);
  std::unordered_map<std::uint32_t, long long> hist;
  backtrack(Support::all(), n, [&](const std::vector<int>&, const std::vector<int>&, std::uint32_t mask) { ++hist[mask]; });
  return hist;
}

// ---------------------------------------------------------------------------
// Transfer counting
//
// A layer holds c(u, v) for the current L = 2m labels. Adding a column with
// merged ranks (u', v') in 1..L+2 sends an old rank r to r, r+1 or r+2
// depending on whether it falls below lo = min(u', v'), between, or above
// hi = max(u', v'). The window pattern therefore depends only on the zones of
// the old (u, v) and, inside one zone, on whether u < v. Each (zone, zone,
// orientation) cell is a rectangle of the old table, summed via 2-D prefix
// sums kept separately for u < v and u > v.

namespace {

using Acceptance = std::array<std::array<std::array<std::array<bool, 2>, 3>, 3>, 2>;

// accept[new_order][zone_u][zone_v][old_order]; new_order 0: u' < v',
// old_order 0: u < v.
Acceptance acceptance_for(const Support& s) {
  Acceptance acc{};
  constexpr int kRep[3] = {2, 6, 10};
  for (int no = 0; no < 2; ++no) {
    const int nu = no == 0 ? 4 : 8;
    const int nv = no == 0 ? 8 : 4;
    for (int zu = 0; zu < 3; ++zu) {
      for (int zv = 0; zv < 3; ++zv) {
        for (int oo = 0; oo < 2; ++oo) {
          int ou = kRep[zu];
          int ov = kRep[zv];
          if (zu == zv) {
            ou += oo == 0 ? -1 : 1;
            ov += oo == 0 ? 1 : -1;
          }
          acc[no][zu][zv][oo] = s.contains(reduce(ov, nv, ou, nu));
        }
      }
    }
  }
  return acc;
}

template <class Int>
class Layer {
 public:
  explicit Layer(int labels) : labels_(labels), cells_(static_cast<std::size_t>(labels) * labels) {}

  static Layer initial() {
    Layer l(2);
    l.at(1, 2) = 1;
    l.at(2, 1) = 1;
    return l;
  }

  int labels() const { return labels_; }
  Int& at(int u, int v) { return cells_[static_cast<std::size_t>(u - 1) * labels_ + (v - 1)]; }
  const Int& at(int u, int v) const { return cells_[static_cast<std::size_t>(u - 1) * labels_ + (v - 1)]; }

  Int total() const {
    Int t = 0;
    for (const auto& c : cells_) t += c;
    return t;
  }

  Layer next(const Acceptance& acc) const {
    const int L = labels_;
    const int W = L + 1;
    // prefix[o][u * W + v] = sum over a <= u, b <= v, with a < b (o = 0) or a > b (o = 1).
    std::array<std::vector<Int>, 2> prefix{std::vector<Int>(W * W), std::vector<Int>(W * W)};
    for (int u = 1; u <= L; ++u) {
      for (int v = 1; v <= L; ++v) {
        for (int o = 0; o < 2; ++o) {
          Int cell = 0;
          if ((o == 0 && u < v) || (o == 1 && u > v)) cell = at(u, v);
          auto& p = prefix[o];
          p[u * W + v] = cell + p[(u - 1) * W + v] + p[u * W + v - 1] - p[(u - 1) * W + v - 1];
        }
      }
    }
    auto rect = [&](int o, int u1, int u2, int v1, int v2) -> Int {
      if (u1 > u2 || v1 > v2) return Int(0);
      const auto& p = prefix[o];
      return p[u2 * W + v2] - p[(u1 - 1) * W + v2] - p[u2 * W + v1 - 1] + p[(u1 - 1) * W + v1 - 1];
    };

    Layer out(L + 2);
    for (int nu = 1; nu <= L + 2; ++nu) {
      for (int nv = 1; nv <= L + 2; ++nv) {
        if (nu == nv) continue;
        const int lo = std::min(nu, nv);
        const int hi = std::max(nu, nv);
        const std::array<std::pair<int, int>, 3> zone{{{1, lo - 1}, {lo, hi - 2}, {hi - 1, L}}};
        const auto& a = acc[nu < nv ? 0 : 1];
        Int sum = 0;
        for (int zu = 0; zu < 3; ++zu) {
          for (int zv = 0; zv < 3; ++zv) {
            const auto [u1, u2] = zone[zu];
            const auto [v1, v2] = zone[zv];
            for (int o = 0; o < 2; ++o) {
              if (a[zu][zv][o]) sum += rect(o, u1, u2, v1, v2);
            }
          }
        }
        out.at(nu, nv) = sum;
      }
    }
    return out;
  }

 private:
  int labels_;
  std::vector<Int> cells_;
};

using U128 = unsigned __int128;

// (2n+2)! < 2^127 up to n = 15, and every count is bounded by it.
constexpr int kNativeMaxN = 15;

BigInt widen(const U128& x) { return to_big(x); }
BigInt widen(const BigInt& x) { return x; }

template <class Int>
std::vector<BigInt> prefix_totals(const Support& s, int nmax) {
  const Acceptance acc = acceptance_for(s);
  std::vector<BigInt> out;
  out.reserve(nmax);
  Layer<Int> layer = Layer<Int>::initial();
  for (int n = 1; n <= nmax; ++n) {
    layer = layer.next(acc);
    out.push_back(widen(layer.total()));
  }
  return out;
}

template <class Int>
CornerTable table_of(const Support& s, int columns) {
  const Acceptance acc = acceptance_for(s);
  Layer<Int> layer = Layer<Int>::initial();
  for (int m = 1; m < columns; ++m) layer = layer.next(acc);
  CornerTable t(columns);
  for (int u = 1; u <= t.labels(); ++u) {
    for (int v = 1; v <= t.labels(); ++v) t.at(u, v) = widen(layer.at(u, v));
  }
  return t;
}

}  // namespace

std::vector<BigInt> count_dp_prefix(const Support& s, int nmax) {
  if (nmax < 1) return {};
  if (nmax <= kNativeMaxN) return prefix_totals<U128>(s, nmax);
  return prefix_totals<BigInt>(s, nmax);
}

BigInt count_dp(const Support& s, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return count_dp_prefix(s, n).back();
}

CornerTable corner_table(const Support& s, int columns) {
  if (columns < 1) throw std::invalid_argument("corner table needs at least one column");
  if (columns - 1 <= kNativeMaxN) return table_of<U128>(s, columns);
  return table_of<BigInt>(s, columns);
}

BigInt count_corner_bottom(const Support& s, int n, int x) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (x < 1 || x > 2 * n + 2) throw std::out_of_range("corner label out of range");
  return corner_table(s, n + 1).bottom_sum(x);
}

BigInt count_corner_top(const Support& s, int n, int x) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (x < 1 || x > 2 * n + 2) throw std::out_of_range("corner label out of range");
  return corner_table(s, n + 1).top_sum(x);
}

}  // namespace stdpuzzle
