#include "stdpuzzle/transforms.hpp"

#include <algorithm>
#include <array>

#include "stdpuzzle/counting.hpp"

namespace stdpuzzle {

Puzzle t1(const Puzzle& p) {
  std::vector<int> top(p.top().rbegin(), p.top().rend());
  std::vector<int> bottom(p.bottom().rbegin(), p.bottom().rend());
  return Puzzle(std::move(top), std::move(bottom));
}

Puzzle t2(const Puzzle& p) {
  return Puzzle(std::vector<int>(p.bottom().begin(), p.bottom().end()), std::vector<int>(p.top().begin(), p.top().end()));
}

Puzzle t3(const Puzzle& p) {
  const int m = 2 * p.columns();
  auto flip = [m](std::span<const int> row) {
    std::vector<int> out;
    out.reserve(row.size());
    for (int a : row) out.push_back(m + 1 - a);
    return out;
  };
  return Puzzle(flip(p.top()), flip(p.bottom()));
}

SupportMap parse_support_map(std::string_view name) {
  if (name == "f1" || name == "F1" || name == "1") return SupportMap::F1;
  if (name == "f2" || name == "F2" || name == "2") return SupportMap::F2;
  if (name == "f3" || name == "F3" || name == "3") return SupportMap::F3;
  throw std::invalid_argument("unknown map '" + std::string(name) + "' (expected f1, f2 or f3)");
}

namespace {

constexpr PieceClass swap_ad_bc(PieceClass c) {
  switch (c) {
    case PieceClass::A: return PieceClass::D;
    case PieceClass::B: return PieceClass::C;
    case PieceClass::C: return PieceClass::B;
    case PieceClass::D: return PieceClass::A;
  }
  return c;
}

constexpr PieceClass swap_bc(PieceClass c) {
  if (c == PieceClass::B) return PieceClass::C;
  if (c == PieceClass::C) return PieceClass::B;
  return c;
}

using MapTable = std::array<PieceId, kPieceCount>;

MapTable build(SupportMap f) {
  // F3 index table, position i-1 holds j for source index i.
  constexpr std::array<int, 6> kF3Index = {1, 5, 6, 4, 2, 3};
  MapTable t{};
  for (const auto& p : piece_table()) {
    PieceClass cls = p.cls;
    int idx = p.index;
    switch (f) {
      case SupportMap::F1:
        cls = swap_bc(cls);
        idx = (idx + 3 - 1) % 6 + 1;
        break;
      case SupportMap::F2:
        cls = swap_ad_bc(cls);
        break;
      case SupportMap::F3:
        cls = swap_ad_bc(cls);
        idx = kF3Index[idx - 1];
        break;
    }
    t[p.id()] = piece_id(cls, idx);
  }
  return t;
}

const MapTable& table(SupportMap f) {
  static const std::array<MapTable, 3> kTables = {build(SupportMap::F1), build(SupportMap::F2), build(SupportMap::F3)};
  return kTables[static_cast<int>(f) - 1];
}

}  // namespace

PieceId apply(SupportMap f, PieceId id) { return table(f)[piece(id).id()]; }

Support apply(SupportMap f, const Support& s) {
  Support out;
  for (PieceId id : s.members()) out.insert(apply(f, id));
  return out;
}

InvarianceResult check_invariance(const Support& s, int n, SupportMap f, int max_n) {
  if (n > max_n) throw std::domain_error("n=" + std::to_string(n) + " exceeds invariance bound " + std::to_string(max_n));
  const Support image = apply(f, s);
  const BigInt before = count_bruteforce(s, n, max_n);
  const BigInt after = count_bruteforce(image, n, max_n);
  const bool engines_agree = before == count_dp(s, n) && after == count_dp(image, n);
  return {engines_agree && before == after, before.get_si(), after.get_si()};
}

}  // namespace stdpuzzle
