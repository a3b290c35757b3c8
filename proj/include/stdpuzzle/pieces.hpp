#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stdpuzzle {

// A, B, C, D by the vertical order inside the two columns:
// A: both columns increase bottom-to-top, D: both decrease,
// B: left increases and right decreases, C: the opposite.
enum class PieceClass : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

char class_letter(PieceClass c);

// Cell order of a 2x2 grid: top-left, top-right, bottom-left, bottom-right.
using Grid = std::array<int, 4>;
inline constexpr int kTL = 0;
inline constexpr int kTR = 1;
inline constexpr int kBL = 2;
inline constexpr int kBR = 3;

// Dense id 0..23 in canonical order A1..A6, B1..B6, C1..C6, D1..D6.
using PieceId = int;
inline constexpr int kPieceCount = 24;

struct StandardPiece {
  PieceClass cls;
  int index;  // 1..6
  char han_letter;
  Grid grid;

  constexpr PieceId id() const { return static_cast<int>(cls) * 6 + (index - 1); }
  std::string code() const;  // "A1"
};

const std::array<StandardPiece, kPieceCount>& piece_table();
const StandardPiece& piece(PieceId id);
PieceId piece_id(PieceClass cls, int index);

// Accepts "A1".."D6" or a single letter code.
PieceId parse_piece(std::string_view code);

// Relative-order pattern of four distinct values placed as TL, TR, BL, BR.
// Throws std::invalid_argument("not a valid piece window") on duplicates.
PieceId reduce(int tl, int tr, int bl, int br);
inline PieceId reduce(const Grid& g) { return reduce(g[kTL], g[kTR], g[kBL], g[kBR]); }

class Support {
 public:
  constexpr Support() = default;
  static constexpr Support from_mask(std::uint32_t mask) { return Support(mask & kAllMask); }
  static Support of(std::initializer_list<PieceId> ids);
  static Support all() { return Support(kAllMask); }

  // "A1,A2,A3" or letter codes "A,B,D"; empty string and "-" give the empty set.
  static Support parse(std::string_view text);

  bool contains(PieceId id) const { return (mask_ >> id) & 1u; }
  Support& insert(PieceId id) {
    mask_ |= 1u << id;
    return *this;
  }
  bool empty() const { return mask_ == 0; }
  int size() const;
  bool subset_of(const Support& other) const { return (mask_ & ~other.mask_) == 0; }
  std::uint32_t mask() const { return mask_; }

  // Members in canonical (class, index) order.
  std::vector<PieceId> members() const;
  std::string to_string() const;

  friend Support operator|(Support a, Support b) { return Support(a.mask_ | b.mask_); }
  friend Support operator&(Support a, Support b) { return Support(a.mask_ & b.mask_); }
  friend bool operator==(Support a, Support b) = default;
  friend auto operator<=>(Support a, Support b) = default;

 private:
  static constexpr std::uint32_t kAllMask = (1u << kPieceCount) - 1;
  constexpr explicit Support(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

// A 2 x (n+1) grid labelled bijectively by 1..2n+2.
class Puzzle {
 public:
  // Throws std::invalid_argument unless the rows have equal length >= 2 and
  // hold each of 1..2n+2 exactly once.
  Puzzle(std::vector<int> top, std::vector<int> bottom);

  // Two whitespace-separated rows, split by '/', ';' or a newline.
  static Puzzle parse(std::string_view text);

  int n() const { return static_cast<int>(top_.size()) - 1; }
  int columns() const { return static_cast<int>(top_.size()); }
  std::span<const int> top() const { return top_; }
  std::span<const int> bottom() const { return bottom_; }
  Grid window(int k) const { return {top_[k], top_[k + 1], bottom_[k], bottom_[k + 1]}; }

  std::string to_string() const;  // "[3 6 8 7 / 1 2 4 5]"

  friend bool operator==(const Puzzle&, const Puzzle&) = default;

 private:
  std::vector<int> top_;
  std::vector<int> bottom_;
};

std::vector<PieceId> pieces_of(const Puzzle& p);
Support minimal_support(const Puzzle& p);
bool is_supported(const Puzzle& p, const Support& s);

}  // namespace stdpuzzle
