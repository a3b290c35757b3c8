#include "stdpuzzle/pieces.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace stdpuzzle {

namespace {

constexpr std::array<StandardPiece, kPieceCount> kTable = {{
    {PieceClass::A, 1, 'A', {4, 3, 1, 2}}, {PieceClass::A, 2, 'B', {3, 4, 1, 2}},
    {PieceClass::A, 3, 'D', {2, 4, 1, 3}}, {PieceClass::A, 4, 'H', {3, 4, 2, 1}},
    {PieceClass::A, 5, 'G', {4, 3, 2, 1}}, {PieceClass::A, 6, 'N', {4, 2, 3, 1}},
    {PieceClass::B, 1, 'C', {4, 2, 1, 3}}, {PieceClass::B, 2, 'E', {3, 2, 1, 4}},
    {PieceClass::B, 3, 'F', {2, 3, 1, 4}}, {PieceClass::B, 4, 'L', {3, 1, 2, 4}},
    {PieceClass::B, 5, 'J', {4, 1, 2, 3}}, {PieceClass::B, 6, 'Q', {4, 1, 3, 2}},
    {PieceClass::C, 1, 'X', {1, 3, 4, 2}}, {PieceClass::C, 2, 'R', {1, 4, 3, 2}},
    {PieceClass::C, 3, 'K', {1, 4, 2, 3}}, {PieceClass::C, 4, 'P', {2, 4, 3, 1}},
    {PieceClass::C, 5, 'V', {2, 3, 4, 1}}, {PieceClass::C, 6, 'U', {3, 2, 4, 1}},
    {PieceClass::D, 1, 'Z', {1, 2, 4, 3}}, {PieceClass::D, 2, 'T', {1, 2, 3, 4}},
    {PieceClass::D, 3, 'M', {1, 3, 2, 4}}, {PieceClass::D, 4, 'S', {2, 1, 3, 4}},
    {PieceClass::D, 5, 'Y', {2, 1, 4, 3}}, {PieceClass::D, 6, 'W', {3, 1, 4, 2}},
}};

// Pattern key: base-4 digits of the zero-based grid values, TL most significant.
constexpr int pattern_key(const Grid& g) {
  return ((g[0] - 1) << 6) | ((g[1] - 1) << 4) | ((g[2] - 1) << 2) | (g[3] - 1);
}

struct PatternIndex {
  std::array<PieceId, 256> by_key{};
  constexpr PatternIndex() {
    for (auto& v : by_key) v = -1;
    for (const auto& p : kTable) by_key[pattern_key(p.grid)] = p.id();
  }
};

constexpr PatternIndex kPatterns{};

}  // namespace

char class_letter(PieceClass c) { return "ABCD"[static_cast<int>(c)]; }

std::string StandardPiece::code() const { return std::string{class_letter(cls)} + std::to_string(index); }

const std::array<StandardPiece, kPieceCount>& piece_table() { return kTable; }

const StandardPiece& piece(PieceId id) {
  if (id < 0 || id >= kPieceCount) throw std::out_of_range("piece id out of range");
  return kTable[id];
}

PieceId piece_id(PieceClass cls, int index) {
  if (index < 1 || index > 6) throw std::out_of_range("piece index must be 1..6");
  return static_cast<int>(cls) * 6 + index - 1;
}

PieceId parse_piece(std::string_view code) {
  while (!code.empty() && std::isspace(static_cast<unsigned char>(code.front()))) code.remove_prefix(1);
  while (!code.empty() && std::isspace(static_cast<unsigned char>(code.back()))) code.remove_suffix(1);
  if (code.size() == 2 && code[0] >= 'A' && code[0] <= 'D' && code[1] >= '1' && code[1] <= '6') {
    return piece_id(static_cast<PieceClass>(code[0] - 'A'), code[1] - '0');
  }
  if (code.size() == 1) {
    for (const auto& p : kTable) {
      if (p.han_letter == code[0]) return p.id();
    }
  }
  throw std::invalid_argument("unknown piece code '" + std::string(code) + "'");
}

PieceId reduce(int tl, int tr, int bl, int br) {
  const std::array<int, 4> v{tl, tr, bl, br};
  Grid ranks{};
  for (int i = 0; i < 4; ++i) {
    int r = 1;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      if (v[j] == v[i]) throw std::invalid_argument("not a valid piece window");
      if (v[j] < v[i]) ++r;
    }
    ranks[i] = r;
  }
  return kPatterns.by_key[pattern_key(ranks)];
}

Support Support::of(std::initializer_list<PieceId> ids) {
  Support s;
  for (PieceId id : ids) s.insert(id);
  return s;
}

Support Support::parse(std::string_view text) {
  Support s;
  std::string token;
  auto flush = [&] {
    if (!token.empty() && token != "-") s.insert(parse_piece(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return s;
}

int Support::size() const { return std::popcount(mask_); }

std::vector<PieceId> Support::members() const {
  std::vector<PieceId> out;
  for (PieceId id = 0; id < kPieceCount; ++id) {
    if (contains(id)) out.push_back(id);
  }
  return out;
}

std::string Support::to_string() const {
  std::string out;
  for (PieceId id : members()) {
    if (!out.empty()) out += ',';
    out += kTable[id].code();
  }
  return out;
}

Puzzle::Puzzle(std::vector<int> top, std::vector<int> bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.size() != bottom_.size()) throw std::invalid_argument("puzzle rows differ in length");
  if (top_.size() < 2) throw std::invalid_argument("a puzzle needs at least two columns");
  const int m = 2 * static_cast<int>(top_.size());
  std::vector<bool> seen(m + 1, false);
  for (const auto* row : {&top_, &bottom_}) {
    for (int v : *row) {
      if (v < 1 || v > m || seen[v]) throw std::invalid_argument("puzzle labels must be a permutation of 1.." + std::to_string(m));
      seen[v] = true;
    }
  }
}

Puzzle Puzzle::parse(std::string_view text) {
  std::vector<std::vector<int>> rows(1);
  std::string num;
  auto flush = [&] {
    if (!num.empty()) rows.back().push_back(std::stoi(num));
    num.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      num.push_back(ch);
    } else if (ch == '/' || ch == ';' || ch == '\n') {
      flush();
      if (!rows.back().empty()) rows.emplace_back();
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == '[' || ch == ']' || ch == ',') {
      flush();
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + ch + "' in puzzle text");
    }
  }
  flush();
  if (rows.back().empty()) rows.pop_back();
  if (rows.size() != 2) throw std::invalid_argument("puzzle text needs exactly two rows");
  return Puzzle(std::move(rows[0]), std::move(rows[1]));
}

std::string Puzzle::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < top_.size(); ++i) os << (i ? " " : "") << top_[i];
  os << " / ";
  for (std::size_t i = 0; i < bottom_.size(); ++i) os << (i ? " " : "") << bottom_[i];
  os << ']';
  return os.str();
}

std::vector<PieceId> pieces_of(const Puzzle& p) {
  std::vector<PieceId> out;
  out.reserve(p.n());
  for (int k = 0; k < p.n(); ++k) out.push_back(reduce(p.window(k)));
  return out;
}

Support minimal_support(const Puzzle& p) {
  Support s;
  for (PieceId id : pieces_of(p)) s.insert(id);
  return s;
}

bool is_supported(const Puzzle& p, const Support& s) { return minimal_support(p).subset_of(s); }

}  // namespace stdpuzzle
