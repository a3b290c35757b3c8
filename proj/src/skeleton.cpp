#include "stdpuzzle/skeleton.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stdpuzzle {

SkeletonGraph::SkeletonGraph(std::vector<std::string> names) : names_(std::move(names)) {}

void SkeletonGraph::add_edge(int from, int to) {
  if (from < 0 || to < 0 || from >= size() || to >= size()) throw std::out_of_range("edge endpoint out of range");
  if (from == to) throw std::invalid_argument("self-loop on vertex " + names_[from]);
  if (has_edge(from, to)) throw std::invalid_argument("duplicate edge " + names_[from] + "->" + names_[to]);
  edges_.emplace_back(from, to);
}

bool SkeletonGraph::has_edge(int from, int to) const {
  return std::ranges::find(edges_, std::pair{from, to}) != edges_.end();
}

std::vector<std::vector<bool>> SkeletonGraph::closure() const {
  const int n = size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges_) r[u][v] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

bool SkeletonGraph::acyclic() const {
  const auto r = closure();
  for (int i = 0; i < size(); ++i) {
    if (r[i][i]) return false;
  }
  return true;
}

SkeletonGraph SkeletonGraph::reversed() const {
  SkeletonGraph g(names_);
  for (auto [u, v] : edges_) g.add_edge(v, u);
  return g;
}

SkeletonGraph basic_graph() { return SkeletonGraph({"a", "b", "c", "d"}); }

SkeletonGraph parse_basic(std::string_view edges) {
  SkeletonGraph g = basic_graph();
  std::vector<int> ends;
  auto vertex = [](char ch) {
    if (ch < 'a' || ch > 'd') throw std::invalid_argument(std::string("unknown skeleton vertex '") + ch + "'");
    return ch - 'a';
  };
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    // u>v or u->v
    std::string t;
    for (char ch : token) {
      if (ch != '-') t.push_back(ch);
    }
    if (t.size() != 3 || t[1] != '>') throw std::invalid_argument("bad skeleton edge '" + token + "'");
    g.add_edge(vertex(t[0]), vertex(t[2]));
    token.clear();
  };
  for (char ch : edges) {
    if (ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return g;
}

namespace {

// Grid cell of each basic-skeleton corner.
constexpr std::array<int, 4> kCell = {kTL, kBL, kTR, kBR};

void require_four(const SkeletonGraph& g) {
  if (g.size() != 4) throw std::invalid_argument("a basic skeleton has exactly four vertices");
}

// Lengths of all simple directed paths from s to t.
void path_lengths(const SkeletonGraph& g, int s, int t, int depth, unsigned seen, std::vector<int>& out) {
  if (s == t) {
    out.push_back(depth);
    return;
  }
  for (auto [u, v] : g.edges()) {
    if (u != s || (seen >> v & 1u)) continue;
    path_lengths(g, v, t, depth + 1, seen | (1u << v), out);
  }
}

bool valid_basic(const SkeletonGraph& g) {
  if (!g.acyclic()) return false;
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      if (s == t) continue;
      std::vector<int> lens;
      path_lengths(g, s, t, 0, 1u << s, lens);
      if (std::ranges::any_of(lens, [&](int l) { return l != lens.front(); })) return false;
    }
  }
  return true;
}

std::optional<int> class_of(const SkeletonGraph& g) {
  const auto r = g.closure();
  const bool ba = r[kVb][kVa], ab = r[kVa][kVb], dc = r[kVd][kVc], cd = r[kVc][kVd];
  if (ba && dc) return 1;
  if (ba && cd) return 2;
  if (ab && dc) return 3;
  if (ab && cd) return 4;
  return std::nullopt;
}

Support extensions_of(const SkeletonGraph& g) {
  const auto r = g.closure();
  Support s;
  for (const auto& p : piece_table()) {
    bool ok = true;
    for (int u = 0; u < 4 && ok; ++u) {
      for (int v = 0; v < 4 && ok; ++v) {
        if (r[u][v] && p.grid[kCell[u]] > p.grid[kCell[v]]) ok = false;
      }
    }
    if (ok) s.insert(p.id());
  }
  return s;
}

int cross_edges(const SkeletonGraph& g) {
  int c = 0;
  for (auto [u, v] : g.edges()) {
    const int lo = std::min(u, v), hi = std::max(u, v);
    const bool column = (lo == kVa && hi == kVb) || (lo == kVc && hi == kVd);
    if (!column) ++c;
  }
  return c;
}

// Every valid basic skeleton: each of the six vertex pairs is absent or
// oriented one way.
const std::vector<SkeletonGraph>& valid_skeletons() {
  static const std::vector<SkeletonGraph> all = [] {
    constexpr std::array<std::pair<int, int>, 6> pairs{{{kVa, kVb}, {kVa, kVc}, {kVa, kVd}, {kVb, kVc}, {kVb, kVd}, {kVc, kVd}}};
    std::vector<SkeletonGraph> out;
    for (int code = 0; code < 729; ++code) {
      SkeletonGraph g = basic_graph();
      int c = code;
      for (auto [u, v] : pairs) {
        const int choice = c % 3;
        c /= 3;
        if (choice == 1) g.add_edge(u, v);
        if (choice == 2) g.add_edge(v, u);
      }
      if (valid_basic(g)) out.push_back(std::move(g));
    }
    return out;
  }();
  return all;
}

}  // namespace

bool validate_basic(const SkeletonGraph& g) {
  require_four(g);
  return valid_basic(g);
}

std::optional<int> classify(const SkeletonGraph& g) {
  if (!validate_basic(g)) throw std::invalid_argument("invalid basic skeleton");
  return class_of(g);
}

Support simple_piece(const SkeletonGraph& g) {
  if (!validate_basic(g)) throw std::invalid_argument("invalid basic skeleton");
  return extensions_of(g);
}

std::vector<SimplePiece> all_simple_pieces(int cls) {
  if (cls < 1 || cls > 4) throw std::out_of_range("skeleton class must be 1..4");
  std::map<std::uint32_t, SimplePiece> by_support;
  for (const auto& g : valid_skeletons()) {
    if (class_of(g) != cls) continue;
    const Support s = extensions_of(g);
    auto it = by_support.find(s.mask());
    if (it == by_support.end() || static_cast<int>(g.edges().size()) < static_cast<int>(it->second.skeleton.edges().size())) {
      by_support.insert_or_assign(s.mask(), SimplePiece{s, g, cross_edges(g)});
    }
  }
  std::vector<SimplePiece> out;
  for (auto& [mask, sp] : by_support) out.push_back(std::move(sp));
  return out;
}

std::vector<int> cross_edge_distribution(int cls) {
  std::vector<int> dist(4, 0);
  for (const auto& sp : all_simple_pieces(cls)) ++dist.at(sp.cross_edges);
  return dist;
}

std::optional<SkeletonGraph> generating_skeleton(const Support& s) {
  const SkeletonGraph* best = nullptr;
  for (const auto& g : valid_skeletons()) {
    if (extensions_of(g) != s) continue;
    if (!best || g.edges().size() < best->edges().size()) best = &g;
  }
  if (!best) return std::nullopt;
  return *best;
}

SkeletonGraph puzzle_skeleton(const Support& s, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const auto basic = generating_skeleton(s);
  if (!basic) throw std::invalid_argument("no generating basic skeleton");
  std::vector<std::string> names;
  for (int k = 0; k <= n; ++k) names.push_back("t" + std::to_string(k));
  for (int k = 0; k <= n; ++k) names.push_back("b" + std::to_string(k));
  SkeletonGraph g(std::move(names));
  const int cols = n + 1;
  for (int k = 0; k < n; ++k) {
    const std::array<int, 4> at = {k, cols + k, k + 1, cols + k + 1};  // a, b, c, d
    for (auto [u, v] : basic->edges()) {
      if (!g.has_edge(at[u], at[v])) g.add_edge(at[u], at[v]);
    }
  }
  return g;
}

BigInt count_linear_extensions(const SkeletonGraph& g, int max_vertices) {
  const int n = g.size();
  if (n > max_vertices) throw std::domain_error("poset has more vertices than the linear-extension bound");
  if (!g.acyclic()) return 0;
  std::vector<std::uint32_t> preds(n, 0);
  for (auto [u, v] : g.edges()) preds[v] |= 1u << u;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<BigInt> ways(static_cast<std::size_t>(full) + 1, 0);
  ways[0] = 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (ways[mask] == 0) continue;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v & 1u) || (preds[v] & ~mask)) continue;
      ways[mask | (1u << v)] += ways[mask];
    }
  }
  return ways[full];
}

std::string export_dot(const SkeletonGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const auto& v : g.names()) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << g.names()[u] << " -> " << g.names()[v] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace stdpuzzle
