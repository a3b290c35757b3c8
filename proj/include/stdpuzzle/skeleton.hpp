#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stdpuzzle/bigint.hpp"
#include "stdpuzzle/pieces.hpp"

namespace stdpuzzle {

// Directed graph on named vertices. Edge u -> v reads "label(v) > label(u)".
class SkeletonGraph {
 public:
  SkeletonGraph() = default;
  explicit SkeletonGraph(std::vector<std::string> names);

  // Throws std::invalid_argument on self-loops and duplicate edges.
  void add_edge(int from, int to);
  bool has_edge(int from, int to) const;

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Reachability matrix of the transitive closure (irreflexive unless cyclic).
  std::vector<std::vector<bool>> closure() const;
  bool acyclic() const;
  SkeletonGraph reversed() const;

  friend bool operator==(const SkeletonGraph&, const SkeletonGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;
};

// Corners of a basic skeleton.
inline constexpr int kVa = 0;  // top-left
inline constexpr int kVb = 1;  // bottom-left
inline constexpr int kVc = 2;  // top-right
inline constexpr int kVd = 3;  // bottom-right

// Empty graph on a, b, c, d.
SkeletonGraph basic_graph();
// "b>a,b>c,d>c" (also "b->a"); each pair u>v is the edge u -> v.
SkeletonGraph parse_basic(std::string_view edges);

// Throws std::invalid_argument unless the graph has exactly four vertices.
bool validate_basic(const SkeletonGraph& g);
// 1: b~>a, d~>c   2: b~>a, c~>d   3: a~>b, d~>c   4: a~>b, c~>d.
// Throws std::invalid_argument for an invalid basic skeleton.
std::optional<int> classify(const SkeletonGraph& g);
// Pieces whose grid order extends the closure of g.
Support simple_piece(const SkeletonGraph& g);

struct SimplePiece {
  Support support;
  SkeletonGraph skeleton;
  int cross_edges;  // edges other than a-b and c-d
};

// Distinct i-simple pieces, sorted by support, each with its Hasse skeleton.
std::vector<SimplePiece> all_simple_pieces(int cls);
// Sizes of all_simple_pieces(cls) grouped by cross-edge count 0..3.
std::vector<int> cross_edge_distribution(int cls);

// Basic skeleton generating exactly this support, if any.
std::optional<SkeletonGraph> generating_skeleton(const Support& s);

// Union of the generating skeleton's covers over every window of the
// 2 x (n+1) grid. Vertices: top row t0..tn, then bottom row b0..bn.
// Throws std::invalid_argument("no generating basic skeleton") for
// supports that are not simple.
SkeletonGraph puzzle_skeleton(const Support& s, int n);

inline constexpr int kLinearExtensionMaxVertices = 16;
// Downset DP; a cyclic graph has none. Throws std::domain_error past the bound.
BigInt count_linear_extensions(const SkeletonGraph& g, int max_vertices = kLinearExtensionMaxVertices);

std::string export_dot(const SkeletonGraph& g, std::string_view name = "skeleton");

}  // namespace stdpuzzle
