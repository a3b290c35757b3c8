#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stdpuzzle/bigint.hpp"
#include "stdpuzzle/pieces.hpp"
#include "stdpuzzle/theorems.hpp"

namespace stdpuzzle {

// kind 1: P_x (or F2(P_x)) u {B_i or C_i : i in subset}
// kind 2: P_x u {B_i or C_i : i in subset} u F1F2(P_z)
struct FamilySpec {
  int kind = 1;
  int x = 1;
  ConverterKind converter = ConverterKind::B;
  IndexSet subset = 0;
  bool mirrored = false;  // kind 1 only: base is F2(P_x)
  std::optional<int> z;   // kind 2 only

  std::string descriptor() const;  // "1:x4:B:{1,3}:P", "2:x4:z7:C:{}"
  Support support() const;
  bool formula_free() const;  // x or z is the unsolved piece
};

// kind 1: 19 * 2^6 * 2 * 2 specs, kind 2: 19 * 19 * 2^6 * 2. The unsolved
// simple piece is left out unless `include_unsolved`.
std::vector<FamilySpec> family_specs(int kind, bool include_unsolved = false);

struct FamilyRow {
  FamilySpec spec;
  Support support;
  std::vector<BigInt> prefix;  // s_1..s_nmax
  std::vector<std::string> matches;  // registry matches, best first
  std::string duplicate_of;  // first descriptor with the same support, if any
};

// Counts each distinct support once, on `threads` workers, then hands rows to
// `sink` in spec order from the calling thread.
std::size_t sweep_families(const std::vector<FamilySpec>& specs, int nmax, int threads,
                           const std::function<void(const FamilyRow&)>& sink);

enum class OutputFormat { Json, Csv };

// Streams the sweep as a JSON array or CSV with a header. Returns the row count.
std::size_t write_families(std::ostream& out, const std::vector<FamilySpec>& specs, int nmax, int threads, OutputFormat format);

}  // namespace stdpuzzle
