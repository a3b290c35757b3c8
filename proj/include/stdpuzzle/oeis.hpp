#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stdpuzzle/bigint.hpp"

namespace stdpuzzle {

struct OeisEntry {
  std::string id;  // "A000108"
  std::string name;
};

struct OeisOptions {
  std::filesystem::path cache_dir;  // empty: default_oeis_cache_dir()
  bool allow_network = true;
  int timeout_seconds = 10;
  std::string host = "oeis.org";
};

struct OeisResult {
  std::vector<OeisEntry> entries;
  bool from_cache = false;
  std::string warning;  // non-empty when the lookup degraded
};

inline constexpr int kOeisMinTerms = 5;
inline constexpr const char* kOeisCacheEnv = "STDPUZZLE_OEIS_CACHE";

// $STDPUZZLE_OEIS_CACHE, else $XDG_CACHE_HOME/stdpuzzle/oeis, else ~/.cache/stdpuzzle/oeis.
std::filesystem::path default_oeis_cache_dir();

// Comma-joined terms, the OEIS search query.
std::string oeis_query(const std::vector<BigInt>& terms);
// Cache file for a query: FNV-1a 64 of the query text, in hex.
std::filesystem::path oeis_cache_file(const std::filesystem::path& dir, const std::string& query);

// Parses an OEIS search response (a bare array or {"results": [...]}).
// Returns std::nullopt on malformed input.
std::optional<std::vector<OeisEntry>> parse_oeis_response(const std::string& body);

// Cache first, then one HTTPS GET. Network or parse failures yield an empty
// result with a warning. Throws std::invalid_argument with fewer than
// kOeisMinTerms terms.
OeisResult oeis_lookup(const std::vector<BigInt>& terms, const OeisOptions& options = {});

}  // namespace stdpuzzle
