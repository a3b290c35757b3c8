#include "stdpuzzle/oeis.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"

namespace stdpuzzle {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path default_oeis_cache_dir() {
  if (const char* env = std::getenv(kOeisCacheEnv); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "stdpuzzle" / "oeis";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "stdpuzzle" / "oeis";
  return fs::temp_directory_path() / "stdpuzzle-oeis";
}

std::string oeis_query(const std::vector<BigInt>& terms) {
  std::string q;
  for (const auto& t : terms) {
    if (!q.empty()) q += ',';
    q += t.get_str();
  }
  return q;
}

fs::path oeis_cache_file(const fs::path& dir, const std::string& query) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : query) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << h << ".json";
  return dir / name.str();
}

std::optional<std::vector<OeisEntry>> parse_oeis_response(const std::string& body) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded()) return std::nullopt;
  const json* results = nullptr;
  if (doc.is_array()) {
    results = &doc;
  } else if (doc.is_object()) {
    auto it = doc.find("results");
    if (it == doc.end()) return std::nullopt;
    if (it->is_null()) return std::vector<OeisEntry>{};
    results = &*it;
  } else if (doc.is_null()) {
    return std::vector<OeisEntry>{};
  }
  if (!results || !results->is_array()) return std::nullopt;
  std::vector<OeisEntry> out;
  for (const auto& r : *results) {
    if (!r.is_object() || !r.contains("number") || !r["number"].is_number_integer()) return std::nullopt;
    std::ostringstream id;
    id << 'A' << std::setw(6) << std::setfill('0') << r["number"].get<long>();
    out.push_back({id.str(), r.value("name", "")});
  }
  return out;
}

namespace {

// One request in flight at a time.
std::mutex& network_mutex() {
  static std::mutex m;
  return m;
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

OeisResult oeis_lookup(const std::vector<BigInt>& terms, const OeisOptions& options) {
  if (static_cast<int>(terms.size()) < kOeisMinTerms) {
    throw std::invalid_argument("OEIS lookup needs at least " + std::to_string(kOeisMinTerms) + " terms");
  }
  const std::string query = oeis_query(terms);
  const fs::path dir = options.cache_dir.empty() ? default_oeis_cache_dir() : options.cache_dir;
  const fs::path file = oeis_cache_file(dir, query);

  OeisResult result;
  if (auto cached = read_file(file)) {
    if (auto parsed = parse_oeis_response(*cached)) {
      result.entries = std::move(*parsed);
      result.from_cache = true;
      return result;
    }
  }
  if (!options.allow_network) {
    result.warning = "OEIS cache miss and network disabled";
    return result;
  }

  std::string body;
  {
    std::lock_guard lock(network_mutex());
    httplib::SSLClient client(options.host);
    client.set_connection_timeout(options.timeout_seconds, 0);
    client.set_read_timeout(options.timeout_seconds, 0);
    client.set_follow_location(true);
    auto res = client.Get("/search?q=" + query + "&fmt=json");
    if (!res) {
      result.warning = "OEIS request failed: " + httplib::to_string(res.error());
      return result;
    }
    if (res->status != 200) {
      result.warning = "OEIS request failed: HTTP " + std::to_string(res->status);
      return result;
    }
    body = res->body;
  }
  auto parsed = parse_oeis_response(body);
  if (!parsed) {
    result.warning = "malformed OEIS response";
    return result;
  }
  result.entries = std::move(*parsed);
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(file, std::ios::binary);
  if (out) {
    out << body;
  } else {
    result.warning = "could not write OEIS cache file " + file.string();
  }
  return result;
}

}  // namespace stdpuzzle
