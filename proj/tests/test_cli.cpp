#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "stdpuzzle/counting.hpp"
#include "stdpuzzle/families.hpp"
#include "stdpuzzle/identify.hpp"
#include "stdpuzzle/oeis.hpp"
#include "stdpuzzle/theorems.hpp"
#include "stdpuzzle/verify.hpp"

using namespace stdpuzzle;
namespace fs = std::filesystem;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("stdpuzzle-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("identify: registry matches") {
  auto best = [](const char* s, int n) {
    const auto m = identify(count_dp_prefix(Support::parse(s), n));
    return m.empty() ? std::string("no registry match") : m.front().describe();
  };
  CHECK(best("A2,A3", 6) == "catalan, offset +1");
  CHECK(best("A1,A2,A4,A5", 5) == "lattice_L, offset +1");
  CHECK(best("A1,A3", 6) == "no registry match");
  CHECK(best("A1,A2,A3,A4,A5", 6) == "secant, offset +1");
  CHECK(best("A1,A2", 6) == "even double factorial (2k)!!, offset +0");
  CHECK(best("A1,B1,C1", 8) == "fibonacci, offset +3");

  const auto scaled = identify(count_dp_prefix(Support::parse("A1,A2,A3,B1"), 5));
  REQUIRE(!scaled.empty());
  CHECK(scaled.front().factor == Rational(4, 3));
  CHECK_THROWS_AS(identify(big({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("families: descriptor counts and uniqueness") {
  const auto k1 = family_specs(1);
  const auto k2 = family_specs(2);
  CHECK(k1.size() == 19u * 64 * 2 * 2);
  CHECK(k2.size() == 19u * 19 * 64 * 2);
  CHECK(k1.size() + k2.size() == 51072u);
  CHECK(family_specs(1, true).size() == 20u * 64 * 2 * 2);

  std::set<std::string> seen;
  for (const auto& s : k2) seen.insert(s.descriptor());
  CHECK(seen.size() == k2.size());
  seen.clear();
  for (const auto& s : k1) {
    seen.insert(s.descriptor());
    CHECK(!s.formula_free());
  }
  CHECK(seen.size() == k1.size());
  for (const auto& s : family_specs(1, true)) CHECK(s.formula_free() == (s.x == kUnsolvedRow));
}

TEST_CASE("families: supports and the thm42 family") {
  FamilySpec spec{1, 4, ConverterKind::B, 0b1, false, std::nullopt};
  CHECK(spec.descriptor() == "1:x4:B:{1}:P");
  CHECK(spec.support() == Support::parse("A1,A2,A3,B1"));
  const auto prefix = count_dp_prefix(spec.support(), 6);
  for (int n = 1; n <= 6; ++n) CHECK(prefix[n - 1] == thm42(1, n));

  FamilySpec mirrored{1, 4, ConverterKind::C, 0b110, true, std::nullopt};
  CHECK(mirrored.support() == Support::parse("D1,D2,D3,C2,C3"));
  FamilySpec two{2, 17, ConverterKind::B, 0b1000, false, 17};
  CHECK(two.descriptor() == "2:x17:z17:B:{4}");
  CHECK(two.support() == Support::parse("A2,A3,B4,D5,D6"));
}

TEST_CASE("families: sweep rows and writers") {
  std::vector<FamilySpec> specs;
  for (const auto& s : family_specs(1)) {
    if (s.x == 17 && s.subset < 4) specs.push_back(s);
  }
  REQUIRE(specs.size() == 16);
  std::vector<FamilyRow> rows;
  CHECK(sweep_families(specs, 5, 3, [&](const FamilyRow& r) { rows.push_back(r); }) == 16);
  REQUIRE(rows.size() == 16);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].spec.descriptor() == specs[k].descriptor());
    CHECK(rows[k].prefix == count_dp_prefix(specs[k].support(), 5));
  }
  CHECK(rows[0].matches.front() == "catalan, offset +1");
  // {A2,A3} u {} and F2 of it differ, but B with subset {} equals C with subset {}.
  int duplicates = 0;
  for (const auto& r : rows) duplicates += !r.duplicate_of.empty();
  CHECK(duplicates == 2);

  std::ostringstream json_out, csv_out;
  CHECK(write_families(json_out, specs, 4, 1, OutputFormat::Json) == 16);
  const auto doc = nlohmann::json::parse(json_out.str());
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 16);
  CHECK(doc[0]["prefix"][3] == "42");
  CHECK(write_families(csv_out, specs, 4, 2, OutputFormat::Csv) == 16);
  CHECK(std::ranges::count(csv_out.str(), '\n') == 17);
}

TEST_CASE("oeis: response parsing") {
  const auto a = parse_oeis_response(R"([{"number":108,"name":"Catalan numbers"}])");
  REQUIRE(a);
  REQUIRE(a->size() == 1);
  CHECK((*a)[0].id == "A000108");
  CHECK((*a)[0].name == "Catalan numbers");
  const auto b = parse_oeis_response(R"({"results":[{"number":45,"name":"Fibonacci"},{"number":364,"name":"Secant"}]})");
  REQUIRE(b);
  CHECK(b->size() == 2);
  CHECK((*b)[1].id == "A000364");
  CHECK(parse_oeis_response(R"({"results":null})")->empty());
  CHECK(parse_oeis_response("null")->empty());
  CHECK(!parse_oeis_response("<html>"));
  CHECK(!parse_oeis_response(R"([{"name":"no number"}])"));
}

TEST_CASE("oeis: cache contract and preconditions") {
  const fs::path dir = scratch("oeis");
  const auto terms = big({2, 5, 14, 42, 132});
  CHECK(oeis_query(terms) == "2,5,14,42,132");
  CHECK_THROWS_AS(oeis_lookup({}), std::invalid_argument);
  CHECK_THROWS_AS(oeis_lookup(big({2, 5, 14, 42})), std::invalid_argument);

  OeisOptions offline;
  offline.cache_dir = dir;
  offline.allow_network = false;
  const OeisResult miss = oeis_lookup(terms, offline);
  CHECK(miss.entries.empty());
  CHECK(!miss.from_cache);
  CHECK(!miss.warning.empty());

  {
    std::ofstream f(oeis_cache_file(dir, oeis_query(terms)));
    f << R"j([{"number":108,"name":"Catalan numbers: C(n) = binomial(2n,n)/(n+1)"}])j";
  }
  const OeisResult hit = oeis_lookup(terms, offline);
  CHECK(hit.from_cache);
  CHECK(hit.warning.empty());
  REQUIRE(!hit.entries.empty());
  CHECK(hit.entries[0].id == "A000108");
  CHECK(oeis_cache_file(dir, "1,2,3,4,5") != oeis_cache_file(dir, "1,2,3,4,6"));
  fs::remove_all(dir);
}

TEST_CASE("oeis: network failure degrades to a warning") {
  OeisOptions opt;
  opt.cache_dir = scratch("oeis-net");
  opt.host = "host.invalid";
  opt.timeout_seconds = 2;
  const OeisResult r = oeis_lookup(big({1, 2, 3, 4, 5}), opt);
  CHECK(r.entries.empty());
  CHECK(!r.warning.empty());
  fs::remove_all(opt.cache_dir);
}

TEST_CASE("oeis: default cache dir honours the environment") {
  ::setenv(kOeisCacheEnv, "/tmp/stdpuzzle-env-cache", 1);
  CHECK(default_oeis_cache_dir() == fs::path("/tmp/stdpuzzle-env-cache"));
  ::unsetenv(kOeisCacheEnv);
  CHECK(default_oeis_cache_dir() != fs::path("/tmp/stdpuzzle-env-cache"));
}

TEST_CASE("verify: statuses") {
  const ClaimResult secant = verify_claim("secant", 3);
  CHECK(secant.status == ClaimStatus::Pass);
  CHECK(secant.computed == std::vector<std::string>{"5", "61", "1385"});
  CHECK(verify_claim("eq79", 3).status == ClaimStatus::PaperInconsistency);
  CHECK(verify_claim("eq80", 4).status == ClaimStatus::Pass);
  const ClaimResult t2 = verify_claim("table2", 3);
  CHECK(t2.status == ClaimStatus::Pass);
  CHECK(t2.note == "20 rows checked");
  CHECK(verify_claim("table3.x10", 3).status == ClaimStatus::Skipped);
  CHECK(verify_claim("table3.x9", 3).status == ClaimStatus::PaperInconsistency);
  CHECK(verify_claim("thm44.Q.C5", 3).status == ClaimStatus::PaperInconsistency);
  CHECK(verify_claim("thm42.B1", 3).status == ClaimStatus::Pass);
  CHECK_THROWS_AS(verify_claim("no-such-claim", 3), std::invalid_argument);
  CHECK_THROWS_AS(verify({"secant", "no-such-claim"}, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_claim("secant", 0), std::invalid_argument);

  const auto ids = verify_claim_ids();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  for (const auto& c : formula_claims()) CHECK(std::ranges::find(ids, c.id) != ids.end());
}

TEST_CASE("verify: full report at nmax 3 has no failures and is deterministic") {
  const VerificationReport a = verify({}, 3);
  const VerificationReport b = verify({}, 3);
  CHECK(a.ok());
  CHECK(a.count(ClaimStatus::Fail) == 0);
  CHECK(a.count(ClaimStatus::Skipped) == 1);
  CHECK(a.count(ClaimStatus::PaperInconsistency) == 13);
  REQUIRE(a.claims.size() == b.claims.size());
  for (std::size_t k = 0; k < a.claims.size(); ++k) {
    CHECK(a.claims[k].id == b.claims[k].id);
    CHECK(a.claims[k].status == b.claims[k].status);
    CHECK(a.claims[k].computed == b.claims[k].computed);
  }
  for (const auto& c : a.claims) {
    if (c.status == ClaimStatus::Fail || c.status == ClaimStatus::PaperInconsistency) {
      CHECK(!c.computed.empty());
      CHECK(!c.expected.empty());
    }
  }
}
