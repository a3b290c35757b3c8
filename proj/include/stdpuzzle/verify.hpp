#pragma once

#include <string>
#include <vector>

namespace stdpuzzle {

enum class ClaimStatus { Pass, Fail, Skipped, PaperInconsistency };

std::string to_string(ClaimStatus s);  // "pass", "fail", "skipped", "paper-inconsistency"

struct ClaimResult {
  std::string id;
  std::string location;  // what the claim is about, in words
  int n_min = 1;
  int n_max = 0;
  ClaimStatus status = ClaimStatus::Pass;
  std::vector<std::string> computed;  // decimal values, or "label=value" cells
  std::vector<std::string> expected;
  std::string note;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  int count(ClaimStatus s) const;
  bool ok() const { return count(ClaimStatus::Fail) == 0; }
};

// Every claim id known to verify(), in report order.
std::vector<std::string> verify_claim_ids();

// Runs one claim. Throws std::invalid_argument for an unknown id and for nmax < 1.
ClaimResult verify_claim(const std::string& id, int nmax);

// Runs the listed claims (all of them when `ids` is empty).
VerificationReport verify(const std::vector<std::string>& ids, int nmax);

}  // namespace stdpuzzle
