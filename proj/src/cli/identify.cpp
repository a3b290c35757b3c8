#include "stdpuzzle/identify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "stdpuzzle/sequences.hpp"

namespace stdpuzzle {

const std::vector<RegistryEntry>& sequence_registry() {
  static const std::vector<RegistryEntry> reg = {
      {"catalan", "A000108", 0, -1, [](int k) { return catalan(k); }},
      {"odd double factorial (2k-1)!!", "A001147", 0, -1, [](int k) { return double_factorial(2L * k - 1); }},
      {"even double factorial (2k)!!", "A000165", 0, -1, [](int k) { return double_factorial(2L * k); }},
      {"secant", "A000364", 0, -1, [](int k) { return secant(k); }},
      {"lattice_L", "A227656", 1, kLatticeMaxN, [](int k) { return lattice_L(k); }},
      {"fibonacci", "A000045", 0, -1, [](int k) { return fibonacci(k); }},
      {"factorial", "A000142", 0, -1, [](int k) { return factorial(k); }},
      {"(2k)!/2^k", "A000680", 0, -1, [](int k) { return multinomial_all_pairs(k); }},
      {"whirlpool W", "A261683", 1, 12, [](int k) { return whirlpool_W_by_signature(k); }},
      {"central binomial", "A000984", 0, -1, [](int k) { return binomial(2L * k, k); }},
      {"powers of 2", "A000079", 0, -1, [](int k) { return BigInt(1) << k; }},
      {"natural numbers", "A000027", 1, -1, [](int k) { return BigInt(k); }},
      {"all ones", "A000012", 0, -1, [](int) { return BigInt(1); }},
  };
  return reg;
}

std::string RegistryMatch::describe() const {
  std::string out = name + ", offset +" + std::to_string(offset);
  if (factor != 1) out += ", factor " + factor.get_str();
  return out;
}

namespace {

// Registry terms are shared by every identification, so they are memoized.
class TermCache {
 public:
  const BigInt& get(std::size_t entry, int k) {
    std::lock_guard lock(mutex_);
    auto& terms = terms_[entry];
    auto it = terms.find(k);
    if (it == terms.end()) it = terms.emplace(k, sequence_registry()[entry].term(k)).first;
    return it->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, std::map<int, BigInt>> terms_;
};

TermCache& term_cache() {
  static TermCache cache;
  return cache;
}

}  // namespace

std::vector<RegistryMatch> identify(const std::vector<BigInt>& prefix) {
  if (static_cast<int>(prefix.size()) < kIdentifyMinTerms) {
    throw std::invalid_argument("identification needs at least " + std::to_string(kIdentifyMinTerms) + " terms");
  }
  const std::vector<Rational> factors = {Rational(1), Rational(2), Rational(4, 3), Rational(3, 2)};
  const int nmax = static_cast<int>(prefix.size());
  const auto& registry = sequence_registry();
  std::vector<RegistryMatch> out;
  for (std::size_t idx = 0; idx < registry.size(); ++idx) {
    const auto& e = registry[idx];
    for (int offset = 0; offset <= 3; ++offset) {
      if (1 + offset < e.first_index) continue;
      if (e.last_index >= 0 && nmax + offset > e.last_index) continue;
      for (const auto& factor : factors) {
        bool ok = true;
        for (int n = 1; n <= nmax && ok; ++n) ok = Rational(prefix[n - 1]) == factor * term_cache().get(idx, n + offset);
        if (ok) out.push_back({e.name, e.oeis, offset, factor});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const RegistryMatch& a, const RegistryMatch& b) {
    const bool ua = a.factor == 1, ub = b.factor == 1;
    if (ua != ub) return ua;
    return a.offset < b.offset;
  });
  return out;
}

}  // namespace stdpuzzle
