#include "stdpuzzle/families.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "stdpuzzle/counting.hpp"
#include "stdpuzzle/identify.hpp"
#include "stdpuzzle/transforms.hpp"

namespace stdpuzzle {

namespace {

std::string subset_text(IndexSet s) {
  std::string out = "{";
  for (int i = 1; i <= 6; ++i) {
    if (!(s >> (i - 1) & 1u)) continue;
    if (out.size() > 1) out += ',';
    out += std::to_string(i);
  }
  return out + "}";
}

std::vector<int> simple_indices(bool include_unsolved) {
  std::vector<int> out;
  for (int x = 1; x <= 20; ++x) {
    if (x != kUnsolvedRow || include_unsolved) out.push_back(x);
  }
  return out;
}

}  // namespace

std::string FamilySpec::descriptor() const {
  std::string out = std::to_string(kind) + ":x" + std::to_string(x);
  if (z) out += ":z" + std::to_string(*z);
  out += converter == ConverterKind::B ? ":B:" : ":C:";
  out += subset_text(subset);
  if (kind == 1) out += mirrored ? ":F2P" : ":P";
  return out;
}

Support FamilySpec::support() const {
  Support s = simple_piece_row(x).support;
  if (mirrored) s = f2(s);
  const PieceClass cls = converter == ConverterKind::B ? PieceClass::B : PieceClass::C;
  for (int i = 1; i <= 6; ++i) {
    if (subset >> (i - 1) & 1u) s.insert(piece_id(cls, i));
  }
  if (z) s = s | f1(f2(simple_piece_row(*z).support));
  return s;
}

bool FamilySpec::formula_free() const { return x == kUnsolvedRow || (z && *z == kUnsolvedRow); }

std::vector<FamilySpec> family_specs(int kind, bool include_unsolved) {
  if (kind != 1 && kind != 2) throw std::invalid_argument("family kind must be 1 or 2");
  const std::vector<int> xs = simple_indices(include_unsolved);
  std::vector<FamilySpec> out;
  for (int x : xs) {
    for (std::optional<int> z : kind == 1 ? std::vector<std::optional<int>>{std::nullopt}
                                          : std::vector<std::optional<int>>(xs.begin(), xs.end())) {
      for (ConverterKind c : {ConverterKind::B, ConverterKind::C}) {
        for (int subset = 0; subset < 64; ++subset) {
          for (bool mirrored : kind == 1 ? std::vector<bool>{false, true} : std::vector<bool>{false}) {
            out.push_back({kind, x, c, static_cast<IndexSet>(subset), mirrored, z});
          }
        }
      }
    }
  }
  return out;
}

std::size_t sweep_families(const std::vector<FamilySpec>& specs, int nmax, int threads,
                           const std::function<void(const FamilyRow&)>& sink) {
  if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
  std::vector<Support> supports;
  std::unordered_map<std::uint32_t, std::size_t> slot;
  std::vector<std::size_t> spec_slot;
  std::vector<std::string> first_descriptor;
  spec_slot.reserve(specs.size());
  for (const auto& spec : specs) {
    const Support s = spec.support();
    auto [it, fresh] = slot.emplace(s.mask(), supports.size());
    if (fresh) {
      supports.push_back(s);
      first_descriptor.push_back(spec.descriptor());
    }
    spec_slot.push_back(it->second);
  }

  std::vector<std::vector<BigInt>> prefixes(supports.size());
  std::vector<std::vector<std::string>> matches(supports.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < supports.size(); i = next++) {
      prefixes[i] = count_dp_prefix(supports[i], nmax);
      if (nmax >= kIdentifyMinTerms) {
        for (const auto& m : identify(prefixes[i])) matches[i].push_back(m.describe());
      }
    }
  };
  const int workers = std::max(1, threads);
  std::vector<std::jthread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  for (std::size_t k = 0; k < specs.size(); ++k) {
    const std::size_t i = spec_slot[k];
    FamilyRow row{specs[k], supports[i], prefixes[i], matches[i], {}};
    if (first_descriptor[i] != specs[k].descriptor()) row.duplicate_of = first_descriptor[i];
    sink(row);
  }
  return specs.size();
}

std::size_t write_families(std::ostream& out, const std::vector<FamilySpec>& specs, int nmax, int threads, OutputFormat format) {
  bool first = true;
  if (format == OutputFormat::Csv) {
    out << "descriptor,kind,x,z,converter,subset,support,formula_free,prefix,match,duplicate_of\n";
  } else {
    out << "[\n";
  }
  const std::size_t rows = sweep_families(specs, nmax, threads, [&](const FamilyRow& r) {
    std::vector<std::string> prefix;
    for (const auto& v : r.prefix) prefix.push_back(v.get_str());
    const std::string match = r.matches.empty() ? "" : r.matches.front();
    if (format == OutputFormat::Csv) {
      std::string joined;
      for (const auto& p : prefix) joined += (joined.empty() ? "" : " ") + p;
      out << r.spec.descriptor() << ',' << r.spec.kind << ',' << r.spec.x << ',' << (r.spec.z ? std::to_string(*r.spec.z) : "")
          << ',' << (r.spec.converter == ConverterKind::B ? 'B' : 'C') << ",\"" << subset_text(r.spec.subset) << "\",\""
          << r.support.to_string() << "\"," << (r.spec.formula_free() ? "true" : "false") << ',' << joined << ",\"" << match
          << "\"," << r.duplicate_of << '\n';
    } else {
      nlohmann::ordered_json j;
      j["descriptor"] = r.spec.descriptor();
      j["kind"] = r.spec.kind;
      j["x"] = r.spec.x;
      j["z"] = r.spec.z ? nlohmann::ordered_json(*r.spec.z) : nlohmann::ordered_json(nullptr);
      j["converter"] = r.spec.converter == ConverterKind::B ? "B" : "C";
      j["subset"] = subset_text(r.spec.subset);
      j["support"] = r.support.to_string();
      j["formula_free"] = r.spec.formula_free();
      j["prefix"] = prefix;
      j["matches"] = r.matches;
      j["duplicate_of"] = r.duplicate_of.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.duplicate_of);
      out << (first ? "" : ",\n") << j.dump();
    }
    first = false;
  });
  if (format == OutputFormat::Json) out << (first ? "]\n" : "\n]\n");
  return rows;
}

}  // namespace stdpuzzle
