#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stdpuzzle/counting.hpp"
#include "stdpuzzle/families.hpp"
#include "stdpuzzle/identify.hpp"
#include "stdpuzzle/oeis.hpp"
#include "stdpuzzle/pieces.hpp"
#include "stdpuzzle/sequences.hpp"
#include "stdpuzzle/skeleton.hpp"
#include "stdpuzzle/theorems.hpp"
#include "stdpuzzle/transforms.hpp"
#include "stdpuzzle/verify.hpp"

using namespace stdpuzzle;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "json";
  int threads = 1;
  std::string cache_dir;
  bool oeis = false;
  std::optional<int> nmax;
};

// One result, renderable as JSON or as a CSV table.
struct Output {
  Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print(const Output& out, const Globals& g) {
  if (g.format == "csv") {
    auto line = [](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_field(cells[i]);
      std::cout << s << '\n';
    };
    line(out.header);
    for (const auto& r : out.rows) line(r);
  } else {
    std::cout << out.json.dump(2) << '\n';
  }
}

std::string dec(const BigInt& v) { return v.get_str(); }

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

Json piece_json(PieceId id) {
  const auto& p = piece(id);
  return Json{{"code", p.code()}, {"han", std::string(1, p.han_letter)}, {"class", std::string(1, class_letter(p.cls))},
              {"grid", p.grid}};
}

int need_nmax(const Globals& g, int fallback) { return g.nmax.value_or(fallback); }

// ---------------------------------------------------------------------------

Output cmd_pieces() {
  Output out;
  out.json = Json::array();
  out.header = {"code", "han", "class", "tl", "tr", "bl", "br"};
  for (PieceId id = 0; id < kPieceCount; ++id) {
    const auto& p = piece(id);
    out.json.push_back(piece_json(id));
    out.rows.push_back({p.code(), std::string(1, p.han_letter), std::string(1, class_letter(p.cls)), std::to_string(p.grid[0]),
                        std::to_string(p.grid[1]), std::to_string(p.grid[2]), std::to_string(p.grid[3])});
  }
  return out;
}

Output cmd_reduce(const std::string& window, const std::string& puzzle_text) {
  Output out;
  if (!window.empty()) {
    std::istringstream in(window);
    Grid g{};
    for (auto& v : g) {
      if (!(in >> v)) throw std::invalid_argument("--window needs four integers: TL TR BL BR");
    }
    const PieceId id = reduce(g);
    out.json = Json{{"window", g}, {"piece", piece(id).code()}};
    out.header = {"window", "piece"};
    out.rows.push_back({window, piece(id).code()});
    return out;
  }
  if (puzzle_text.empty()) throw std::invalid_argument("reduce needs --window or --puzzle");
  const Puzzle p = Puzzle::parse(puzzle_text);
  std::vector<std::string> codes;
  for (PieceId id : pieces_of(p)) codes.push_back(piece(id).code());
  out.json = Json{{"puzzle", p.to_string()}, {"pieces", codes}, {"minimal_support", minimal_support(p).to_string()}};
  out.header = {"window", "piece"};
  for (std::size_t k = 0; k < codes.size(); ++k) out.rows.push_back({std::to_string(k), codes[k]});
  return out;
}

Output cmd_transform(const std::string& map, const std::string& support_text, std::optional<int> n) {
  const SupportMap f = parse_support_map(map);
  const Support s = Support::parse(support_text);
  const Support image = apply(f, s);
  Output out;
  out.json = Json{{"map", "f" + std::to_string(static_cast<int>(f))}, {"support", s.to_string()}, {"image", image.to_string()}};
  out.header = {"map", "support", "image"};
  out.rows.push_back({"f" + std::to_string(static_cast<int>(f)), s.to_string(), image.to_string()});
  if (n) {
    const BigInt before = count_dp(s, *n), after = count_dp(image, *n);
    out.json["n"] = *n;
    out.json["count"] = dec(before);
    out.json["image_count"] = dec(after);
    out.json["invariant"] = before == after;
    out.header.insert(out.header.end(), {"n", "count", "image_count"});
    out.rows.back().insert(out.rows.back().end(), {std::to_string(*n), dec(before), dec(after)});
  }
  return out;
}

Json edges_json(const SkeletonGraph& g) {
  Json e = Json::array();
  for (auto [u, v] : g.edges()) e.push_back(g.names()[u] + "->" + g.names()[v]);
  return e;
}

Output cmd_skeleton(const std::string& support_text, const std::string& edges, int n, const std::string& dot_path) {
  Output out;
  SkeletonGraph graph;
  if (!edges.empty()) {
    const SkeletonGraph basic = parse_basic(edges);
    const auto cls = classify(basic);
    const Support s = simple_piece(basic);
    out.json = Json{{"edges", edges_json(basic)}, {"class", cls ? Json(*cls) : Json(nullptr)}, {"support", s.to_string()}};
    out.header = {"edges", "class", "support"};
    out.rows.push_back({join(edges_json(basic).get<std::vector<std::string>>(), ";"), cls ? std::to_string(*cls) : "", s.to_string()});
    graph = basic;
  } else {
    const Support s = Support::parse(support_text);
    const auto basic = generating_skeleton(s);
    if (!basic) throw std::invalid_argument("no generating basic skeleton for " + s.to_string());
    graph = puzzle_skeleton(s, n);
    const bool small = graph.size() <= kLinearExtensionMaxVertices;
    const std::string ext = small ? dec(count_linear_extensions(graph)) : "";
    out.json = Json{{"support", s.to_string()},
                    {"basic_edges", edges_json(*basic)},
                    {"class", classify(*basic) ? Json(*classify(*basic)) : Json(nullptr)},
                    {"n", n},
                    {"vertices", graph.names()},
                    {"edges", edges_json(graph)},
                    {"linear_extensions", small ? Json(ext) : Json(nullptr)}};
    out.header = {"support", "n", "vertices", "edges", "linear_extensions"};
    out.rows.push_back({s.to_string(), std::to_string(n), std::to_string(graph.size()), std::to_string(graph.edges().size()), ext});
  }
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    if (!f || !(f << export_dot(graph))) throw IoError("cannot write " + dot_path);
    out.json["dot"] = dot_path;
  }
  return out;
}

Output cmd_count(const std::string& support_text, int n, const std::string& engine, const std::string& corner) {
  const Support s = Support::parse(support_text);
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  BigInt value;
  if (!corner.empty()) {
    const auto eq = corner.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--corner takes bottom=x or top=x");
    const std::string side = corner.substr(0, eq);
    const int x = std::stoi(corner.substr(eq + 1));
    if (side == "bottom") {
      value = count_corner_bottom(s, n, x);
    } else if (side == "top") {
      value = count_corner_top(s, n, x);
    } else {
      throw std::invalid_argument("--corner side must be bottom or top");
    }
  } else {
    value = engine == "brute" ? count_bruteforce(s, n) : count_dp(s, n);
  }
  Output out;
  out.json = Json{{"support", s.to_string()}, {"n", n}, {"engine", corner.empty() ? engine : "dp"}, {"count", dec(value)}};
  if (!corner.empty()) out.json["corner"] = corner;
  out.header = {"support", "n", "engine", "count"};
  out.rows.push_back({s.to_string(), std::to_string(n), corner.empty() ? engine : "dp", dec(value)});
  return out;
}

Output cmd_enumerate(const std::string& support_text, int n) {
  const Support s = Support::parse(support_text);
  const auto puzzles = enumerate_puzzles(s, n);
  Output out;
  Json list = Json::array();
  out.header = {"top", "bottom"};
  for (const auto& p : puzzles) {
    std::vector<int> top(p.top().begin(), p.top().end()), bottom(p.bottom().begin(), p.bottom().end());
    list.push_back(Json{{"top", top}, {"bottom", bottom}});
    std::vector<std::string> t, b;
    for (int v : top) t.push_back(std::to_string(v));
    for (int v : bottom) b.push_back(std::to_string(v));
    out.rows.push_back({join(t), join(b)});
  }
  out.json = Json{{"support", s.to_string()}, {"n", n}, {"count", std::to_string(puzzles.size())}, {"puzzles", list}};
  return out;
}

const std::map<std::string, std::pair<int, std::function<BigInt(int)>>>& named_sequences() {
  static const std::map<std::string, std::pair<int, std::function<BigInt(int)>>> m = {
      {"catalan", {0, [](int k) { return catalan(k); }}},
      {"secant", {0, [](int k) { return secant(k); }}},
      {"fibonacci", {0, [](int k) { return fibonacci(k); }}},
      {"factorial", {0, [](int k) { return factorial(k); }}},
      {"double-factorial", {0, [](int k) { return double_factorial(k); }}},
      {"lattice", {1, [](int k) { return lattice_L(k); }}},
      {"whirlpool", {1, [](int k) { return whirlpool_W_by_signature(k); }}},
      {"pairs", {0, [](int k) { return multinomial_all_pairs(k); }}},
  };
  return m;
}

Output cmd_seq(const std::string& name, int upto) {
  const auto it = named_sequences().find(name);
  if (it == named_sequences().end()) {
    std::string known;
    for (const auto& [k, v] : named_sequences()) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown sequence '" + name + "' (known: " + known + ")");
  }
  const auto& [first, term] = it->second;
  Output out;
  out.header = {"k", "value"};
  std::vector<std::string> values;
  for (int k = first; k <= upto; ++k) {
    values.push_back(dec(term(k)));
    out.rows.push_back({std::to_string(k), values.back()});
  }
  out.json = Json{{"name", name}, {"from", first}, {"values", values}};
  return out;
}

Output cmd_theorem(const std::string& id, int i, int n, const std::string& base) {
  Output out;
  std::string value, printed;
  Support support;
  if (id.find('.') != std::string::npos) {
    const auto& c = formula_claim(id);
    if (n < c.min_n) throw std::invalid_argument(id + " needs n >= " + std::to_string(c.min_n));
    value = dec(c.engine(n));
    printed = c.printed(n).get_str();
    support = c.support;
    out.json = Json{{"id", id}, {"statement", c.statement}, {"n", n}, {"value", value}, {"printed", printed}};
  } else {
    auto conv = [&](PieceClass cls, Support b) { return b | Support::of({piece_id(cls, i)}); };
    BigInt v;
    if (id == "thm42") {
      v = thm42(i, n), support = conv(PieceClass::B, base_support(Base::P));
    } else if (id == "thm43") {
      v = thm43(i, n), support = conv(PieceClass::B, base_support(Base::Q));
    } else if (id == "thm44") {
      const Base b = base == "Q" ? Base::Q : Base::P;
      v = thm44(b, i, n), support = conv(PieceClass::C, base_support(b));
    } else if (id == "thm46") {
      v = thm46(i, n), support = conv(PieceClass::B, family_support(ConverterFamily::A2A3));
    } else if (id == "thm47") {
      v = thm47(i, n), support = conv(PieceClass::B, family_support(ConverterFamily::A2));
    } else if (id == "thm48") {
      v = thm48(i, n), support = conv(PieceClass::B, family_support(ConverterFamily::A1toA5));
    } else if (id == "table2") {
      v = simple_piece_count(i, n), support = simple_piece_row(i).support;
    } else {
      throw std::invalid_argument("unknown theorem id '" + id + "'");
    }
    value = dec(v);
    out.json = Json{{"id", id}, {"i", i}, {"n", n}, {"support", support.to_string()}, {"value", value}};
  }
  std::string count;
  if (!support.empty()) {
    count = dec(count_dp(support, n));
    out.json["count"] = count;
  }
  out.header = {"id", "i", "n", "value", "count"};
  out.rows.push_back({id, std::to_string(i), std::to_string(n), value, count});
  return out;
}

Output cmd_compose(int x, int y, int z, int n, const std::string& kind_text, bool check, bool& mismatch) {
  const ConverterKind kind = kind_text == "C" ? ConverterKind::C : ConverterKind::B;
  const BigInt v = compose(x, y, z, n, kind);
  const Support s = assembled_support(x, y, z, kind);
  Output out;
  out.json = Json{{"x", x}, {"y", y}, {"z", z}, {"n", n}, {"kind", kind_text}, {"support", s.to_string()}, {"value", dec(v)}};
  out.header = {"x", "y", "z", "n", "kind", "value", "count"};
  std::string count;
  if (check) {
    const BigInt c = count_dp(s, n);
    count = dec(c);
    out.json["count"] = count;
    out.json["match"] = c == v;
    mismatch = c != v;
  }
  out.rows.push_back({std::to_string(x), std::to_string(y), std::to_string(z), std::to_string(n), kind_text, dec(v), count});
  return out;
}

Output cmd_verify(const std::vector<std::string>& claims, const std::string& scope, int nmax, bool& failed) {
  std::vector<std::string> ids = claims;
  if (ids.empty() && scope != "all") {
    std::stringstream ss(scope);
    for (std::string t; std::getline(ss, t, ',');) {
      if (!t.empty()) ids.push_back(t);
    }
  }
  const VerificationReport report = verify(ids, nmax);
  failed = !report.ok();
  Output out;
  Json list = Json::array();
  out.header = {"id", "location", "n_min", "n_max", "status", "computed", "expected", "note"};
  for (const auto& c : report.claims) {
    list.push_back(Json{{"id", c.id},
                        {"location", c.location},
                        {"n_range", {c.n_min, c.n_max}},
                        {"status", to_string(c.status)},
                        {"computed", c.computed},
                        {"expected", c.expected},
                        {"note", c.note}});
    out.rows.push_back({c.id, c.location, std::to_string(c.n_min), std::to_string(c.n_max), to_string(c.status), join(c.computed),
                        join(c.expected), c.note});
  }
  Json summary;
  for (auto s : {ClaimStatus::Pass, ClaimStatus::Fail, ClaimStatus::Skipped, ClaimStatus::PaperInconsistency}) {
    summary[to_string(s)] = report.count(s);
  }
  out.json = Json{{"nmax", nmax}, {"claims", list}, {"summary", summary}};
  return out;
}

Output cmd_identify(const std::string& support_text, int nmax, const Globals& g) {
  const Support s = Support::parse(support_text);
  if (nmax < kIdentifyMinTerms) throw std::invalid_argument("identify needs --nmax >= " + std::to_string(kIdentifyMinTerms));
  const auto prefix = count_dp_prefix(s, nmax);
  std::vector<std::string> terms;
  for (const auto& v : prefix) terms.push_back(dec(v));
  Output out;
  Json matches = Json::array();
  out.header = {"source", "match", "oeis"};
  for (const auto& m : identify(prefix)) {
    matches.push_back(Json{{"match", m.describe()}, {"name", m.name}, {"oeis", m.oeis}, {"offset", m.offset}, {"factor", m.factor.get_str()}});
    out.rows.push_back({"registry", m.describe(), m.oeis});
  }
  out.json = Json{{"support", s.to_string()}, {"prefix", terms}, {"registry", matches}};
  if (matches.empty()) out.json["result"] = "no registry match";
  if (g.oeis) {
    OeisOptions opt;
    if (!g.cache_dir.empty()) opt.cache_dir = g.cache_dir;
    Json cands = Json::array();
    std::string warning;
    try {
      const OeisResult r = oeis_lookup(prefix, opt);
      warning = r.warning;
      for (const auto& e : r.entries) {
        cands.push_back(Json{{"id", e.id}, {"name", e.name}, {"label", "candidate match"}});
        out.rows.push_back({"oeis", e.name, e.id});
      }
      out.json["oeis_cached"] = r.from_cache;
    } catch (const std::invalid_argument& e) {
      warning = e.what();
    }
    out.json["oeis"] = cands;
    if (!warning.empty()) {
      out.json["warning"] = warning;
      std::cerr << "warning: " << warning << '\n';
    }
  }
  return out;
}

int cmd_families(int kind, int nmax, const std::string& path, bool include_unsolved, const Globals& g) {
  const auto specs = family_specs(kind, include_unsolved);
  const OutputFormat format = g.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  std::size_t rows = 0;
  if (path.empty() || path == "-") {
    rows = write_families(std::cout, specs, nmax, g.threads, format);
  } else {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path);
    rows = write_families(f, specs, nmax, g.threads, format);
    f.flush();
    if (!f) throw IoError("write failed for " + path);
  }
  std::cerr << rows << " family descriptors\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting standard puzzles"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "OEIS cache directory");
  app.add_flag("--oeis", g.oeis, "Query OEIS (cached) during identification");
  app.add_option("--nmax", g.nmax, "Largest n")->check(CLI::PositiveNumber);

  std::string support, window, puzzle_text, map, edges, dot, engine = "dp", corner, name, id, base = "P", kind_text = "B", scope = "all",
                                                                   output;
  int n = 3, upto = 8, i = 1, x = 1, y = 1, z = 1, kind = 1;
  std::optional<int> tn;
  bool check = false, include_unsolved = false;
  std::vector<std::string> claims;

  auto* pieces = app.add_subcommand("pieces", "List the 24 standard pieces");
  auto* red = app.add_subcommand("reduce", "Reduce a window or every window of a puzzle");
  red->add_option("--window", window, "Four labels TL TR BL BR");
  red->add_option("--puzzle", puzzle_text, "Two rows, e.g. \"3 6 8 7 / 1 2 4 5\"");
  auto* tr = app.add_subcommand("transform", "Apply F1, F2 or F3 to a support");
  tr->add_option("--map", map, "f1 | f2 | f3")->required();
  tr->add_option("--support", support, "Support, e.g. A1,A2,A3")->required();
  tr->add_option("--n", tn, "Also compare counts at this n");
  auto* sk = app.add_subcommand("skeleton", "Skeleton of a simple support, or the piece of a basic skeleton");
  sk->add_option("--support", support, "Simple support");
  sk->add_option("--edges", edges, "Basic skeleton edges, e.g. b>a,b>c,d>c");
  sk->add_option("--n", n, "Number of pieces");
  sk->add_option("--dot", dot, "Write DOT to this file");
  auto* cnt = app.add_subcommand("count", "Count puzzles of a support");
  cnt->add_option("--support", support, "Support")->required();
  cnt->add_option("--n", n, "Number of pieces")->required();
  cnt->add_option("--engine", engine, "dp | brute")->check(CLI::IsMember({"dp", "brute"}));
  cnt->add_option("--corner", corner, "bottom=x or top=x");
  auto* en = app.add_subcommand("enumerate", "List puzzles of a support");
  en->add_option("--support", support, "Support")->required();
  en->add_option("--n", n, "Number of pieces")->required();
  auto* sq = app.add_subcommand("seq", "Print a named sequence");
  sq->add_option("--name", name, "Sequence name")->required();
  sq->add_option("--upto", upto, "Last index");
  auto* th = app.add_subcommand("theorem", "Evaluate a closed form");
  th->add_option("--id", id, "thm42 | thm43 | thm44 | thm46 | thm47 | thm48 | table2 | formula id")->required();
  th->add_option("--i", i, "Converter index, or row for table2");
  th->add_option("--n", n, "n")->required();
  th->add_option("--base", base, "P or Q (thm44)")->check(CLI::IsMember({"P", "Q"}));
  auto* co = app.add_subcommand("compose", "Gluing sum over a converter");
  co->add_option("--x", x, "Left simple piece")->required();
  co->add_option("--y", y, "Converter index")->required();
  co->add_option("--z", z, "Right simple piece")->required();
  co->add_option("--n", n, "n")->required();
  co->add_option("--kind", kind_text, "B | C")->check(CLI::IsMember({"B", "C"}));
  co->add_flag("--verify", check, "Compare with the transfer count");
  auto* ve = app.add_subcommand("verify", "Check the catalogued claims");
  ve->add_option("--claim", claims, "Claim id (repeatable)");
  ve->add_option("--scope", scope, "all, or a comma list of claim ids");
  auto* ls = ve->add_flag("--list", "List claim ids");
  auto* id_cmd = app.add_subcommand("identify", "Match a support's sequence against known sequences");
  id_cmd->add_option("--support", support, "Support")->required();
  auto* fa = app.add_subcommand("families", "Sweep converter families");
  fa->add_option("--kind", kind, "1 or 2")->check(CLI::IsMember({1, 2}));
  fa->add_option("--output", output, "Output file (default stdout)");
  fa->add_flag("--include-unsolved", include_unsolved, "Add the formula-free families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*pieces) print(cmd_pieces(), g);
    if (*red) print(cmd_reduce(window, puzzle_text), g);
    if (*tr) print(cmd_transform(map, support, tn), g);
    if (*sk) {
      if (support.empty() == edges.empty()) throw std::invalid_argument("skeleton needs exactly one of --support, --edges");
      print(cmd_skeleton(support, edges, n, dot), g);
    }
    if (*cnt) print(cmd_count(support, n, engine, corner), g);
    if (*en) print(cmd_enumerate(support, n), g);
    if (*sq) print(cmd_seq(name, upto), g);
    if (*th) print(cmd_theorem(id, i, n, base), g);
    if (*co) {
      bool mismatch = false;
      print(cmd_compose(x, y, z, n, kind_text, check, mismatch), g);
      if (mismatch) return kExitVerify;
    }
    if (*ve) {
      if (ls->count()) {
        for (const auto& c : verify_claim_ids()) std::cout << c << '\n';
        return kExitOk;
      }
      bool failed = false;
      print(cmd_verify(claims, scope, need_nmax(g, 3), failed), g);
      if (failed) return kExitVerify;
    }
    if (*id_cmd) print(cmd_identify(support, need_nmax(g, 6), g), g);
    if (*fa) return cmd_families(kind, need_nmax(g, 6), output, include_unsolved, g);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
