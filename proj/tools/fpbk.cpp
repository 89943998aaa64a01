// Command-line front end for the flat plumbing basket toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "fpb/atlas.hpp"
#include "fpb/bounds.hpp"
#include "fpb/homfly.hpp"
#include "fpb/search.hpp"
#include "fpb/surface.hpp"

using namespace fpb;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string atlas_path = default_atlas_path();
  std::uint64_t budget = kDefaultSkeinBudget;
  std::string shards;
  bool json = false;
  std::uint64_t seed = 1;
};

void emit(const Globals& g, const ojson& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump() << '\n';
  else
    std::cout << text;
}

ojson ident_json(const Identification& id) {
  auto arr = ojson::array();
  for (const auto& c : id.candidates) arr.push_back({{"name", c.name}, {"chirality", to_string(c.chirality)}});
  return {{"candidates", arr}, {"ambiguous", id.ambiguous}};
}

std::string ident_text(const Identification& id) {
  if (id.candidates.empty()) return "not in atlas";
  std::string s;
  for (const auto& c : id.candidates) s += (s.empty() ? "" : ", ") + c.name + " (" + to_string(c.chirality) + ")";
  if (id.ambiguous) s += " [ambiguous]";
  return s;
}

int cmd_code(const Globals& g, const std::string& word) {
  FlatBasketCode code = [&] {
    try {
      return parse_code(word);
    } catch (const CodeError& e) {
      throw UsageError(e.what());
    }
  }();
  const Atlas atlas = load_atlas(g.atlas_path);
  const CodeAnalysis a = analyze_code(code, atlas, g.budget);
  const SurfaceStats st = surface_stats(code);
  const LegendrianData leg = legendrian_invariants(code);
  const int shortcuts = count_shortcuts(code);

  ojson j;
  j["code"] = ojson::parse(code.to_json());
  j["canonical"] = canonical_form(code).word();
  j["components"] = a.components;
  j["surface"] = {{"b1", st.b1}, {"components", st.components}, {"genus", st.genus}};
  j["legendrian"] = {{"tb", leg.tb}, {"rot", leg.rot}, {"sl", leg.sl}};
  j["shortcuts"] = shortcuts;
  j["interleaving_pairs"] = interleaving_pairs(code).size();
  j["alexander"] = a.alexander.poly.to_compact();
  j["determinant"] = a.signature.determinant;
  j["signature"] = a.signature.signature;
  std::ostringstream t;
  t << "code " << code.to_string() << " (canonical " << canonical_form(code).to_string() << ")\n"
    << "bands " << st.b1 << ", components " << a.components << ", surface genus " << st.genus << "\n"
    << "tb " << leg.tb << ", rot " << leg.rot << ", sl " << leg.sl << "\n"
    << "shortcuts " << shortcuts << "\n"
    << "interleaving pairs " << interleaving_pairs(code).size() << "\n"
    << "alexander " << (a.alexander.poly.is_zero() ? "0" : a.alexander.poly.to_string()) << "\n"
    << "determinant " << a.signature.determinant << ", signature " << a.signature.signature << "\n";
  int status = kExitOk;
  if (a.homfly) {
    const VDegrees d = v_degrees(*a.homfly);
    j["homfly"] = ojson::parse(a.homfly->to_json());
    j["v_degrees"] = {{"max", d.max_v}, {"min", d.min_v}, {"breadth", d.breadth}};
    t << "homfly " << a.homfly->to_string() << "\n"
      << "v-degrees max " << d.max_v << " min " << d.min_v << " breadth " << d.breadth << "\n";
  } else {
    j["homfly"] = nullptr;
    j["budget_exhausted"] = *a.budget_exhausted;
    t << "homfly: budget exhausted after " << *a.budget_exhausted << " nodes\n";
    status = kExitCompute;
  }
  j["identification"] = ident_json(a.identification);
  t << "identified " << ident_text(a.identification) << "\n";
  emit(g, j, t.str());
  return status;
}

std::pair<int, int> parse_pair(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError(std::string("expected p,q for ") + what + ", got '" + s + "'");
  }
}

struct BoundsArgs {
  std::string knot;
  std::optional<int> components, genus, tb, sl, presentation, twist, euler;
  std::string alexander, torus;
  bool nontorus = false, sqp = false;
};

std::string report_text(const FpbkReport& r) {
  std::ostringstream t;
  t << "lower " << r.lower << ", upper " << (r.upper ? std::to_string(*r.upper) : "none")
    << (r.exact ? ", exact" : "") << "\n";
  for (const auto& b : r.bounds) t << "  " << (b.upper ? "upper " : "lower ") << b.name << " " << b.raw << " (" << b.ref << ")\n";
  for (const auto& n : r.notes) t << "  note: " << n << "\n";
  return t.str();
}

int cmd_bounds(const Globals& g, const BoundsArgs& a) {
  BoundInput in;
  std::string title;
  if (!a.knot.empty()) {
    const Atlas atlas = load_atlas(g.atlas_path);
    const KnotRecord* r = atlas.find(a.knot);
    if (!r) throw UsageError("knot '" + a.knot + "' is not in the atlas");
    in = r->table_bound_input();
    title = r->name;
  } else {
    in.components = a.components.value_or(1);
    in.genus = a.genus;
    if (!a.alexander.empty()) {
      try {
        in.alexander = alexander_data(LaurentPoly1::from_compact(a.alexander));
      } catch (const PolyError& e) {
        throw UsageError(e.what());
      }
    }
    in.neg_tb_max = a.tb;
    in.neg_sl_max = a.sl;
    in.presentation_bands = a.presentation;
    in.twist = a.twist;
    in.euler_char = a.euler;
    if (a.sqp) in.sqp = true;
    if (!a.torus.empty()) {
      in.torus = parse_pair(a.torus, "--torus");
      in.alternating_torus = in.torus->second == 2 || in.torus->first == 2;
    } else if (a.nontorus) {
      in.alternating_torus = false;
    }
    title = "input";
  }
  const FpbkReport r = combine_bounds(in);
  ojson j = ojson::parse(r.to_json());
  emit(g, j, title + ": " + report_text(r));
  return kExitOk;
}

int cmd_torus(const Globals& g, int p, int q) {
  if (p < 2 || q < 2) throw UsageError("torus needs p, q >= 2");
  const int v = torus_fpbk(p, q);
  ojson j{{"p", std::max(p, q)}, {"q", std::min(p, q)}, {"fpbk", v}, {"ref", "torus closed form"}};
  emit(g, j, "fpbk(T(" + std::to_string(std::max(p, q)) + "," + std::to_string(std::min(p, q)) + ")) = " +
                 std::to_string(v) + "\n");
  return kExitOk;
}

int cmd_twist(const Globals& g, int m) {
  if (m < 1) throw UsageError("twist needs m >= 1");
  const TwistValue t = twist_knot_fpbk(m);
  ojson j{{"m", m}, {"fpbk", t.value}, {"self_linking_lower", t.lower}, {"ref", "twist knot values"}};
  emit(g, j, "fpbk(K_" + std::to_string(m) + ") = " + std::to_string(t.value) + " (self-linking lower bound " +
                 std::to_string(t.lower) + ")\n");
  return kExitOk;
}

std::pair<int, int> parse_shards(const std::string& s) {
  if (s.empty()) return {0, 1};
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      const int m = std::stoi(s);
      if (m < 1) throw std::invalid_argument("");
      return {-1, m};  // all shards, merged
    }
    const int k = std::stoi(s.substr(0, slash)), m = std::stoi(s.substr(slash + 1));
    if (m < 1 || k < 0 || k >= m) throw std::invalid_argument("");
    return {k, m};
  } catch (const std::exception&) {
    throw UsageError("--shards expects K/M with 0 <= K < M, or M");
  }
}

int cmd_search(const Globals& g, int bands, const std::string& target, bool all_components) {
  if (bands < 1 || bands > kDefaultMaxBands) throw UsageError("--bands must be in 1.." + std::to_string(kDefaultMaxBands));
  const Atlas atlas = load_atlas(g.atlas_path);
  if (!target.empty() && !atlas.find(target) && target != kUnknotName)
    throw UsageError("target '" + target + "' is not in the atlas");
  SearchOptions o;
  o.skein_budget = g.budget;
  if (!target.empty()) o.target = target;
  if (all_components) o.components.reset();
  const auto [k, m] = parse_shards(g.shards);
  o.shard_count = m;
  std::vector<SearchReport> parts;
  for (int i = 0; i < m; ++i) {
    if (k >= 0 && i != k) continue;
    o.shard_index = i;
    parts.push_back(run_search(bands, atlas, o));
  }
  const SearchReport r = merge_reports(parts);
  std::ostringstream t;
  t << "bands " << r.n << ": " << r.codes_scanned << " codes, " << r.homfly_runs << " HOMFLYPT runs, "
    << r.budget_failures << " budget failures\n";
  for (const auto& [name, f] : r.findings)
    t << "  " << name << " (" << to_string(f.chirality) << ") " << f.code.to_string() << "\n";
  for (const auto& [key, fp] : r.unidentified)
    t << "  unidentified: components " << fp.components << ", alexander " << fp.alexander.to_compact() << ", det "
      << fp.determinant << ", " << fp.count << " codes, first " << fp.first_code.to_string() << "\n";
  for (const auto& c : r.contradictions) t << "  CONTRADICTION " << c << "\n";
  emit(g, ojson::parse(r.to_json()), t.str());
  return r.budget_failures > 0 || !r.contradictions.empty() ? kExitCompute : kExitOk;
}

int cmd_table(const Globals& g, int max_crossings, int max_bands) {
  const Atlas atlas = load_atlas(g.atlas_path);
  TableOptions o;
  o.max_crossings = max_crossings;
  o.max_bands = max_bands;
  o.skein_budget = g.budget;
  const auto rows = reproduce_table(atlas, o);
  auto arr = ojson::array();
  std::ostringstream t;
  int contradictions = 0;
  for (const auto& r : rows) {
    arr.push_back({{"name", r.name},
                   {"lower", r.lower},
                   {"upper", r.upper ? ojson(*r.upper) : ojson(nullptr)},
                   {"upper_source", r.upper_source},
                   {"table", {r.table_lo, r.table_hi}},
                   {"status", r.status}});
    t << r.name << "\t" << r.lower << "\t" << (r.upper ? std::to_string(*r.upper) : "-") << "\ttable "
      << r.table_lo << (r.table_lo == r.table_hi ? "" : "--" + std::to_string(r.table_hi)) << "\t" << r.status
      << "\n";
    if (r.status == "contradiction") ++contradictions;
  }
  emit(g, ojson{{"rows", arr}}, t.str());
  return contradictions ? kExitCompute : kExitOk;
}

int cmd_verify(const Globals& g, const std::string& suite, std::uint64_t samples, int exhaustive_max) {
  PropertyOptions o;
  o.sample_size = samples;
  o.seed = g.seed;
  o.exhaustive_max = exhaustive_max;
  PropertyReport r;
  try {
    r = verify_properties(suite, o);
  } catch (const std::invalid_argument& e) {
    std::string names;
    for (const auto& s : property_suites()) names += " " + s;
    throw UsageError(std::string(e.what()) + "; suites:" + names);
  }
  std::ostringstream t;
  t << suite << ": " << r.checked << " checks, " << r.failures << " failures (seed " << r.seed << ")\n";
  for (const auto& n : r.notes) t << "  " << n << "\n";
  for (const auto& f : r.failure_examples) t << "  FAIL " << f << "\n";
  emit(g, ojson::parse(r.to_json()), t.str());
  return r.ok() ? kExitOk : kExitCompute;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flat plumbing basket toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--atlas", g.atlas_path, "knot table TSV")->check(CLI::ExistingFile);
  app.add_option("--budget", g.budget, "skein node budget")->check(CLI::PositiveNumber);
  app.add_option("--shards", g.shards, "K/M: run shard K of M; M: run all M shards and merge");
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--seed", g.seed, "sampling seed");

  std::string word;
  auto* code = app.add_subcommand("code", "analyze a flat basket code");
  code->add_option("word", word, "e.g. 1,2,3,4,1,2,3,4")->required();

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "fpbk bounds for an atlas knot or explicit inputs");
  bounds->add_option("knot", ba.knot, "atlas name, e.g. 9_45");
  bounds->add_option("--components", ba.components);
  bounds->add_option("--genus", ba.genus);
  bounds->add_option("--alexander", ba.alexander, "offset:coeffs");
  bounds->add_option("--tb", ba.tb, "max of -tb over the knot and its mirror");
  bounds->add_option("--sl", ba.sl, "max of -sl over the knot and its mirror");
  bounds->add_option("--presentation", ba.presentation, "bands of a known presentation");
  bounds->add_option("--torus", ba.torus, "p,q");
  bounds->add_option("--twist", ba.twist, "twist index m");
  bounds->add_option("--euler", ba.euler, "Euler characteristic (with --sqp)");
  bounds->add_flag("--nontorus", ba.nontorus, "assert the link is not an alternating torus link");
  bounds->add_flag("--sqp", ba.sqp, "strongly quasipositive");

  int p = 0, q = 0;
  auto* torus = app.add_subcommand("torus", "closed-form fpbk of T(p,q)");
  torus->add_option("p", p)->required();
  torus->add_option("q", q)->required();

  int m = 0;
  auto* twist = app.add_subcommand("twist", "fpbk of the m-twist knot");
  twist->add_option("m", m)->required();

  int search_bands = 0;
  std::string target;
  bool all_components = false;
  auto* search = app.add_subcommand("search", "enumerate codes and identify boundaries");
  search->add_option("--bands", search_bands)->required();
  search->add_option("--target", target, "stop after finding this knot");
  search->add_flag("--all-components", all_components, "do not restrict to knots");

  int max_crossings = 9, max_bands = 0;
  auto* table = app.add_subcommand("table", "compare bounds and searches with the tabulated values");
  table->add_option("--max-crossings", max_crossings);
  table->add_option("--max-bands", max_bands, "search up to this many bands (0: none)");

  std::string suite;
  std::uint64_t samples = 500;
  int exhaustive_max = 0;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--samples", samples);
  verify->add_option("--exhaustive-max", exhaustive_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*code) return cmd_code(g, word);
    if (*bounds) return cmd_bounds(g, ba);
    if (*torus) return cmd_torus(g, p, q);
    if (*twist) return cmd_twist(g, m);
    if (*search) return cmd_search(g, search_bands, target, all_components);
    if (*table) return cmd_table(g, max_crossings, max_bands);
    if (*verify) return cmd_verify(g, suite, samples, exhaustive_max);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitUsage;
}
