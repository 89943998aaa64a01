#include "fpb/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include <json.hpp>

namespace fpb {

namespace {

using ojson = nlohmann::ordered_json;

std::string fingerprint_key(int components, const LaurentPoly1& alexander, std::int64_t det) {
  return std::to_string(components) + "|" + alexander.to_compact() + "|" + std::to_string(det);
}

// Runs the skein computation with a small budget first.
std::optional<LaurentPoly2> budgeted_homfly(const FlatBasketCode& code, std::uint64_t initial,
                                            std::uint64_t budget, std::uint64_t& nodes_used) {
  const LinkDiagram d = code_to_compact_diagram(code);
  const std::uint64_t first = std::min(initial, budget);
  try {
    return homfly(d, first, nodes_used);
  } catch (const BudgetExceeded&) {
    if (first >= budget) return std::nullopt;
  }
  try {
    return homfly(d, budget, nodes_used);
  } catch (const BudgetExceeded& e) {
    nodes_used = e.nodes_used();
    return std::nullopt;
  }
}

class Searcher {
 public:
  Searcher(int n, const Atlas& atlas, const SearchOptions& opt) : atlas_(atlas), opt_(opt) { report_.n = n; }

  bool visit(const FlatBasketCode& code) {
    if (opt_.symmetry_filter && !is_symmetry_minimal(code, true)) return true;
    ++report_.codes_scanned;
    const int comps = count_components(code);
    if (opt_.components && comps != *opt_.components) return true;
    const AlexanderData alex = alexander_from_seifert(seifert_matrix(code));

    const bool unknot_like = comps == 1 && alex.poly == LaurentPoly1::monomial(1, 0);
    std::vector<std::string> names;
    if (unknot_like) names.emplace_back(kUnknotName);
    for (const KnotRecord* r : atlas_.by_alexander(comps, alex.poly)) names.push_back(r->name);
    if (names.empty()) {
      note_unidentified(code, comps, alex);
      return true;
    }
    ++report_.alexander_hits;
    if (opt_.target && std::find(names.begin(), names.end(), *opt_.target) == names.end()) return true;
    const bool open = std::any_of(names.begin(), names.end(),
                                  [&](const std::string& nm) { return !report_.findings.contains(nm); });
    if (!open) return true;

    ++report_.homfly_runs;
    std::uint64_t nodes = 0;
    const auto p = budgeted_homfly(code, opt_.initial_budget, opt_.skein_budget, nodes);
    if (!p) {
      ++report_.budget_failures;
      return true;
    }
    const Identification id = atlas_.identify({comps, alex.poly, p, alex.determinant});
    if (id.candidates.empty()) {
      note_unidentified(code, comps, alex);
      return true;
    }
    if (id.ambiguous) {
      ++report_.ambiguous;
      return true;
    }
    const Candidate& c = id.candidates.front();
    if (!report_.findings.contains(c.name)) {
      report_.findings.emplace(c.name, Finding{c.name, code, code.bands(), c.chirality});
      if (const KnotRecord* r = atlas_.find(c.name); r && code.bands() < r->fpbk_lo)
        report_.contradictions.push_back(c.name + " found with " + std::to_string(code.bands()) +
                                         " bands below tabulated lower bound " + std::to_string(r->fpbk_lo) +
                                         " (code " + code.to_string() + ")");
    }
    return !(opt_.target && c.name == *opt_.target);
  }

  SearchReport take() { return std::move(report_); }

 private:
  void note_unidentified(const FlatBasketCode& code, int comps, const AlexanderData& alex) {
    const std::string key = fingerprint_key(comps, alex.poly, alex.determinant);
    auto it = report_.unidentified.find(key);
    if (it == report_.unidentified.end())
      report_.unidentified.emplace(key, Fingerprint{comps, alex.poly, alex.determinant, code, 1});
    else
      ++it->second.count;
  }

  const Atlas& atlas_;
  const SearchOptions& opt_;
  SearchReport report_;
};

}  // namespace

SearchReport run_search(int n, const Atlas& atlas, const SearchOptions& options) {
  EnumerateOptions eo;
  eo.forbid_adjacent_equal = options.forbid_adjacent_equal;
  eo.components = options.components;
  eo.shard_index = options.shard_index;
  eo.shard_count = options.shard_count;
  Searcher s(n, atlas, options);
  enumerate_codes(n, eo, [&](const FlatBasketCode& c) { return s.visit(c); });
  return s.take();
}

SearchReport merge_reports(const std::vector<SearchReport>& shards) {
  SearchReport out;
  if (shards.empty()) return out;
  out.n = shards.front().n;
  for (const auto& r : shards) {
    if (r.n != out.n) throw std::invalid_argument("cannot merge reports for different band counts");
    out.codes_scanned += r.codes_scanned;
    out.alexander_hits += r.alexander_hits;
    out.homfly_runs += r.homfly_runs;
    out.budget_failures += r.budget_failures;
    out.ambiguous += r.ambiguous;
    for (const auto& [name, f] : r.findings) {
      auto it = out.findings.find(name);
      if (it == out.findings.end())
        out.findings.emplace(name, f);
      else if (f.code < it->second.code)
        it->second = f;
    }
    for (const auto& [key, fp] : r.unidentified) {
      auto it = out.unidentified.find(key);
      if (it == out.unidentified.end()) {
        out.unidentified.emplace(key, fp);
      } else {
        it->second.count += fp.count;
        if (fp.first_code < it->second.first_code) it->second.first_code = fp.first_code;
      }
    }
    out.contradictions.insert(out.contradictions.end(), r.contradictions.begin(), r.contradictions.end());
  }
  std::sort(out.contradictions.begin(), out.contradictions.end());
  return out;
}

std::string SearchReport::to_json() const {
  ojson j;
  j["n"] = n;
  j["codes_scanned"] = codes_scanned;
  j["alexander_hits"] = alexander_hits;
  j["homfly_runs"] = homfly_runs;
  j["budget_failures"] = budget_failures;
  j["ambiguous"] = ambiguous;
  auto f = ojson::array();
  for (const auto& [name, x] : findings)
    f.push_back({{"name", name}, {"bands", x.bands}, {"code", x.code.word()}, {"chirality", to_string(x.chirality)}});
  j["findings"] = f;
  auto u = ojson::array();
  for (const auto& [key, fp] : unidentified)
    u.push_back({{"components", fp.components},
                 {"alexander", fp.alexander.to_compact()},
                 {"determinant", fp.determinant},
                 {"first_code", fp.first_code.word()},
                 {"count", fp.count}});
  j["unidentified"] = u;
  j["contradictions"] = contradictions;
  return j.dump();
}

CodeAnalysis analyze_code(const FlatBasketCode& code, const Atlas& atlas, std::uint64_t skein_budget) {
  CodeAnalysis a;
  a.components = count_components(code);
  const SeifertMatrix v = seifert_matrix(code);
  a.alexander = alexander_from_seifert(v);
  a.signature = signature_and_det(v);
  std::uint64_t nodes = 0;
  a.homfly = budgeted_homfly(code, skein_budget, skein_budget, nodes);
  if (!a.homfly) a.budget_exhausted = nodes;
  a.identification = atlas.identify({a.components, a.alexander.poly, a.homfly,
                                     a.alexander.poly.is_zero() ? std::nullopt
                                                                : std::optional<std::int64_t>(a.alexander.determinant)});
  return a;
}

const std::vector<KnownCode>& known_codes() {
  static const std::vector<KnownCode> codes = {
      {"8_1", FlatBasketCode({1, 2, 4, 5, 3, 6, 1, 4, 6, 2, 5, 3})},
      {"9_44", FlatBasketCode({1, 2, 5, 6, 1, 4, 3, 5, 6, 2, 4, 3})},
  };
  return codes;
}

std::vector<TableRow> reproduce_table(const Atlas& atlas, const TableOptions& options) {
  std::map<std::string, std::pair<int, std::string>> best_upper;
  auto offer = [&](const std::string& name, int bands, const std::string& source) {
    auto it = best_upper.find(name);
    if (it == best_upper.end() || bands < it->second.first) best_upper[name] = {bands, source};
  };
  for (const auto& k : known_codes()) {
    const CodeAnalysis a = analyze_code(k.code, atlas, options.skein_budget);
    if (a.identification.candidates.size() == 1)
      offer(a.identification.candidates.front().name, k.code.bands(), "known code " + k.code.to_string());
  }
  for (int n = 2; n <= options.max_bands; n += 2) {
    SearchOptions so;
    so.skein_budget = options.skein_budget;
    const SearchReport r = run_search(n, atlas, so);
    for (const auto& [name, f] : r.findings) offer(name, f.bands, "search code " + f.code.to_string());
  }

  std::vector<TableRow> rows;
  for (const auto& rec : atlas.records()) {
    if (rec.crossings > options.max_crossings) continue;
    BoundInput in = rec.table_bound_input();
    in.presentation_bands.reset();
    const FpbkReport rep = combine_bounds(in);
    TableRow row{rec.name, rep.lower, rep.upper, rep.upper ? "closed form" : "", rec.fpbk_lo, rec.fpbk_hi, ""};
    if (auto it = best_upper.find(rec.name); it != best_upper.end() && (!row.upper || it->second.first < *row.upper)) {
      row.upper = it->second.first;
      row.upper_source = it->second.second;
    }
    if ((row.upper && *row.upper < row.table_lo) || row.lower > row.table_hi)
      row.status = "contradiction";
    else if (row.lower == row.table_lo && row.upper && *row.upper == row.table_hi)
      row.status = "match";
    else if (row.lower > row.table_lo || (row.upper && *row.upper < row.table_hi))
      row.status = "narrower than table (new, unverified)";
    else if (row.lower == row.table_lo)
      row.status = "lower bound met; presentation with " + std::to_string(row.table_hi) + " bands needed";
    else
      row.status = "lower bound short of table";
    rows.push_back(std::move(row));
  }
  return rows;
}

FlatBasketCode random_code(int n, std::mt19937_64& rng) {
  std::vector<int> w;
  for (int i = 1; i <= n; ++i) {
    w.push_back(i);
    w.push_back(i);
  }
  // Fisher-Yates with an explicit draw so results do not depend on the
  // standard library's shuffle.
  for (std::size_t i = w.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(w[i - 1], w[j]);
  }
  return canonical_form(FlatBasketCode(std::move(w)));
}

std::string PropertyReport::to_json() const {
  ojson j;
  j["suite"] = suite;
  j["checked"] = checked;
  j["failures"] = failures;
  j["seed"] = seed;
  j["ok"] = ok();
  j["failure_examples"] = failure_examples;
  if (!notes.empty()) j["notes"] = notes;
  return j.dump();
}

}  // namespace fpb
