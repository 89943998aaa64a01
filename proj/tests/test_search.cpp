#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpb/search.hpp"

using namespace fpb;

namespace {

const Atlas& atlas() {
  static const Atlas a = load_atlas(default_atlas_path());
  return a;
}

std::set<std::string> names(const SearchReport& r) {
  std::set<std::string> out;
  for (const auto& [n, f] : r.findings) out.insert(n);
  return out;
}

}  // namespace

TEST_CASE("small band counts") {
  CHECK(names(run_search(2, atlas())) == std::set<std::string>{"0_1"});
  const auto r4 = run_search(4, atlas());
  CHECK(names(r4) == std::set<std::string>{"0_1", "3_1", "4_1"});
  CHECK(r4.findings.at("3_1").code.to_string() == "1,2,3,4,1,2,3,4");
  CHECK(r4.contradictions.empty());
  SearchOptions unfiltered;
  unfiltered.symmetry_filter = false;
  unfiltered.forbid_adjacent_equal = false;
  CHECK(names(run_search(4, atlas(), unfiltered)) == names(r4));
}

TEST_CASE("six bands") {
  const auto r = run_search(6, atlas());
  for (const char* k : {"5_1", "5_2", "6_1", "6_2", "6_3", "8_1", "9_44"}) CHECK_MESSAGE(r.findings.contains(k), k);
  CHECK(r.contradictions.empty());
  CHECK(r.budget_failures == 0);
  for (const auto& [name, f] : r.findings) {
    CHECK(f.code == canonical_form(f.code));
    if (const KnotRecord* rec = atlas().find(name)) CHECK(f.bands >= rec->fpbk_lo);
  }
}

TEST_CASE("sharded search merges to the unsharded result") {
  const auto whole = run_search(6, atlas());
  std::vector<SearchReport> parts;
  for (int k = 0; k < 4; ++k) {
    SearchOptions o;
    o.shard_index = k;
    o.shard_count = 4;
    parts.push_back(run_search(6, atlas(), o));
  }
  const auto merged = merge_reports(parts);
  CHECK(merged.codes_scanned == whole.codes_scanned);
  REQUIRE(names(merged) == names(whole));
  for (const auto& [name, f] : whole.findings) CHECK(merged.findings.at(name).code == f.code);
}

TEST_CASE("targeted search stops at the first hit") {
  SearchOptions o;
  o.target = "5_2";
  const auto r = run_search(6, atlas(), o);
  CHECK(names(r).contains("5_2"));
}

TEST_CASE("negative torus links appear first at m bands") {
  SearchOptions o;
  o.components.reset();
  o.symmetry_filter = false;
  o.forbid_adjacent_equal = false;
  for (int m = 2; m <= 7; ++m) {
    const auto code = torus2_code(m);
    const auto want = homfly(code_to_compact_diagram(code));
    for (int n = 1; n < m; ++n) {
      if ((n - count_components(code)) % 2 == 0) continue;
      bool seen = false;
      EnumerateOptions eo;
      eo.components = count_components(code);
      enumerate_codes(n, eo, [&](const FlatBasketCode& c) {
        seen = homfly(code_to_compact_diagram(c)) == want;
        return !seen;
      });
      CHECK_MESSAGE(!seen, "T(2," << m - 1 << ") at " << n << " bands");
    }
  }
}

TEST_CASE("known codes") {
  for (const auto& k : known_codes()) {
    const auto a = analyze_code(k.code, atlas());
    REQUIRE(a.identification.candidates.size() == 1);
    CHECK(a.identification.candidates[0].name == k.claimed_name);
    CHECK(k.code.bands() == 6);
  }
}

TEST_CASE("table reproduction up to six crossings") {
  TableOptions o;
  o.max_crossings = 6;
  o.max_bands = 6;
  const auto rows = reproduce_table(atlas(), o);
  REQUIRE(rows.size() == 7);
  for (const auto& r : rows) CHECK_MESSAGE(r.status == "match", r.name << " " << r.status);
  o.max_crossings = 9;
  o.max_bands = 0;
  for (const auto& r : reproduce_table(atlas(), o)) {
    CHECK(r.lower == r.table_lo);
    if (r.name == "9_42") CHECK(r.status.find("presentation with 6 bands") != std::string::npos);
    if (r.name == "8_1" || r.name == "9_44") CHECK(r.upper == 6);
  }
}

TEST_CASE("property suites") {
  PropertyOptions o;
  o.sample_size = 60;
  o.seed = 42;
  for (const auto& s : property_suites()) {
    const auto r = verify_properties(s, o);
    CHECK_MESSAGE(r.ok(), s << ": " << r.to_json());
    CHECK(r.checked > 0);
  }
  CHECK_THROWS_AS(verify_properties("nope"), std::invalid_argument);
  // same seed, same report
  CHECK(verify_properties("vdeg-chain", o).to_json() == verify_properties("vdeg-chain", o).to_json());
}

TEST_CASE("random codes are reproducible") {
  std::mt19937_64 a(9), b(9);
  for (int i = 0; i < 20; ++i) CHECK(random_code(6, a) == random_code(6, b));
}
