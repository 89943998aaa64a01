#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fpb/atlas.hpp"
#include "fpb/homfly.hpp"
#include "oracles.hpp"

using namespace fpb;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out += line + "\n";
  return out;
}

const std::string kRow =
    "3_1\t1\t3\t-1:1,-1,1\t[2,0,2],[2,2,1],[4,0,-1]\t1\t6\t5\t4\t4\talternating;sqp;torus=3,2;twist=1;det=3\n";

}  // namespace

TEST_CASE("bundled atlas loads and round-trips") {
  const Atlas a = load_atlas(default_atlas_path());
  CHECK(a.size() == 84);
  CHECK(a.records().front().name == "3_1");
  CHECK(a.records().back().name == "9_49");
  const KnotRecord* t = a.find("3_1");
  REQUIRE(t);
  CHECK(t->fpbk_lo == 4);
  CHECK(t->fpbk_hi == 4);
  const KnotRecord* k = a.find("9_25");
  REQUIRE(k);
  CHECK(k->fpbk_lo == 8);
  CHECK(k->fpbk_hi == 10);
  CHECK(data_lines(a.serialize()) == data_lines(slurp(default_atlas_path())));
}

TEST_CASE("atlas records are internally consistent") {
  const Atlas a = load_atlas(default_atlas_path());
  for (const auto& r : a.records()) {
    CHECK(parity_round(r.fpbk_lo, r.components) == r.fpbk_lo);
    CHECK(homfly_degree_bound(r.homfly) <= r.fpbk_hi);
    CHECK(sl_bound(r.neg_sl_max) <= r.fpbk_hi);
    CHECK(alexander_equivalent(conway_alexander(r.homfly, r.components), r.alexander));
  }
}

TEST_CASE("stored polynomials match the KnotInfo PD codes") {
  const Atlas a = load_atlas(default_atlas_path());
  for (const auto& [name, pd] : oracle::knotinfo_pd_table(std::string(FPB_DATA_DIR) + "/knot_pd.tsv")) {
    const KnotRecord* r = a.find(name);
    REQUIRE(r);
    CHECK_MESSAGE(homfly(oracle::from_knotinfo_pd(pd)) == r->homfly, name);
  }
}

TEST_CASE("malformed rows are rejected with line numbers") {
  CHECK(parse_atlas(kRow).size() == 1);
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_atlas(text);
      FAIL("accepted: " << text);
    } catch (const AtlasError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
    }
  };
  expect_error("# c\n" + kRow + kRow, "line 3");
  expect_error("3_1\t1\t3\n", "columns");
  std::string bad_parity = kRow;
  bad_parity.replace(bad_parity.find("\t4\t4\t"), 5, "\t5\t5\t");
  expect_error(bad_parity, "parity");
  std::string bad_det = kRow;
  bad_det.replace(bad_det.find("det=3"), 5, "det=5");
  expect_error(bad_det, "determinant");
  std::string bad_flag = kRow;
  bad_flag.replace(bad_flag.find("sqp"), 3, "xyz");
  expect_error(bad_flag, "unknown flag");
  CHECK_THROWS_AS(load_atlas("/nonexistent/knots.tsv"), AtlasError);
}

TEST_CASE("identification") {
  const Atlas a = load_atlas(default_atlas_path());
  const KnotRecord* t = a.find("3_1");
  auto id = a.identify({1, LaurentPoly1(0, {1, -1, 1}), mirror_poly(t->homfly), 3});
  REQUIRE(id.candidates.size() == 1);
  CHECK(id.candidates[0] == Candidate{"3_1", Chirality::kMirror});
  CHECK_FALSE(id.ambiguous);

  id = a.identify({1, LaurentPoly1(0, {1}), LaurentPoly2::constant(1), 1});
  CHECK(id.unknot);
  CHECK(id.candidates[0].name == kUnknotName);

  // 6_1 and 9_46 share an Alexander polynomial
  const KnotRecord* k61 = a.find("6_1");
  id = a.identify({1, k61->alexander, std::nullopt, std::nullopt});
  CHECK(id.ambiguous);
  CHECK(id.candidates.size() == 2);
  id = a.identify({1, k61->alexander, k61->homfly, std::nullopt});
  REQUIRE(id.candidates.size() == 1);
  CHECK(id.candidates[0].name == "6_1");

  const KnotRecord* k41 = a.find("4_1");
  id = a.identify({1, k41->alexander, k41->homfly, std::nullopt});
  CHECK(id.candidates[0].chirality == Chirality::kAmphichiral);

  CHECK(a.identify({2, LaurentPoly1(0, {1, -1}), std::nullopt, std::nullopt}).candidates.empty());
}

TEST_CASE("table rows give bound inputs") {
  const Atlas a = load_atlas(default_atlas_path());
  for (const auto& r : a.records()) {
    const FpbkReport rep = combine_bounds(r.table_bound_input());
    CHECK_MESSAGE(rep.lower == r.fpbk_lo, r.name);
    CHECK_MESSAGE(rep.upper == r.fpbk_hi, r.name);
    CHECK(combine_bounds(r.full_bound_input()).lower == r.fpbk_lo);
  }
}
