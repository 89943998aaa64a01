#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpb/code.hpp"
#include "oracles.hpp"

using namespace fpb;

TEST_CASE("parse_code accepts valid words") {
  const auto c = parse_code("1,2,3,4,1,2,3,4");
  CHECK(c.bands() == 4);
  CHECK(c.to_string() == "1,2,3,4,1,2,3,4");
  CHECK(parse_code("1 1").bands() == 1);
  CHECK(parse_code(" 1, 2 ,1 2").word() == std::vector<int>{1, 2, 1, 2});
  CHECK(c.to_json() == R"({"n":4,"word":[1,2,3,4,1,2,3,4]})");
}

TEST_CASE("parse_code names the offending label") {
  try {
    parse_code("1,2,1");
    FAIL("accepted");
  } catch (const CodeError& e) {
    CHECK(std::string(e.what()).find("label 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_code(""), CodeError);
  CHECK_THROWS_AS(parse_code("1,1,3,3"), CodeError);
  CHECK_THROWS_AS(parse_code("1,1,1"), CodeError);
  CHECK_THROWS_AS(parse_code("0,0"), CodeError);
  CHECK_THROWS_AS(parse_code("1,x,1"), CodeError);
}

TEST_CASE("canonical_form picks the least rotation") {
  CHECK(canonical_form(parse_code("2,3,4,1,2,3,4,1")).to_string() == "1,2,3,4,1,2,3,4");
  CHECK(canonical_form(parse_code("1,1")).to_string() == "1,1");
  CHECK(canonical_form(parse_code("2,1,2,1")).to_string() == "1,2,1,2");
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    std::vector<int> w;
    for (int i = 1; i <= 5; ++i) w.insert(w.end(), {i, i});
    std::shuffle(w.begin(), w.end(), rng);
    const auto c = canonical_form(FlatBasketCode(w));
    CHECK(c.word() == oracle::least_rotation(w));
    CHECK(canonical_form(c) == c);
    CHECK(is_canonical(c.word()));
  }
}

TEST_CASE("mirror and reverse-complement") {
  // complement only
  CHECK(mirror_code(parse_code("1,2,1,2")).to_string() == "1,2,1,2");
  CHECK(mirror_code(parse_code("1,2,3,4,1,2,3,4")).to_string() == "1,4,3,2,1,4,3,2");
  // reversal plus complement is a rotation of the trefoil code
  CHECK(reverse_complement_code(parse_code("1,2,3,4,1,2,3,4")).to_string() == "1,2,3,4,1,2,3,4");
  const auto k = parse_code("1,2,4,5,3,6,1,4,6,2,5,3");
  std::vector<int> rev(k.word().rbegin(), k.word().rend());
  for (int& x : rev) x = 7 - x;
  CHECK(reverse_complement_code(k).word() == oracle::least_rotation(rev));
  std::vector<int> comp = k.word();
  for (int& x : comp) x = 7 - x;
  CHECK(mirror_code(k).word() == oracle::least_rotation(comp));
  for (const auto& c : enumerate_codes(4)) {
    CHECK(mirror_code(mirror_code(c)) == c);
    CHECK(reverse_complement_code(reverse_complement_code(c)) == c);
    CHECK(count_components(mirror_code(c)) == count_components(c));
    CHECK(interleaving_pairs(mirror_code(c)).size() == interleaving_pairs(c).size());
  }
}

TEST_CASE("symmetry images") {
  const auto t = parse_code("1,2,3,4,1,2,3,4");
  CHECK(symmetry_images(t, false).size() == 1);
  CHECK(symmetry_images(t, true).size() == 2);
  CHECK(is_symmetry_minimal(t, true));
  CHECK_FALSE(is_symmetry_minimal(parse_code("1,4,3,2,1,4,3,2"), true));
  CHECK(shift_labels(parse_code("1,1,2,2"), 1).to_string() == "1,1,2,2");
}

TEST_CASE("interleaving pairs") {
  CHECK(interleaving_pairs(parse_code("1,1")).empty());
  CHECK(interleaving_pairs(parse_code("1,2,1,2")) == std::set<LabelPair>{{1, 2}});
  CHECK(interleaving_pairs(parse_code("1,2,3,4,1,2,3,4")).size() == 6);
  CHECK(interleaving_pairs(parse_code("1,2,2,1")).empty());
}

TEST_CASE("components") {
  CHECK(count_components(parse_code("1,1")) == 2);
  CHECK(count_components(parse_code("1,2,3,4,1,2,3,4")) == 1);
  CHECK(count_components(parse_code("1,2,1,2")) == 1);
  CHECK(count_components(torus2_code(5)) == 2);
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_codes(n)) {
      CHECK(count_components(c) == oracle::components_by_walk(c.word()));
      CHECK((n - count_components(c)) % 2 != 0);
    }
}

TEST_CASE("shortcuts") {
  CHECK(count_shortcuts(parse_code("1,2,3,4,1,2,3,4")) == 2);
  CHECK(count_shortcuts(parse_code("1,1")) == 0);
  CHECK(count_shortcuts(parse_code("1,2,1,3,2,3")) == 3);
  for (int m = 2; m <= 12; ++m) CHECK(count_shortcuts(torus2_code(m)) == 2);
}

TEST_CASE("legendrian invariants") {
  CHECK(legendrian_invariants(parse_code("1,2,3,4,1,2,3,4")) == LegendrianData{-8, -3, -5});
  CHECK(legendrian_invariants(1) == LegendrianData{-2, 0, -2});
  CHECK(legendrian_invariants(6) == LegendrianData{-12, -5, -7});
  CHECK_THROWS_AS(legendrian_invariants(0), CodeError);
}

TEST_CASE("torus2_code") {
  CHECK(torus2_code(4).to_string() == "1,2,3,4,1,2,3,4");
  CHECK(torus2_code(2).to_string() == "1,2,1,2");
  CHECK_THROWS_AS(torus2_code(1), CodeError);
}

TEST_CASE("enumeration matches brute force") {
  CHECK(enumerate_codes(1).size() == 1);
  const auto two = enumerate_codes(2);
  REQUIRE(two.size() == 2);  // 1,2,2,1 is a rotation of 1,1,2,2
  CHECK(two[0].to_string() == "1,1,2,2");
  CHECK(two[1].to_string() == "1,2,1,2");
  for (int n = 1; n <= 5; ++n) {
    const auto classes = oracle::rotation_classes(n);
    const auto codes = enumerate_codes(n);
    REQUIRE(codes.size() == classes.size());
    std::size_t i = 0;
    for (const auto& w : classes) CHECK(codes[i++].word() == w);  // same lexicographic order
  }
}

TEST_CASE("enumeration filters and shards") {
  EnumerateOptions f;
  f.forbid_adjacent_equal = true;
  f.components = 1;
  std::size_t expect = 0;
  for (const auto& w : oracle::rotation_classes(4))
    if (!has_adjacent_equal(FlatBasketCode(w)) && oracle::components_by_walk(w) == 1) ++expect;
  CHECK(enumerate_codes(4, f).size() == expect);

  EnumerateOptions q;
  q.quotient_mirror = true;
  for (const auto& c : enumerate_codes(4, q)) CHECK(c <= mirror_code(c));

  const auto all = enumerate_codes(5);
  std::vector<FlatBasketCode> merged;
  for (int k = 0; k < 3; ++k) {
    EnumerateOptions s;
    s.shard_index = k;
    s.shard_count = 3;
    const auto part = enumerate_codes(5, s);
    merged.insert(merged.end(), part.begin(), part.end());
  }
  std::sort(merged.begin(), merged.end());
  CHECK(merged == all);

  CHECK_THROWS(enumerate_codes(0));
  CHECK_THROWS(enumerate_codes(9));
}
