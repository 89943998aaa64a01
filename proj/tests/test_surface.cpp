#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpb/homfly.hpp"
#include "fpb/surface.hpp"

using namespace fpb;

namespace {

// Plain integer determinant by cofactor expansion (small n only).
std::int64_t cofactor_det(const std::vector<std::int64_t>& m, int n) {
  if (n == 0) return 1;
  std::int64_t total = 0;
  for (int j = 0; j < n; ++j) {
    std::vector<std::int64_t> minor;
    for (int i = 1; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (k != j) minor.push_back(m[static_cast<std::size_t>(i * n + k)]);
    const std::int64_t term = m[static_cast<std::size_t>(j)] * cofactor_det(minor, n - 1);
    total += j % 2 == 0 ? term : -term;
  }
  return total;
}

}  // namespace

TEST_CASE("Seifert matrix shape") {
  CHECK(seifert_matrix(parse_code("1,1")).entries == std::vector<std::int64_t>{0});
  const auto v = seifert_matrix(parse_code("1,2,1,2"));
  CHECK(v.at(0, 0) == 0);
  CHECK(v.at(1, 1) == 0);
  CHECK(std::abs(v.at(0, 1)) + std::abs(v.at(1, 0)) == 1);
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_codes(n)) {
      const auto m = seifert_matrix(c);
      const auto pairs = interleaving_pairs(c);
      std::vector<std::int64_t> skew(static_cast<std::size_t>(n * n));
      for (int i = 0; i < n; ++i) {
        CHECK(m.at(i, i) == 0);
        for (int j = 0; j < n; ++j) {
          skew[static_cast<std::size_t>(i * n + j)] = m.at(i, j) - m.at(j, i);
          if (i < j) {
            const bool inter = pairs.contains({i + 1, j + 1});
            CHECK(std::abs(m.at(i, j)) + std::abs(m.at(j, i)) == (inter ? 1 : 0));
          }
        }
      }
      if (count_components(c) == 1) CHECK(cofactor_det(skew, n) == 1);
    }
}

TEST_CASE("Alexander polynomials") {
  CHECK(alexander_from_seifert(seifert_matrix(parse_code("1,1"))).poly.is_zero());
  CHECK(alexander_from_seifert(seifert_matrix(parse_code("1,2,1,2"))).poly == LaurentPoly1(0, {1}));
  const auto t = alexander_from_seifert(seifert_matrix(parse_code("1,2,3,4,1,2,3,4")));
  CHECK(t.poly == LaurentPoly1(-1, {1, -1, 1}));
  CHECK(t.span == 2);
  CHECK(t.leading == 1);
  CHECK(t.determinant == 3);
}

TEST_CASE("signature and determinant") {
  CHECK(signature_and_det(seifert_matrix(parse_code("1,1"))) == SignatureDet{0, 0});
  CHECK(signature_and_det(seifert_matrix(parse_code("1,2,1,2"))) == SignatureDet{0, 1});
  // negative trefoil: signature +2 in the usual convention
  CHECK(signature_and_det(seifert_matrix(parse_code("1,2,3,4,1,2,3,4"))) == SignatureDet{2, 3});
  CHECK(signature_and_det(seifert_matrix(torus2_code(6))).signature == 4);
  for (const auto& c : enumerate_codes(5)) {
    const auto v = seifert_matrix(c);
    CHECK(signature_and_det(v).determinant == alexander_from_seifert(v).determinant);
  }
}

TEST_CASE("surface statistics") {
  CHECK(surface_stats(parse_code("1,2,3,4,1,2,3,4")) == SurfaceStats{4, 1, 2});
  CHECK(surface_stats(parse_code("1,1")) == SurfaceStats{1, 2, 0});
  CHECK(surface_stats(torus2_code(5)) == SurfaceStats{5, 2, 2});
}

TEST_CASE("Alexander two ways, exhaustive n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : enumerate_codes(n)) {
      const auto a = alexander_from_seifert(seifert_matrix(c));
      const auto b = conway_alexander(homfly(code_to_diagram(c)), count_components(c));
      CHECK(alexander_equivalent(a.poly, b));
      CHECK(a.span <= 2 * surface_stats(c).genus);
      CHECK(alexander_equivalent(a.poly, alexander_from_seifert(seifert_matrix(mirror_code(c))).poly));
      if (count_components(c) == 1) {
        CHECK(std::abs(a.poly.evaluate(1)) == 1);
        CHECK(a.determinant % 2 == 1);
      }
    }
}

TEST_CASE("sign conventions the Alexander check cannot separate") {
  const auto c = parse_code("1,2,3,4,1,2,3,4");
  for (auto conv : {SeifertConvention::kTransposed, SeifertConvention::kNegated,
                    SeifertConvention::kNegatedTransposed}) {
    CHECK(alexander_equivalent(alexander_from_seifert(seifert_matrix(c, conv)).poly,
                               alexander_from_seifert(seifert_matrix(c)).poly));
  }
  CHECK(signature_and_det(seifert_matrix(c, SeifertConvention::kNegated)).signature == -2);
  CHECK(signature_and_det(seifert_matrix(c, SeifertConvention::kTransposed)).signature == 2);
}
