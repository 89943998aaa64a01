#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "fpb/bounds.hpp"
#include "fpb/homfly.hpp"

using namespace fpb;

namespace {

AlexanderData alex(int offset, std::vector<std::int64_t> c) { return alexander_data(LaurentPoly1(offset, c)); }

}  // namespace

TEST_CASE("genus/Alexander bound") {
  CHECK(hn_bound(1, alex(-1, {1, -1, 1})) == 4);
  CHECK(hn_bound(1, alex(-1, {2, -3, 2})) == 6);
  CHECK(hn_bound(3, std::nullopt) == 8);
  CHECK(hn_bound(std::nullopt, alex(-1, {2, -3, 2})) == 6);
  CHECK_THROWS_AS(hn_bound(1, std::nullopt, 2), BoundError);
}

TEST_CASE("self-linking, Thurston-Bennequin, HOMFLYPT and sqp bounds") {
  CHECK(sl_bound(11) == 10);
  CHECK(sl_bound(5) == 4);
  CHECK(parity_round(sl_bound(4), 1) == 4);
  CHECK(tb_bound(10, false) == 7);
  CHECK(parity_round(tb_bound(10, false), 1) == 8);
  CHECK(tb_bound(6, true) == 4);
  for (int n = 2; n <= 9; ++n) CHECK(tb_bound(2 * n, true) == n + 1);
  CHECK(tb_bound(6, std::nullopt) == 4);
  const auto tre = homfly(torus_braid_diagram(3, 2));
  CHECK(homfly_degree_bound(LaurentPoly2::constant(1)) == 0);
  CHECK(homfly_degree_bound(tre) == 4);
  CHECK(homfly_degree_bound(tre * tre) == 8);
  CHECK(sqp_bound(-1, v_degrees(tre).breadth) == 4);
  CHECK(sqp_bound(1, 0) == 0);
  // T(4,3): chi = 1 - 2g with g = 3
  const auto t43 = homfly(torus_braid_diagram(4, 3));
  CHECK(sqp_bound(-5, v_degrees(t43).breadth) == torus_fpbk(4, 3));
}

TEST_CASE("torus closed form") {
  CHECK(torus_fpbk(3, 2) == 4);
  CHECK(torus_fpbk(2, 2) == 3);
  CHECK(torus_fpbk(3, 3) == 8);
  CHECK(torus_fpbk(2, 3) == 4);
  CHECK_THROWS_AS(torus_fpbk(3, 1), BoundError);
  for (int p = 2; p <= 6; ++p)
    for (int q = 2; q <= p; ++q) CHECK(parity_round(torus_fpbk(p, q), std::gcd(p, q)) == torus_fpbk(p, q));
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 3}, {3, 3}})
    CHECK(homfly_degree_bound(homfly(torus_braid_diagram(p, q))) == torus_fpbk(p, q));
}

TEST_CASE("twist knots") {
  CHECK(twist_knot_fpbk(1).value == 4);
  CHECK(twist_knot_fpbk(2).value == 4);
  CHECK(twist_knot_fpbk(3).value == 6);
  CHECK(twist_knot_fpbk(4).value == 6);
  CHECK(twist_knot_fpbk(8).value == 8);
  for (int m = 1; m <= 20; ++m) CHECK(twist_knot_fpbk(m).lower <= twist_knot_fpbk(m).value);
  CHECK_THROWS_AS(twist_knot_fpbk(0), BoundError);
}

TEST_CASE("parity") {
  CHECK(parity_round(7, 1) == 8);
  CHECK(parity_round(3, 2) == 3);
  CHECK(parity_round(0, 1) == 0);
}

TEST_CASE("combine_bounds") {
  BoundInput k945;
  k945.neg_tb_max = 10;
  k945.alternating_torus = false;
  k945.presentation_bands = 8;
  auto r = combine_bounds(k945);
  CHECK(r.lower == 8);
  CHECK(r.upper == 8);
  CHECK(r.exact);

  BoundInput k815;
  k815.neg_sl_max = 11;
  k815.presentation_bands = 10;
  CHECK(combine_bounds(k815).exact);
  CHECK(combine_bounds(k815).lower == 10);

  BoundInput k934;
  k934.neg_tb_max = 6;
  k934.neg_sl_max = 5;
  k934.genus = 3;
  k934.alexander = alex(-3, {1, -6, 16, -23, 16, -6, 1});
  k934.presentation_bands = 12;
  r = combine_bounds(k934);
  CHECK(r.lower == 8);
  CHECK(r.upper == 12);
  CHECK_FALSE(r.exact);

  BoundInput none;
  r = combine_bounds(none);
  CHECK(r.no_bound);
  CHECK(r.lower == 0);

  BoundInput bad;
  bad.neg_sl_max = 11;
  bad.presentation_bands = 4;
  CHECK_THROWS_AS(combine_bounds(bad), BoundError);
}

TEST_CASE("report JSON") {
  BoundInput in;
  in.neg_sl_max = 5;
  in.torus = std::make_pair(3, 2);
  CHECK(combine_bounds(in).to_json() ==
        R"({"lower":4,"upper":4,"exact":true,"bounds":[{"name":"sl","raw":4,"ref":"maximal self-linking","kind":"lower"},)"
        R"({"name":"torus","raw":4,"ref":"torus closed form","kind":"lower"},{"name":"torus","raw":4,"ref":"torus closed form","kind":"upper"}]})");
}

TEST_CASE("monotonicity") {
  BoundInput base;
  base.genus = 2;
  base.alexander = alex(-2, {1, -1, 1, -1, 1});
  const FpbkReport r0 = combine_bounds(base);
  BoundInput more = base;
  more.neg_sl_max = 7;
  more.presentation_bands = 6;
  const FpbkReport r1 = combine_bounds(more);
  CHECK(r1.lower >= r0.lower);
  more.torus = std::make_pair(5, 2);
  const FpbkReport r2 = combine_bounds(more);
  CHECK(r2.lower >= r1.lower);
  CHECK(*r2.upper <= *r1.upper);
}

TEST_CASE("connected sums") {
  const auto tre = homfly(torus_braid_diagram(3, 2));
  for (int n = 1; n <= 5; ++n) {
    std::vector<SumSummand> s(static_cast<std::size_t>(n), SumSummand{5, 3, alex(-3, {1, -3, 5, -7, 5, -3, 1}), std::nullopt});
    const auto r = connected_sum_report(s);
    CHECK(r.neg_tb == 4 * n + 1);
    CHECK(r.genus == 3 * n);
    CHECK(r.lower == 6 * n + 2);
    CHECK(r.gap >= 8 * n + 1);
  }
  const auto one = connected_sum_report({SumSummand{6, 1, alex(-1, {1, -1, 1}), tre}});
  CHECK(one.lower == hn_bound(1, alex(-1, {1, -1, 1})));
  const auto two = connected_sum_report({SumSummand{6, 1, alex(-1, {1, -1, 1}), tre}, SumSummand{6, 1, alex(-1, {1, -1, 1}), tre}});
  CHECK(two.homfly_lower == 8);
  CHECK(two.lower == 8);
  CHECK_THROWS_AS(connected_sum_report({}), BoundError);
}
