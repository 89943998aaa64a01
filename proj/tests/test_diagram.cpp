#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpb/diagram.hpp"
#include "fpb/homfly.hpp"

using namespace fpb;

namespace {

FlatBasketCode shuffled(int n, std::mt19937& rng) {
  std::vector<int> w;
  for (int i = 1; i <= n; ++i) w.insert(w.end(), {i, i});
  std::shuffle(w.begin(), w.end(), rng);
  return canonical_form(FlatBasketCode(w));
}

}  // namespace

TEST_CASE("basket diagrams") {
  const auto a = code_to_diagram(parse_code("1,1"));
  CHECK(a.crossing_count() == 0);
  CHECK(a.components() == 2);
  const auto b = code_to_diagram(parse_code("1,2,1,2"));
  CHECK(b.crossing_count() == 4);
  CHECK(simplify(b).crossing_count() < 4);
  const auto t = code_to_diagram(parse_code("1,2,3,4,1,2,3,4"));
  CHECK(diagram_stats(t) == DiagramStats{1, t.writhe(), 24});
  CHECK(simplify(t).crossing_count() <= 12);
}

TEST_CASE("crossing count and components, exhaustive n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_codes(n)) {
      const auto d = code_to_diagram(c);
      CHECK(d.crossing_count() == 4 * static_cast<int>(interleaving_pairs(c).size()));
      CHECK(d.components() == count_components(c));
      d.validate();
    }
}

TEST_CASE("torus braids") {
  CHECK(simplify(torus_braid_diagram(2, 1)).crossing_count() == 0);
  const auto t = torus_braid_diagram(2, 3);
  CHECK(diagram_stats(t) == DiagramStats{1, 3, 3});
  CHECK(diagram_stats(torus_braid_diagram(2, -3)) == DiagramStats{1, -3, 3});
  const auto l = torus_braid_diagram(3, 3);
  CHECK(l.components() == 3);
  CHECK(l.crossing_count() == 6);
  CHECK(torus_braid_diagram(4, 6).components() == 2);
  CHECK_THROWS(torus_braid_diagram(1, 3));
  CHECK_THROWS(torus_braid_diagram(2, 0));
}

TEST_CASE("simplify removes kinks and keeps HOMFLYPT") {
  const std::vector<int> kink{1};
  const auto u = simplify(braid_closure(1 + 1, kink));
  CHECK(u.crossing_count() == 0);
  CHECK(u.free_loops() == 1);
  CHECK(diagram_stats(LinkDiagram::from_pd("loops: 1\n")) == DiagramStats{1, 0, 0});

  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    const auto c = shuffled(2 + it % 4, rng);
    const auto d = code_to_diagram(c);
    const auto s = simplify(d);
    CHECK(s.crossing_count() <= d.crossing_count());
    CHECK(simplify(s) == s);
    CHECK(s.components() == d.components());
    CHECK(homfly(s, 100000) == homfly(d, 100000));
  }
}

TEST_CASE("PD text round trip") {
  std::mt19937 rng(3);
  for (int it = 0; it < 50; ++it) {
    const auto d = code_to_diagram(shuffled(2 + it % 4, rng));
    const std::string pd = d.to_pd();
    CHECK(LinkDiagram::from_pd(pd).to_pd() == pd);
  }
  const auto t = torus_braid_diagram(2, 3);
  CHECK(t.to_pd().find("loops: 0") != std::string::npos);
  CHECK_THROWS_AS(LinkDiagram::from_pd("X 1 2 3\n"), DiagramError);
}

TEST_CASE("compact diagrams are no larger") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_codes(n)) {
      const auto d = code_to_compact_diagram(c);
      CHECK(d.crossing_count() <= code_to_diagram(c).crossing_count());
      CHECK(d.components() == count_components(c));
    }
}

TEST_CASE("mirror diagram flips every sign") {
  const auto t = torus_braid_diagram(3, 2);
  CHECK(mirror_diagram(t).writhe() == -t.writhe());
}
