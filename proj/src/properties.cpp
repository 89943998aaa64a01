#include <chrono>
#include <functional>
#include <stdexcept>

#include "fpb/search.hpp"

namespace fpb {

namespace {

constexpr std::size_t kMaxExamples = 10;

class Checker {
 public:
  Checker(std::string suite, const PropertyOptions& opt) : opt_(opt) {
    report_.suite = std::move(suite);
    report_.seed = opt.seed;
  }

  void check(bool ok, const std::string& what) {
    ++report_.checked;
    if (ok) return;
    ++report_.failures;
    if (report_.failure_examples.size() < kMaxExamples) report_.failure_examples.push_back(what);
  }

  // Every canonical code with n bands, for n in [lo, hi].
  void exhaustive(int lo, int hi, const std::function<void(const FlatBasketCode&)>& f) {
    for (int n = lo; n <= hi; ++n) enumerate_codes(n, {}, [&](const FlatBasketCode& c) {
        f(c);
        return true;
      });
    report_.notes.push_back("exhaustive n=" + std::to_string(lo) + ".." + std::to_string(hi));
  }

  void sampled(int n, const std::function<void(const FlatBasketCode&)>& f) {
    std::mt19937_64 rng(opt_.seed * 1000003ULL + static_cast<std::uint64_t>(n));
    for (std::uint64_t k = 0; k < opt_.sample_size; ++k) f(random_code(n, rng));
    report_.notes.push_back(std::to_string(opt_.sample_size) + " samples at n=" + std::to_string(n));
  }

  int exhaustive_max(int dflt) const { return opt_.exhaustive_max > 0 ? opt_.exhaustive_max : dflt; }
  PropertyReport& report() { return report_; }

 private:
  const PropertyOptions& opt_;
  PropertyReport report_;
};

std::string tag(const FlatBasketCode& c, const std::string& msg) { return c.to_string() + ": " + msg; }

void descents(Checker& ck) {
  ck.exhaustive(2, ck.exhaustive_max(5), [&](const FlatBasketCode& c) {
    if (has_adjacent_equal(c)) return;
    ck.check(count_shortcuts(c) >= 2, tag(c, "fewer than two cyclic descents"));
  });
  for (int m = 2; m <= 12; ++m)
    ck.check(count_shortcuts(torus2_code(m)) == 2, "torus2_code(" + std::to_string(m) + ") descents != 2");
}

void alexander_two_path(Checker& ck) {
  auto one = [&](const FlatBasketCode& c) {
    const LaurentPoly1 a = alexander_from_seifert(seifert_matrix(c)).poly;
    const LaurentPoly1 b = conway_alexander(homfly(code_to_diagram(c)), count_components(c));
    ck.check(alexander_equivalent(a, b), tag(c, "Seifert " + a.to_string() + " vs skein " + b.to_string()));
  };
  ck.exhaustive(1, ck.exhaustive_max(4), one);
  ck.sampled(5, one);
  ck.sampled(6, one);
}

void mirror(Checker& ck) {
  auto one = [&](const FlatBasketCode& c) {
    const FlatBasketCode m = mirror_code(c);
    ck.check(mirror_code(m) == c, tag(c, "mirror_code is not an involution"));
    ck.check(count_components(m) == count_components(c), tag(c, "mirror changes components"));
    ck.check(interleaving_pairs(m).size() == interleaving_pairs(c).size(), tag(c, "mirror changes interleavings"));
    ck.check(homfly(code_to_diagram(m)) == mirror_poly(homfly(code_to_diagram(c))),
             tag(c, "HOMFLYPT of mirror code is not the mirror polynomial"));
  };
  ck.exhaustive(1, ck.exhaustive_max(4), one);
  ck.sampled(5, one);
}

void vdeg_chain(Checker& ck) {
  auto one = [&](const FlatBasketCode& c) {
    const LaurentPoly2 p = homfly(code_to_diagram(c));
    const VDegrees d = v_degrees(p);
    ck.check(std::max(d.max_v, -d.min_v) <= c.bands(),
             tag(c, "max(maxdeg_v, -mindeg_v) = " + std::to_string(std::max(d.max_v, -d.min_v)) + " exceeds n"));
  };
  ck.exhaustive(1, ck.exhaustive_max(4), one);
  ck.sampled(5, one);
  ck.sampled(6, one);
}

void torus2_shadow(Checker& ck) {
  const int hi = ck.exhaustive_max(6);
  for (int n = 2; n <= hi; ++n) {
    const FlatBasketCode torus = canonical_form(torus2_code(n));
    EnumerateOptions eo;
    eo.forbid_adjacent_equal = true;
    enumerate_codes(n, eo, [&](const FlatBasketCode& c) {
      ck.check(count_shortcuts(c) != 2 || c == torus, tag(c, "two descents but not the torus family"));
      return true;
    });
  }
  ck.report().notes.push_back("exhaustive n=2.." + std::to_string(hi));
}

void compact_diagram(Checker& ck) {
  auto one = [&](const FlatBasketCode& c) {
    const LinkDiagram d = code_to_compact_diagram(c);
    ck.check(d.crossing_count() <= code_to_diagram(c).crossing_count(), tag(c, "compact diagram is larger"));
    ck.check(homfly(d) == homfly(code_to_diagram(c)), tag(c, "compact diagram changes HOMFLYPT"));
  };
  ck.exhaustive(1, ck.exhaustive_max(4), one);
  ck.sampled(5, one);
}

void components(Checker& ck) {
  ck.exhaustive(1, ck.exhaustive_max(5), [&](const FlatBasketCode& c) {
    const LinkDiagram d = code_to_diagram(c);
    ck.check(d.components() == count_components(c), tag(c, "diagram components disagree"));
    ck.check(d.crossing_count() == 4 * static_cast<int>(interleaving_pairs(c).size()),
             tag(c, "crossing count is not 4 per interleaving pair"));
    ck.check((c.bands() - count_components(c)) % 2 != 0, tag(c, "n and components - 1 differ in parity"));
  });
}

const std::vector<std::pair<std::string, void (*)(Checker&)>>& suites() {
  static const std::vector<std::pair<std::string, void (*)(Checker&)>> s = {
      {"descents", descents},         {"alexander-two-path", alexander_two_path},
      {"mirror", mirror},             {"vdeg-chain", vdeg_chain},
      {"torus2-shadow", torus2_shadow}, {"compact-diagram", compact_diagram},
      {"components", components},
  };
  return s;
}

}  // namespace

std::vector<std::string> property_suites() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

PropertyReport verify_properties(const std::string& suite, const PropertyOptions& options) {
  for (const auto& [name, fn] : suites()) {
    if (name != suite) continue;
    Checker ck(name, options);
    const auto t0 = std::chrono::steady_clock::now();
    fn(ck);
    ck.report().seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return ck.report();
  }
  throw std::invalid_argument("unknown property suite '" + suite + "'");
}

}  // namespace fpb
