#include "fpb/bounds.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "fpb/homfly.hpp"

namespace fpb {

namespace {

int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

}  // namespace

int parity_round(int lower, int components) {
  if (lower < 0) throw BoundError("negative lower bound");
  if (components < 1) throw BoundError("components must be positive");
  return (lower - (components - 1)) % 2 == 0 ? lower : lower + 1;
}

int hn_bound(std::optional<int> genus, const std::optional<AlexanderData>& alexander,
             int components) {
  if (components != 1) throw BoundError("the genus/Alexander bound needs a knot");
  if (!genus && !alexander) throw BoundError("the genus/Alexander bound needs g or Alexander data");
  int g = genus.value_or(0);
  if (!genus) g = ceil_half(alexander->span);
  if (g < 0) throw BoundError("negative genus");
  const int base = 2 * g + 2;
  if (!alexander || alexander->leading == 1 || alexander->leading == -1) return base;
  return std::max(base, alexander->span + 4);
}

int sl_bound(int neg_sl_max) { return neg_sl_max - 1; }

int tb_bound(int neg_tb_max, std::optional<bool> alternating_torus) {
  const bool plus_three = alternating_torus.has_value() && !*alternating_torus;
  return ceil_half(neg_tb_max + (plus_three ? 3 : 2));
}

int homfly_degree_bound(const LaurentPoly2& p) {
  const VDegrees d = v_degrees(p);
  return std::max(d.max_v, -d.min_v);
}

int sqp_bound(int euler_char, int breadth_v) { return 1 - euler_char + breadth_v; }

int torus_fpbk(int p, int q) {
  if (p < q) std::swap(p, q);
  if (q < 2) throw BoundError("torus parameters need p >= q > 1");
  return p * q - p + q - 1;
}

TwistValue twist_knot_fpbk(int m) {
  if (m < 1) throw BoundError("twist index must be positive");
  const int k = m / 2;
  if (m % 2 == 1) return {2 * k + 4, 2 * k + 4};
  if (m == 2) return {4, 2};
  if (m == 4) return {6, 4};
  return {2 * k, 2 * k};
}

FpbkReport combine_bounds(const BoundInput& in) {
  if (in.components < 1) throw BoundError("components must be positive");
  FpbkReport r;
  int best = 0;
  auto lower = [&](std::string name, int raw, std::string ref) {
    best = std::max(best, raw);
    r.bounds.push_back({std::move(name), raw, std::move(ref), false});
  };
  auto upper = [&](std::string name, int raw, std::string ref) {
    r.upper = r.upper ? std::min(*r.upper, raw) : raw;
    r.bounds.push_back({std::move(name), raw, std::move(ref), true});
  };

  if (in.components == 1 && (in.genus || in.alexander)) {
    lower("genus-alexander", hn_bound(in.genus, in.alexander), "genus and Alexander leading coefficient");
    if (!in.genus) r.notes.push_back("genus unknown; used ceil(span/2), which is weaker");
  }
  if (in.neg_sl_max) lower("sl", sl_bound(*in.neg_sl_max), "maximal self-linking");
  if (in.neg_tb_max) {
    lower("tb", tb_bound(*in.neg_tb_max, in.alternating_torus), "maximal Thurston-Bennequin");
    r.notes.push_back("tb bound assumes no split unknot component");
    if (!in.no_split_unknot) r.notes.push_back("caller did not assert the split-unknot hypothesis");
  }
  if (in.homfly && !in.homfly->is_zero())
    lower("homfly", homfly_degree_bound(*in.homfly), "HOMFLYPT v-degree");
  if (in.sqp.value_or(false) && in.euler_char && in.homfly && !in.homfly->is_zero())
    lower("sqp", sqp_bound(*in.euler_char, v_degrees(*in.homfly).breadth), "strong quasipositivity");
  if (in.torus) {
    const int v = torus_fpbk(in.torus->first, in.torus->second);
    lower("torus", v, "torus closed form");
    upper("torus", v, "torus closed form");
  }
  if (in.twist) {
    const TwistValue t = twist_knot_fpbk(*in.twist);
    lower("twist", t.value, "twist knot values");
    upper("twist", t.value, "twist knot values");
  }
  if (in.presentation_bands) upper("presentation", *in.presentation_bands, "known basket presentation");

  r.no_bound = std::none_of(r.bounds.begin(), r.bounds.end(), [](const BoundEntry& b) { return !b.upper; });
  r.lower = parity_round(std::max(best, 0), in.components);
  if (r.upper && *r.upper < r.lower)
    throw BoundError("lower bound " + std::to_string(r.lower) + " exceeds upper bound " +
                     std::to_string(*r.upper));
  r.exact = r.upper && *r.upper == r.lower;
  return r;
}

std::string FpbkReport::to_json() const {
  nlohmann::ordered_json j;
  j["lower"] = lower;
  j["upper"] = upper ? nlohmann::ordered_json(*upper) : nlohmann::ordered_json(nullptr);
  j["exact"] = exact;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& b : bounds)
    arr.push_back({{"name", b.name}, {"raw", b.raw}, {"ref", b.ref}, {"kind", b.upper ? "upper" : "lower"}});
  j["bounds"] = arr;
  if (!notes.empty()) j["notes"] = notes;
  if (no_bound) j["no_bound"] = true;
  return j.dump();
}

ConnectedSumReport connected_sum_report(const std::vector<SumSummand>& summands) {
  if (summands.empty()) throw BoundError("connected sum of nothing");
  ConnectedSumReport r;
  std::int64_t leading = 1;
  int span = 0;
  bool have_alex = true, have_homfly = true;
  LaurentPoly2 product = LaurentPoly2::constant(1);
  for (const auto& s : summands) {
    r.neg_tb += s.neg_tb;
    r.genus += s.genus;
    if (s.alexander) {
      leading *= s.alexander->leading;
      span += s.alexander->span;
    } else
      have_alex = false;
    if (s.homfly)
      product = connected_sum_poly(product, *s.homfly);
    else
      have_homfly = false;
  }
  // tb(K # K') = tb(K) + tb(K') + 1
  r.neg_tb -= static_cast<int>(summands.size()) - 1;
  AlexanderData sum_alex;
  sum_alex.leading = leading;
  sum_alex.span = span;
  r.lower = have_alex ? hn_bound(r.genus, sum_alex) : 2 * r.genus + 2;
  if (have_homfly) {
    r.homfly_lower = homfly_degree_bound(product);
    r.lower = std::max(r.lower, *r.homfly_lower);
  }
  r.lower = parity_round(r.lower, 1);
  r.gap = 2 * r.lower - (r.neg_tb + 2);
  return r;
}

}  // namespace fpb
