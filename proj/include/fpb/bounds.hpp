#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpb/poly.hpp"
#include "fpb/surface.hpp"

namespace fpb {

class BoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Everything known about a link L. neg_* values are maxima over L and its
/// mirror.
struct BoundInput {
  int components = 1;
  std::optional<AlexanderData> alexander;
  std::optional<int> genus;
  std::optional<LaurentPoly2> homfly;
  std::optional<int> neg_sl_max;
  std::optional<int> neg_tb_max;
  std::optional<int> euler_char;
  std::optional<bool> sqp;
  /// T(p,q) with p >= q > 1.
  std::optional<std::pair<int, int>> torus;
  /// m for the m-twist knot K_m.
  std::optional<int> twist;
  /// false only when L is known not to be an alternating torus link.
  std::optional<bool> alternating_torus;
  std::optional<int> presentation_bands;
  /// Caller asserts L has no split unknot component (needed by the tb bound).
  bool no_split_unknot = true;
};

struct BoundEntry {
  std::string name;
  int raw = 0;
  std::string ref;
  bool upper = false;
  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct FpbkReport {
  int lower = 0;
  std::optional<int> upper;
  std::vector<BoundEntry> bounds;
  std::vector<std::string> notes;
  bool exact = false;
  bool no_bound = false;

  std::string to_json() const;
};

int parity_round(int lower, int components);

/// Genus/Alexander bound for knots: 2g+2, or max(2g+2, span+4) when the
/// leading coefficient is not +-1. Without a genus, g >= ceil(span/2).
int hn_bound(std::optional<int> genus, const std::optional<AlexanderData>& alexander,
             int components = 1);

int sl_bound(int neg_sl_max);

/// ceil((neg_tb_max + 2) / 2), or ceil((neg_tb_max + 3) / 2) when the link
/// is known not to be an alternating torus link.
int tb_bound(int neg_tb_max, std::optional<bool> alternating_torus);

/// max(maxdeg_v P, -mindeg_v P).
int homfly_degree_bound(const LaurentPoly2& p);

/// 1 - chi + breadth_v, valid for strongly quasipositive links.
int sqp_bound(int euler_char, int breadth_v);

/// pq - p + q - 1 for p >= q > 1; swaps the arguments when p < q.
int torus_fpbk(int p, int q);

struct TwistValue {
  int value = 0;  // fpbk(K_m)
  int lower = 0;  // the self-linking lower bound before parity
};

TwistValue twist_knot_fpbk(int m);

FpbkReport combine_bounds(const BoundInput& input);

struct SumSummand {
  int neg_tb = 0;  // -tb of the chosen chirality
  int genus = 0;
  std::optional<AlexanderData> alexander;
  std::optional<LaurentPoly2> homfly;
};

struct ConnectedSumReport {
  int neg_tb = 0;
  int genus = 0;
  int lower = 0;
  /// 2 * lower - (neg_tb + 2)
  int gap = 0;
  std::optional<int> homfly_lower;
};

ConnectedSumReport connected_sum_report(const std::vector<SumSummand>& summands);

}  // namespace fpb
