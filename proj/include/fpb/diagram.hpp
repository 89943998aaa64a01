#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpb/code.hpp"

namespace fpb {

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Oriented link diagram.
///
/// Each crossing has four ends numbered in counterclockwise order starting
/// at the incoming under-strand (the usual PD convention): slot 0 is the
/// under-in end and slot 2 the under-out end. For a positive crossing slot 1
/// is over-out and slot 3 over-in; for a negative crossing it is the other
/// way round. End `4*c + s` is slot `s` of crossing `c`; `partner(e)` is the
/// end at the other side of the arc leaving or entering at `e`.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  int crossing_count() const { return static_cast<int>(sign_.size()); }
  int free_loops() const { return free_loops_; }
  int sign(int crossing) const { return sign_[static_cast<std::size_t>(crossing)]; }
  int partner(int end) const { return link_[static_cast<std::size_t>(end)]; }

  static constexpr int crossing_of(int end) { return end >> 2; }
  static constexpr int slot_of(int end) { return end & 3; }
  static constexpr int end_of(int crossing, int slot) { return 4 * crossing + slot; }

  bool is_over(int end) const { return (slot_of(end) & 1) != 0; }
  bool is_incoming(int end) const;
  /// For an incoming end, the outgoing end of the same strand at the same
  /// crossing (and vice versa).
  int through(int end) const;

  int under_in(int c) const { return end_of(c, 0); }
  int under_out(int c) const { return end_of(c, 2); }
  int over_in(int c) const { return end_of(c, sign(c) > 0 ? 3 : 1); }
  int over_out(int c) const { return end_of(c, sign(c) > 0 ? 1 : 3); }

  /// Components as cyclic lists of incoming ends visited in traversal
  /// order (free loops excluded).
  std::vector<std::vector<int>> component_walks() const;
  int components() const;
  int writhe() const;

  /// Throws DiagramError if arcs are not a perfect out->in matching.
  void validate() const;

  /// PD-style text: one "X a b c d +" line per crossing (arc labels in slot
  /// order, arcs numbered densely in traversal order) and a "loops: k"
  /// trailer.
  std::string to_pd() const;
  static LinkDiagram from_pd(std::string_view text);

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

  // Low-level construction; used by the builders and by the skein engine.
  int add_crossing(int sign);
  void connect(int out_end, int in_end);
  void add_free_loops(int k) { free_loops_ += k; }
  std::vector<std::int8_t>& signs() { return sign_; }
  std::vector<int>& links() { return link_; }
  const std::vector<std::int8_t>& signs() const { return sign_; }
  const std::vector<int>& links() const { return link_; }

 private:
  std::vector<std::int8_t> sign_;
  std::vector<int> link_;
  int free_loops_ = 0;
};

struct DiagramStats {
  int components = 0;
  int writhe = 0;
  int crossings = 0;
  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

DiagramStats diagram_stats(const LinkDiagram& d);

/// Which band passes over at a band-band clasp in the standard projection.
enum class OverRule { kLaterPageOver, kEarlierPageOver };

/// The over/under convention that makes (1,2,3,4,1,2,3,4) bound the
/// negative trefoil; fixed by test against the braid closure of s1^-3.
inline constexpr OverRule kBasketOverRule = OverRule::kLaterPageOver;

/// Standard projection of the basket boundary: feet on a circle in word
/// order, every band drawn inside the circle as two parallel strands, each
/// interleaving pair contributing four crossings.
LinkDiagram code_to_diagram(const FlatBasketCode& code, OverRule rule = kBasketOverRule);

/// An isotopic projection with fewer crossings: labels are cyclically
/// shifted and the bands of an upper page range are drawn outside the
/// binding circle. Used where only the link type matters.
LinkDiagram code_to_compact_diagram(const FlatBasketCode& code, OverRule rule = kBasketOverRule);

/// Closure of the braid word; generator +i is sigma_i (positive crossing),
/// -i its inverse.
LinkDiagram braid_closure(int strands, std::span<const int> word);

/// Closure of (s_1 ... s_{p-1})^q; negative q gives the mirror.
LinkDiagram torus_braid_diagram(int p, int q);

enum class SimplifyEffort { kBasic, kFull };

/// Repeated Reidemeister I/II reductions; crossingless components become
/// free loops. Never adds crossings.
LinkDiagram simplify(const LinkDiagram& d, SimplifyEffort effort = SimplifyEffort::kFull);

/// Diagram with every crossing switched (the mirror image).
LinkDiagram mirror_diagram(const LinkDiagram& d);

}  // namespace fpb
