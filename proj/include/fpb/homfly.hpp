#pragma once

#include <cstdint>
#include <stdexcept>

#include "fpb/diagram.hpp"
#include "fpb/poly.hpp"

namespace fpb {

inline constexpr std::uint64_t kDefaultSkeinBudget = 1'000'000;

/// The skein tree outgrew its node budget; retry with a larger one.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes_used);
  std::uint64_t nodes_used() const { return nodes_used_; }

 private:
  std::uint64_t nodes_used_;
};

/// HOMFLYPT polynomial with v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1.
/// A split union picks up a factor delta = (v^-1 - v) / z per extra
/// component.
LaurentPoly2 homfly(const LinkDiagram& diagram, std::uint64_t budget = kDefaultSkeinBudget);

/// Same as homfly() and reports how many skein nodes were expanded.
LaurentPoly2 homfly(const LinkDiagram& diagram, std::uint64_t budget, std::uint64_t& nodes_used);

/// delta^k for k >= 0.
LaurentPoly2 unlink_poly(int components);

struct VDegrees {
  int max_v = 0;
  int min_v = 0;
  int breadth = 0;
  friend bool operator==(const VDegrees&, const VDegrees&) = default;
};

/// Extreme v-exponents; throws PolyError on the zero polynomial.
VDegrees v_degrees(const LaurentPoly2& p);

/// P of the mirror image: v -> v^-1, z -> -z.
LaurentPoly2 mirror_poly(const LaurentPoly2& p);

/// Conway specialization v = 1, z = s - 1/s, t = s^2, normalized as an
/// Alexander polynomial. Throws PolyError when the exponents cannot be made
/// integral.
LaurentPoly1 conway_alexander(const LaurentPoly2& p, int components);

/// P of a connected sum.
LaurentPoly2 connected_sum_poly(const LaurentPoly2& a, const LaurentPoly2& b);

}  // namespace fpb
