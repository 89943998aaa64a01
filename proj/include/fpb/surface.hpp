#pragma once

#include <cstdint>
#include <vector>

#include "fpb/code.hpp"
#include "fpb/poly.hpp"

namespace fpb {

/// V[i][j] = lk(c_i^+, c_j) for the band cores c_1..c_n (0-based storage).
struct SeifertMatrix {
  int n = 0;
  std::vector<std::int64_t> entries;  // row-major n*n

  std::int64_t at(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
  std::int64_t& at(int i, int j) { return entries[static_cast<std::size_t>(i * n + j)]; }
  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;
};

/// Where the +-1 of an interleaving pair goes and with which sign.
/// kStandard puts it in the row of the upper band. Alexander polynomials
/// cannot tell the four apart; the signature of the negative trefoil (+2)
/// rules out the negated ones, and transposing only reverses orientation.
enum class SeifertConvention { kStandard, kTransposed, kNegated, kNegatedTransposed };

SeifertMatrix seifert_matrix(const FlatBasketCode& code,
                             SeifertConvention convention = SeifertConvention::kStandard);

struct AlexanderData {
  LaurentPoly1 poly;     // normalized
  int span = 0;
  std::int64_t leading = 0;
  std::int64_t determinant = 0;  // |poly(-1)|
  friend bool operator==(const AlexanderData&, const AlexanderData&) = default;
};

AlexanderData alexander_data(const LaurentPoly1& poly);
AlexanderData alexander_from_seifert(const SeifertMatrix& v);

struct SignatureDet {
  int signature = 0;
  std::int64_t determinant = 0;
  friend bool operator==(const SignatureDet&, const SignatureDet&) = default;
};

/// Signature and |det| of V + V^T.
SignatureDet signature_and_det(const SeifertMatrix& v);

struct SurfaceStats {
  int b1 = 0;
  int components = 0;
  int genus = 0;
  friend bool operator==(const SurfaceStats&, const SurfaceStats&) = default;
};

SurfaceStats surface_stats(const FlatBasketCode& code);

}  // namespace fpb
