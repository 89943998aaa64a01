#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpb {

class PolyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integer Laurent polynomial in one variable t. Zero coefficients are
/// never stored.
class LaurentPoly1 {
 public:
  LaurentPoly1() = default;
  /// coeffs[k] is the coefficient of t^(offset + k).
  LaurentPoly1(int offset, const std::vector<std::int64_t>& coeffs);
  static LaurentPoly1 monomial(std::int64_t c, int exp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(int exp) const;
  int min_degree() const;
  int max_degree() const;
  int span() const { return is_zero() ? 0 : max_degree() - min_degree(); }

  /// Dense view: offset plus coefficient list from min to max degree.
  std::pair<int, std::vector<std::int64_t>> dense() const;

  /// Multiplies by -1 and/or a power of t so the lowest coefficient is
  /// positive and the exponents are centered on 0 when the span is even
  /// (otherwise the lowest exponent becomes 0).
  LaurentPoly1 normalized() const;
  /// p(t^-1)
  LaurentPoly1 inverted() const;

  std::int64_t evaluate(std::int64_t t) const;  // t must be +-1 or exponents >= 0

  LaurentPoly1& operator+=(const LaurentPoly1& o);
  LaurentPoly1& operator-=(const LaurentPoly1& o);
  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
  friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

  /// "t^-1 - 1 + t"
  std::string to_string() const;
  /// "offset:c0,c1,..." e.g. "-1:1,-1,1"; the zero polynomial is "0:".
  std::string to_compact() const;
  static LaurentPoly1 from_compact(std::string_view text);

 private:
  void add_term(int exp, std::int64_t c);
  std::map<int, std::int64_t> terms_;
};

/// Equality up to multiplication by +-t^k.
bool alexander_equivalent(const LaurentPoly1& a, const LaurentPoly1& b);

/// Integer Laurent polynomial in v and z, stored as a sorted term list
/// keyed by (v-exponent, z-exponent).
class LaurentPoly2 {
 public:
  struct Term {
    int v = 0;
    int z = 0;
    std::int64_t c = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly2() = default;
  static LaurentPoly2 constant(std::int64_t c);
  static LaurentPoly2 monomial(std::int64_t c, int v, int z);
  /// Builds from arbitrary terms; combines duplicates and drops zeros.
  static LaurentPoly2 from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Multiplies every term by c * v^dv * z^dz.
  LaurentPoly2 shifted(std::int64_t c, int dv, int dz) const;
  /// Raw substitution v -> v^-1. The skein-aware mirror is mirror_poly().
  LaurentPoly2 negate_v_exponents() const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  /// "-1*v^2*z^0 + 2*v^4*z^0"; the zero polynomial is "0".
  std::string to_string() const;
  static LaurentPoly2 parse(std::string_view text);
  /// JSON text: [[a,b,c],...] sorted by (a,b).
  std::string to_json() const;
  static LaurentPoly2 from_json(std::string_view text);

 private:
  std::vector<Term> terms_;  // sorted by (v, z), no zero coefficients
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace fpb
