#include "fpb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <tuple>

#include <json.hpp>

namespace fpb {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw PolyError("integer overflow in polynomial addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw PolyError("integer overflow in polynomial multiplication");
  return r;
}

// ---------------------------------------------------------------- one variable

LaurentPoly1::LaurentPoly1(int offset, const std::vector<std::int64_t>& coeffs) {
  for (std::size_t k = 0; k < coeffs.size(); ++k) add_term(offset + static_cast<int>(k), coeffs[k]);
}

LaurentPoly1 LaurentPoly1::monomial(std::int64_t c, int exp) {
  LaurentPoly1 p;
  p.add_term(exp, c);
  return p;
}

void LaurentPoly1::add_term(int exp, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly1::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly1::min_degree() const {
  if (is_zero()) throw PolyError("degree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly1::max_degree() const {
  if (is_zero()) throw PolyError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

std::pair<int, std::vector<std::int64_t>> LaurentPoly1::dense() const {
  if (is_zero()) return {0, {}};
  const int lo = min_degree();
  std::vector<std::int64_t> c(static_cast<std::size_t>(max_degree() - lo + 1), 0);
  for (const auto& [e, v] : terms_) c[static_cast<std::size_t>(e - lo)] = v;
  return {lo, c};
}

LaurentPoly1 LaurentPoly1::normalized() const {
  if (is_zero()) return {};
  const int lo = min_degree();
  const int s = span();
  const int target_lo = (s % 2 == 0) ? -s / 2 : 0;
  const std::int64_t sign = terms_.begin()->second < 0 ? -1 : 1;
  LaurentPoly1 out;
  for (const auto& [e, v] : terms_) out.add_term(e - lo + target_lo, sign * v);
  return out;
}

LaurentPoly1 LaurentPoly1::inverted() const {
  LaurentPoly1 out;
  for (const auto& [e, v] : terms_) out.add_term(-e, v);
  return out;
}

std::int64_t LaurentPoly1::evaluate(std::int64_t t) const {
  std::int64_t sum = 0;
  for (const auto& [e, v] : terms_) {
    std::int64_t power = 1;
    if (t == 1 || t == -1) {
      power = (t == -1 && (e % 2 != 0)) ? -1 : 1;
    } else {
      if (e < 0) throw PolyError("cannot evaluate a negative power at this point");
      for (int k = 0; k < e; ++k) power = checked_mul(power, t);
    }
    sum = checked_add(sum, checked_mul(power, v));
  }
  return sum;
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  for (const auto& [e, v] : o.terms_) add_term(e, v);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
  for (const auto& [e, v] : o.terms_) add_term(e, -v);
  return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
  LaurentPoly1 out;
  for (const auto& [ea, va] : a.terms_)
    for (const auto& [eb, vb] : b.terms_) out.add_term(ea + eb, checked_mul(va, vb));
  return out;
}

std::string LaurentPoly1::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, v] : terms_) {
    std::int64_t mag = v < 0 ? -v : v;
    if (first) {
      if (v < 0) s += "-";
    } else {
      s += v < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += "t";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string LaurentPoly1::to_compact() const {
  const auto [offset, coeffs] = dense();
  std::string s = std::to_string(offset) + ":";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(coeffs[k]);
  }
  return s;
}

namespace {

std::int64_t parse_int(std::string_view token, const char* what) {
  std::int64_t v = 0;
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
    token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
    token.remove_suffix(1);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw PolyError(std::string("malformed ") + what + ": '" + std::string(token) + "'");
  return v;
}

}  // namespace

LaurentPoly1 LaurentPoly1::from_compact(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw PolyError("compact polynomial needs 'offset:coeffs'");
  const int offset = static_cast<int>(parse_int(text.substr(0, colon), "offset"));
  std::vector<std::int64_t> coeffs;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    coeffs.push_back(parse_int(rest.substr(0, comma), "coefficient"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  LaurentPoly1 p(offset, coeffs);
  if (!coeffs.empty() && (coeffs.front() == 0 || coeffs.back() == 0))
    throw PolyError("compact polynomial has zero end coefficients");
  return p;
}

bool alexander_equivalent(const LaurentPoly1& a, const LaurentPoly1& b) {
  return a.normalized() == b.normalized();
}

// ---------------------------------------------------------------- two variables

namespace {

bool term_less(const LaurentPoly2::Term& a, const LaurentPoly2::Term& b) {
  return std::tie(a.v, a.z) < std::tie(b.v, b.z);
}

}  // namespace

LaurentPoly2 LaurentPoly2::constant(std::int64_t c) { return monomial(c, 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(std::int64_t c, int v, int z) {
  LaurentPoly2 p;
  if (c != 0) p.terms_.push_back({v, z, c});
  return p;
}

LaurentPoly2 LaurentPoly2::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  LaurentPoly2 p;
  for (const Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().v == t.v && p.terms_.back().z == t.z) {
      p.terms_.back().c = checked_add(p.terms_.back().c, t.c);
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (t.c != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

LaurentPoly2 LaurentPoly2::shifted(std::int64_t c, int dv, int dz) const {
  LaurentPoly2 p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.v + dv, t.z + dz, checked_mul(t.c, c)});
  return p;
}

LaurentPoly2 LaurentPoly2::negate_v_exponents() const {
  std::vector<Term> t = terms_;
  for (Term& x : t) x.v = -x.v;
  return from_terms(std::move(t));
}

namespace {

std::vector<LaurentPoly2::Term> merge(const std::vector<LaurentPoly2::Term>& a,
                                      const std::vector<LaurentPoly2::Term>& b, int sign) {
  std::vector<LaurentPoly2::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_less(b[j], a[i])) {
      out.push_back({b[j].v, b[j].z, sign * b[j].c});
      ++j;
    } else {
      const std::int64_t c = checked_add(a[i].c, sign * b[j].c);
      if (c != 0) out.push_back({a[i].v, a[i].z, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  std::vector<LaurentPoly2::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) t.push_back({x.v + y.v, x.z + y.z, checked_mul(x.c, y.c)});
  return LaurentPoly2::from_terms(std::move(t));
}

std::string LaurentPoly2::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    s += std::to_string(terms_[i].c) + "*v^" + std::to_string(terms_[i].v) + "*z^" +
         std::to_string(terms_[i].z);
  }
  return s;
}

LaurentPoly2 LaurentPoly2::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact == "0") return {};
  std::vector<Term> terms;
  std::string_view rest = compact;
  // terms are separated by '+' that follow a z-exponent; split on "+" that
  // precedes a coefficient, i.e. at top level between '*z^<int>' and next.
  while (!rest.empty()) {
    const auto vpos = rest.find("*v^");
    const auto zpos = rest.find("*z^");
    if (vpos == std::string_view::npos || zpos == std::string_view::npos || zpos < vpos)
      throw PolyError("malformed HOMFLYPT term in '" + std::string(text) + "'");
    Term t;
    t.c = parse_int(rest.substr(0, vpos), "coefficient");
    t.v = static_cast<int>(parse_int(rest.substr(vpos + 3, zpos - vpos - 3), "v exponent"));
    std::size_t end = zpos + 3;
    if (end < rest.size() && rest[end] == '-') ++end;
    while (end < rest.size() && std::isdigit(static_cast<unsigned char>(rest[end]))) ++end;
    t.z = static_cast<int>(parse_int(rest.substr(zpos + 3, end - zpos - 3), "z exponent"));
    terms.push_back(t);
    rest.remove_prefix(end);
    if (!rest.empty()) {
      if (rest.front() != '+') throw PolyError("expected '+' between HOMFLYPT terms");
      rest.remove_prefix(1);
    }
  }
  LaurentPoly2 p = from_terms(terms);
  if (p.terms_.size() != terms.size()) throw PolyError("HOMFLYPT text has repeated or zero terms");
  return p;
}

std::string LaurentPoly2::to_json() const {
  std::string s = "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(terms_[i].v) + "," + std::to_string(terms_[i].z) + "," +
         std::to_string(terms_[i].c) + "]";
  }
  return s + "]";
}

LaurentPoly2 LaurentPoly2::from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw PolyError("HOMFLYPT JSON must be an array of [a,b,c] triples");
  std::vector<Term> terms;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw PolyError("HOMFLYPT JSON term must be [a,b,c]");
    terms.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<std::int64_t>()});
  }
  LaurentPoly2 p = from_terms(terms);
  if (p.terms_.size() != terms.size()) throw PolyError("HOMFLYPT JSON has repeated or zero terms");
  return p;
}

}  // namespace fpb
