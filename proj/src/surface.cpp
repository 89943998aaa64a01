#include "fpb/surface.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numbers>

namespace fpb {

namespace {

struct Point {
  double x, y;
};

Point foot(int pos, int len) {
  const double phi = 2 * std::numbers::pi * pos / len;
  return {std::cos(phi), std::sin(phi)};
}

// The core of band i leaves the disk at its first foot, runs through the
// band to the second foot and returns through the disk; the disk part is
// the chord from the second foot to the first.
int chord_crossing_sign(const FlatBasketCode& code, int over, int under) {
  const int len = static_cast<int>(code.size());
  auto dir = [&](int label) {
    const auto [first, second] = code.positions(label);
    const Point a = foot(second, len), b = foot(first, len);
    return Point{b.x - a.x, b.y - a.y};
  };
  const Point o = dir(over), u = dir(under);
  return o.x * u.y - o.y * u.x > 0 ? 1 : -1;
}

mpz_class bareiss_det(std::vector<mpz_class> m, int n) {
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  auto at = [&](int i, int j) -> mpz_class& { return m[static_cast<std::size_t>(i * n + j)]; };
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

std::int64_t to_int64(const mpz_class& x) {
  if (!x.fits_slong_p()) throw PolyError("coefficient exceeds 64 bits");
  return x.get_si();
}

}  // namespace

SeifertMatrix seifert_matrix(const FlatBasketCode& code, SeifertConvention convention) {
  const int n = code.bands();
  SeifertMatrix v{n, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
  const bool transposed = convention == SeifertConvention::kTransposed ||
                          convention == SeifertConvention::kNegatedTransposed;
  const int flip = (convention == SeifertConvention::kNegated ||
                    convention == SeifertConvention::kNegatedTransposed)
                       ? -1
                       : 1;
  for (const auto& [a, b] : interleaving_pairs(code)) {
    // the band on the later page lies above
    const int top = std::max(a, b), bottom = std::min(a, b);
    const int s = flip * chord_crossing_sign(code, top, bottom);
    if (transposed)
      v.at(bottom - 1, top - 1) = s;
    else
      v.at(top - 1, bottom - 1) = s;
  }
  return v;
}

AlexanderData alexander_data(const LaurentPoly1& poly) {
  AlexanderData d;
  d.poly = poly.normalized();
  if (d.poly.is_zero()) return d;
  d.span = d.poly.span();
  d.leading = d.poly.coeff(d.poly.max_degree());
  const std::int64_t at_minus_one = d.poly.evaluate(-1);
  d.determinant = at_minus_one < 0 ? -at_minus_one : at_minus_one;
  return d;
}

AlexanderData alexander_from_seifert(const SeifertMatrix& v) {
  const int n = v.n;
  // det(V - t V^T) has degree <= n; sample at 2n+1 integer points.
  const int samples = 2 * n + 1;
  std::vector<mpz_class> xs, ys;
  for (int k = 0; k < samples; ++k) {
    const int t = k - n;
    std::vector<mpz_class> m(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[static_cast<std::size_t>(i * n + j)] = mpz_class(v.at(i, j)) - mpz_class(t) * v.at(j, i);
    xs.emplace_back(t);
    ys.push_back(bareiss_det(std::move(m), n));
  }
  // Newton divided differences over the rationals.
  std::vector<mpq_class> coef(ys.begin(), ys.end());
  for (int level = 1; level < samples; ++level)
    for (int i = samples - 1; i >= level; --i)
      coef[static_cast<std::size_t>(i)] =
          (coef[static_cast<std::size_t>(i)] - coef[static_cast<std::size_t>(i - 1)]) /
          mpq_class(xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - level)]);
  std::vector<mpq_class> poly{coef.back()};
  for (int i = samples - 2; i >= 0; --i) {
    // poly = poly * (t - x_i) + coef_i
    std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * xs[static_cast<std::size_t>(i)];
    }
    next[0] += coef[static_cast<std::size_t>(i)];
    poly = std::move(next);
  }
  LaurentPoly1 p;
  for (std::size_t d = 0; d < poly.size(); ++d) {
    if (poly[d] == 0) continue;
    if (poly[d].get_den() != 1 || static_cast<int>(d) > n)
      throw PolyError("Alexander interpolation is not an integer polynomial of degree <= n");
    p += LaurentPoly1::monomial(to_int64(poly[d].get_num()), static_cast<int>(d));
  }
  return alexander_data(p);
}

SignatureDet signature_and_det(const SeifertMatrix& v) {
  const int n = v.n;
  std::vector<mpq_class> m(static_cast<std::size_t>(n * n));
  auto at = [&](int i, int j) -> mpq_class& { return m[static_cast<std::size_t>(i * n + j)]; };
  std::vector<mpz_class> sym(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      at(i, j) = v.at(i, j) + v.at(j, i);
      sym[static_cast<std::size_t>(i * n + j)] = v.at(i, j) + v.at(j, i);
    }
  SignatureDet out;
  mpz_class det = bareiss_det(std::move(sym), n);
  if (det < 0) det = -det;
  out.determinant = to_int64(det);

  // Symmetric Gaussian elimination by congruence.
  for (int k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n && r < 0; ++i)
        if (at(i, i) != 0) r = i;
      if (r >= 0) {
        for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
        for (int i = 0; i < n; ++i) std::swap(at(i, k), at(i, r));
      } else {
        for (int i = k + 1; i < n && r < 0; ++i)
          if (at(k, i) != 0) r = i;
        if (r < 0) continue;  // row k is zero
        // add row/column r to k: new (k,k) = 2 m(k,r) since both diagonals vanish
        for (int j = 0; j < n; ++j) at(k, j) += at(r, j);
        for (int i = 0; i < n; ++i) at(i, k) += at(i, r);
      }
    }
    const mpq_class pivot = at(k, k);
    out.signature += pivot > 0 ? 1 : -1;
    for (int i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const mpq_class f = at(i, k) / pivot;
      for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
      for (int j = k; j < n; ++j) at(j, i) = at(i, j);
    }
  }
  return out;
}

SurfaceStats surface_stats(const FlatBasketCode& code) {
  const int comps = count_components(code);
  return {code.bands(), comps, (code.bands() - comps + 1) / 2};
}

}  // namespace fpb
