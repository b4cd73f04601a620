#pragma once

// Small exact polyhedral toolkit: vertices and extreme rays of polyhedra
// {v : A v >= b} given by integer rows, by enumeration of tight subsystems.
// Intended for the low dimensions (n <= 5) and few rows seen here.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "mldlab/rational.hpp"

namespace mldlab::poly {

using i128 = __int128;

/// The constraint a . v >= b.
struct HalfSpace {
  std::vector<std::int64_t> a;
  std::int64_t b = 0;
};

/// A rational point num / den with den > 0.
struct RatPoint {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;

  Rat coord(std::size_t i) const { return make_rat(num[i], den); }
  Rat sum() const {
    i128 s = 0;
    for (auto x : num) s += x;
    return make_rat(BigInt(std::to_string(static_cast<long long>(s))), BigInt(den));
  }
  friend bool operator<(const RatPoint& x, const RatPoint& y) {
    return std::tie(x.num, x.den) < std::tie(y.num, y.den);
  }
};

namespace detail {

inline std::int64_t narrow(i128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw GuardError("polyhedral arithmetic overflow");
  return static_cast<std::int64_t>(x);
}

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline i128 determinant(std::vector<std::vector<i128>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  i128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Calls fn(indices) for every k-subset of {0..m-1}.
template <class Fn>
void for_each_subset(std::size_t m, std::size_t k, Fn&& fn) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool satisfies(const std::vector<HalfSpace>& rows, const std::vector<i128>& num, i128 den) {
  for (const auto& h : rows) {
    i128 s = 0;
    for (std::size_t i = 0; i < num.size(); ++i) s += static_cast<i128>(h.a[i]) * num[i];
    if (s < static_cast<i128>(h.b) * den) return false;
  }
  return true;
}

}  // namespace detail

/// Vertices of {v in R^n : rows}. The polyhedron must be pointed.
inline std::vector<RatPoint> vertices(const std::vector<HalfSpace>& rows, int n) {
  using namespace detail;
  std::set<RatPoint> out;
  for_each_subset(rows.size(), static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a[r][c] = rows[idx[r]].a[c];
    i128 det = determinant(a);
    if (det == 0) return;
    std::vector<i128> num(n);
    for (int c = 0; c < n; ++c) {
      auto ac = a;
      for (int r = 0; r < n; ++r) ac[r][c] = rows[idx[r]].b;
      num[c] = determinant(std::move(ac));
    }
    if (det < 0) {
      det = -det;
      for (auto& x : num) x = -x;
    }
    i128 g = det;
    for (auto x : num) g = gcd128(g, x);
    det /= g;
    for (auto& x : num) x /= g;
    if (!satisfies(rows, num, det)) return;
    RatPoint p;
    p.den = narrow(det);
    for (auto x : num) p.num.push_back(narrow(x));
    out.insert(std::move(p));
  });
  return {out.begin(), out.end()};
}

/// Primitive integer generators of the extreme rays of the pointed cone
/// {v : a . v >= 0 for every row} (right-hand sides are ignored).
inline std::vector<std::vector<std::int64_t>> extreme_rays(const std::vector<HalfSpace>& rows, int n) {
  using namespace detail;
  std::set<std::vector<std::int64_t>> out;
  std::vector<HalfSpace> cone = rows;
  for (auto& h : cone) h.b = 0;
  for_each_subset(rows.size(), static_cast<std::size_t>(n - 1), [&](const std::vector<std::size_t>& idx) {
    // Generalized cross product: the kernel of an (n-1) x n matrix of rank n-1.
    std::vector<i128> dir(n);
    bool nonzero = false;
    for (int skip = 0; skip < n; ++skip) {
      std::vector<std::vector<i128>> minor(n - 1, std::vector<i128>(n - 1));
      for (int r = 0; r < n - 1; ++r)
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == skip) continue;
          minor[r][cc++] = rows[idx[r]].a[c];
        }
      i128 d = determinant(std::move(minor));
      dir[skip] = (skip % 2 == 0) ? d : -d;
      nonzero = nonzero || d != 0;
    }
    if (!nonzero) return;
    i128 g = 0;
    for (auto x : dir) g = gcd128(g, x);
    for (auto& x : dir) x /= g;
    for (int sgn : {1, -1}) {
      std::vector<i128> cand(n);
      for (int i = 0; i < n; ++i) cand[i] = sgn * dir[i];
      if (!satisfies(cone, cand, 1)) continue;
      std::vector<std::int64_t> r;
      for (auto x : cand) r.push_back(narrow(x));
      out.insert(std::move(r));
    }
  });
  return {out.begin(), out.end()};
}

}  // namespace mldlab::poly
