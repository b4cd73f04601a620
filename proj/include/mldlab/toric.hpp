#pragma once

// Minimal log discrepancies and log canonical thresholds of monomial
// R-ideals at the origin of A^n, computed over toric divisors (weight
// vectors). The objective
//
//   f(v) = sum_i v_i - sum_j lambda_j * min_{m in G_j} <v, m>
//
// is convex, piecewise linear and positively homogeneous. On each cone where
// the minimizing generator of every factor is fixed (a "selection") it is
// linear, so vertices and extreme rays of those cones give exact bounds.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mldlab/monomial.hpp"
#include "mldlab/polyhedral.hpp"
#include "mldlab/rational.hpp"
#include "mldlab/rideal.hpp"

namespace mldlab {

struct ToricProblem {
  RIdeal a;
  int dim() const { return a.dim(); }
};

enum class SearchMode { kExactLp, kOracle };

struct SearchConfig {
  /// Cap on sum(v) for the brute-force oracle; 0 selects the default bound.
  std::int64_t oracle_bound = 0;
  SearchMode mode = SearchMode::kExactLp;
};

// ---------------------------------------------------------------------------
// Basic valuations

inline std::int64_t ord_weight(const std::vector<std::int64_t>& v, const MonomialIdeal& I) {
  if (static_cast<int>(v.size()) != I.dim()) throw InputError("ord_weight: dimension mismatch");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& g : I.gens()) {
    std::int64_t s = 0;
    for (int i = 0; i < I.dim(); ++i) s += v[i] * g.exps[i];
    best = std::min(best, s);
  }
  return best;
}

inline std::int64_t ord_weight(const WeightVector& v, const MonomialIdeal& I) { return ord_weight(v.values(), I); }

/// ord_v(a) = sum_j lambda_j ord_v(a_j).
inline Rat ord_weight(const std::vector<std::int64_t>& v, const RIdeal& a) {
  Rat s = 0;
  for (const auto& f : a.factors()) s += f.exp * Rat(static_cast<long>(ord_weight(v, f.ideal)));
  return s;
}

/// a_E(A^n, a) = k_E + 1 - ord_E(a) for the toric divisor E of weight v.
inline Rat log_discrepancy(const WeightVector& v, const RIdeal& a) {
  if (v.dim() != a.dim()) throw InputError("log_discrepancy: dimension mismatch");
  return Rat(static_cast<long>(v.discrepancy() + 1)) - ord_weight(v.values(), a);
}

/// Visits vectors of length n with entries >= lo and entry sum s, in
/// lexicographically ascending order. Stops early if fn returns false.
template <class Fn>
bool for_each_vector_with_sum(int n, std::int64_t s, std::int64_t lo, Fn&& fn) {
  std::vector<std::int64_t> v(n, lo);
  auto rec = [&](auto& self, int i, std::int64_t left) -> bool {
    if (i == n - 1) {
      v[i] = left;
      return fn(static_cast<const std::vector<std::int64_t>&>(v));
    }
    const std::int64_t rest_min = lo * (n - 1 - i);
    for (std::int64_t a = lo; a <= left - rest_min; ++a) {
      v[i] = a;
      if (!self(self, i + 1, left - a)) return false;
    }
    return true;
  };
  if (s < lo * n) return true;
  return rec(rec, 0, s);
}

namespace detail {

using i128 = __int128;

/// The objective scaled by a common denominator D so that it is integral:
/// F(v) = D * sum(v) - sum_j Lambda_j min_g <v, g>, Lambda_j = D * lambda_j.
struct ScaledObjective {
  int n = 0;
  std::int64_t denom = 1;
  std::vector<std::int64_t> lambda;
  std::vector<std::vector<std::vector<std::int64_t>>> gens;
  /// Generators that are vertices of the Newton polyhedron; only these can
  /// be the unique minimizer, so selections range over them.
  std::vector<std::vector<std::vector<std::int64_t>>> corners;

  explicit ScaledObjective(const RIdeal& a) : n(a.dim()) {
    BigInt d = 1;
    for (const auto& f : a.factors())
      if (f.exp > 0 && !f.ideal.is_unit()) d = lcm(d, BigInt(f.exp.get_den()));
    denom = to_int64(d);
    for (const auto& f : a.factors()) {
      if (f.exp == 0 || f.ideal.is_unit()) continue;
      Rat scaled = f.exp * Rat(d);
      lambda.push_back(to_int64(scaled.get_num()));
      std::vector<std::vector<std::int64_t>> g;
      for (const auto& m : f.ideal.gens()) g.emplace_back(m.exps.begin(), m.exps.end());
      corners.push_back(newton_vertices(g, n));
      gens.push_back(std::move(g));
    }
  }

  static std::vector<std::vector<std::int64_t>> newton_vertices(const std::vector<std::vector<std::int64_t>>& g, int n) {
    if (g.size() == 1) return g;
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<poly::HalfSpace> rows;
      for (int i = 0; i < n; ++i) {
        poly::HalfSpace h;
        h.a.assign(n, 0);
        h.a[i] = 1;
        rows.push_back(std::move(h));
      }
      for (std::size_t o = 0; o < g.size(); ++o) {
        if (o == k) continue;
        poly::HalfSpace h;
        for (int i = 0; i < n; ++i) h.a.push_back(g[o][i] - g[k][i]);
        h.b = 1;
        rows.push_back(std::move(h));
      }
      if (!poly::vertices(rows, n).empty()) out.push_back(g[k]);
    }
    return out;
  }

  std::size_t factor_count() const { return lambda.size(); }

  i128 ord(const std::vector<std::int64_t>& v) const {
    i128 total = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      i128 best = std::numeric_limits<std::int64_t>::max();
      for (const auto& g : gens[j]) {
        i128 s = 0;
        for (int i = 0; i < n; ++i) s += static_cast<i128>(v[i]) * g[i];
        best = std::min(best, s);
      }
      total += lambda[j] * best;
    }
    return total;
  }

  i128 eval(const std::vector<std::int64_t>& v) const {
    i128 s = 0;
    for (auto x : v) s += x;
    return denom * s - ord(v);
  }
};

/// One linearity cone of the objective: generator `choice[j]` of factor j
/// attains the minimum.
struct Selection {
  std::vector<std::size_t> choice;
  std::vector<std::int64_t> ord_coeffs;  // sum_j Lambda_j g_{choice_j}
  std::vector<poly::HalfSpace> consistency;
};

template <class Fn>
void for_each_selection(const ScaledObjective& obj, Fn&& fn) {
  const int n = obj.n;
  Selection sel;
  sel.choice.assign(obj.factor_count(), 0);
  auto rec = [&](auto& self, std::size_t j) -> void {
    if (j == obj.factor_count()) {
      sel.ord_coeffs.assign(n, 0);
      sel.consistency.clear();
      for (std::size_t f = 0; f < obj.factor_count(); ++f) {
        const auto& chosen = obj.corners[f][sel.choice[f]];
        for (int i = 0; i < n; ++i) sel.ord_coeffs[i] += obj.lambda[f] * chosen[i];
        for (std::size_t o = 0; o < obj.corners[f].size(); ++o) {
          if (o == sel.choice[f]) continue;
          poly::HalfSpace h;
          for (int i = 0; i < n; ++i) h.a.push_back(obj.corners[f][o][i] - chosen[i]);
          sel.consistency.push_back(std::move(h));
        }
      }
      fn(static_cast<const Selection&>(sel));
      return;
    }
    for (std::size_t c = 0; c < obj.corners[j].size(); ++c) {
      sel.choice[j] = c;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

inline std::vector<poly::HalfSpace> orthant_rows(int n, std::int64_t rhs) {
  std::vector<poly::HalfSpace> rows;
  for (int i = 0; i < n; ++i) {
    poly::HalfSpace h;
    h.a.assign(n, 0);
    h.a[i] = 1;
    h.b = rhs;
    rows.push_back(std::move(h));
  }
  return rows;
}

inline std::vector<std::vector<std::int64_t>> cone_rays(const Selection& s, int n) {
  auto rows = orthant_rows(n, 0);
  rows.insert(rows.end(), s.consistency.begin(), s.consistency.end());
  return poly::extreme_rays(rows, n);
}

inline i128 dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<i128>(a[i]) * b[i];
  return s;
}

inline std::int64_t sum(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

inline Rat to_rat(i128 num, std::int64_t den) {
  const bool neg = num < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(num) : static_cast<unsigned __int128>(num);
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  } while (u != 0);
  if (neg) s.insert(s.begin(), '-');
  return make_rat(BigInt(s), BigInt(den));
}

inline MldResult toric_result(ExtRat value, const std::vector<std::int64_t>& w) {
  MldResult r;
  r.value = std::move(value);
  r.weight = w;
  r.k = sum(w) - 1;
  r.ord_m = *std::min_element(w.begin(), w.end());
  return r;
}

/// First strictly positive v in (sum, lex) order with f(v) < 0, given that
/// one exists. `ray` is a cone direction on which f is negative.
inline std::vector<std::int64_t> first_negative_point(const ScaledObjective& obj,
                                                      const std::vector<std::vector<std::int64_t>>& neg_rays) {
  const int n = obj.n;
  const std::vector<std::int64_t> ones(n, 1);
  const i128 f_ones = obj.eval(ones);
  // f is subadditive, so f(t*r + 1) <= t f(r) + f(1) < 0 once t is large.
  std::int64_t limit = std::numeric_limits<std::int64_t>::max();
  for (const auto& r : neg_rays) {
    const i128 fr = obj.eval(r);
    i128 t = f_ones < 0 ? 0 : f_ones / (-fr) + 1;
    i128 total = t * sum(r) + n;
    if (total < limit) limit = static_cast<std::int64_t>(total);
  }
  for (std::int64_t s = n; s <= limit; ++s) {
    std::optional<std::vector<std::int64_t>> hit;
    for_each_vector_with_sum(n, s, 1, [&](const std::vector<std::int64_t>& v) {
      if (obj.eval(v) < 0) {
        hit = v;
        return false;
      }
      return true;
    });
    if (hit) return *hit;
  }
  throw std::logic_error("first_negative_point: no negative point below the certified bound");
}

}  // namespace detail

/// Brute force over all v > 0 with sum(v) <= B. Kept independent of the
/// cone machinery; used to cross-check mld_monomial.
inline MldResult mld_oracle(const ToricProblem& p, std::int64_t bound) {
  const int n = p.dim();
  if (bound < n) throw InputError("mld_oracle: bound must be >= n");
  // log discrepancy times the lcm of exponent denominators
  BigInt d = 1;
  for (const auto& f : p.a.factors()) d = lcm(d, BigInt(f.exp.get_den()));
  std::vector<std::int64_t> scaled_exp;
  for (const auto& f : p.a.factors()) scaled_exp.push_back(to_int64(Rat(f.exp * Rat(d)).get_num()));
  const std::int64_t denom = to_int64(d);
  auto scaled_ld = [&](const std::vector<std::int64_t>& v) {
    __int128 val = 0;
    for (auto x : v) val += x;
    val *= denom;
    for (std::size_t j = 0; j < p.a.factors().size(); ++j)
      val -= static_cast<__int128>(scaled_exp[j]) * ord_weight(v, p.a.factors()[j].ideal);
    return val;
  };
  std::optional<std::vector<std::int64_t>> best;
  __int128 best_val = 0;
  bool negative = false;
  for (std::int64_t s = n; s <= bound && !negative; ++s) {
    for_each_vector_with_sum(n, s, 1, [&](const std::vector<std::int64_t>& v) {
      __int128 val = scaled_ld(v);
      if (!best || val < best_val) {
        best = v;
        best_val = val;
      }
      if (val < 0) {
        negative = true;
        return false;
      }
      return true;
    });
  }
  if (negative) return detail::toric_result(ExtRat::neg_inf(), *best);
  MldResult r = detail::toric_result(ExtRat(detail::to_rat(best_val, denom)), *best);
  r.certified = detail::sum(*best) < bound;
  return r;
}

/// Default oracle cap: 4 * (max generator degree) * (1 + sum of exponents),
/// and never so small that (1,...,1) sits on the boundary shell.
inline std::int64_t default_oracle_bound(const ToricProblem& p) {
  int maxdeg = 0;
  for (const auto& f : p.a.factors()) maxdeg = std::max(maxdeg, f.ideal.max_degree());
  Rat b = Rat(4 * maxdeg) * (Rat(1) + p.a.exponent_sum());
  return std::max<std::int64_t>(to_int64(ceil_div(b)), p.dim() + 1);
}

/// mld_0(A^n, a) over toric divisors. The witness minimizes the log
/// discrepancy, then sum(v), then v lexicographically. For non-log-canonical
/// inputs the value is -inf and the witness is the first v in (sum, lex)
/// order with negative log discrepancy.
inline MldResult mld_monomial(const ToricProblem& p, const SearchConfig& cfg = {}) {
  if (cfg.mode == SearchMode::kOracle)
    return mld_oracle(p, cfg.oracle_bound > 0 ? cfg.oracle_bound : default_oracle_bound(p));

  using detail::i128;
  const int n = p.dim();
  const detail::ScaledObjective obj(p.a);
  const std::vector<std::int64_t> ones(n, 1);

  struct Region {
    Rat lower;             // LP minimum of f over the region
    std::int64_t reach;    // minimal-sum minimizers in the region have sum <= reach
  };
  std::vector<Region> regions;
  std::vector<std::vector<std::int64_t>> negative_rays;

  detail::for_each_selection(obj, [&](const detail::Selection& s) {
    std::vector<std::int64_t> c(n);
    for (int i = 0; i < n; ++i) c[i] = obj.denom - s.ord_coeffs[i];
    const auto rays = detail::cone_rays(s, n);
    for (const auto& r : rays)
      if (detail::dot(c, r) < 0) negative_rays.push_back(r);
    if (!negative_rays.empty()) return;

    auto rows = detail::orthant_rows(n, 1);
    rows.insert(rows.end(), s.consistency.begin(), s.consistency.end());
    const auto verts = poly::vertices(rows, n);
    if (verts.empty()) return;
    Rat lower, top_sum;
    bool first = true;
    for (const auto& q : verts) {
      Rat val = detail::to_rat(detail::dot(c, q.num), q.den * obj.denom);
      Rat qs = q.sum();
      if (first || val < lower) lower = val;
      if (first || qs > top_sum) top_sum = qs;
      first = false;
    }
    // A minimal-sum minimizer is q + sum of fractional multiples of at most
    // n extreme rays; otherwise subtracting a ray keeps it optimal.
    std::vector<std::int64_t> ray_sums;
    for (const auto& r : rays) ray_sums.push_back(detail::sum(r));
    std::sort(ray_sums.rbegin(), ray_sums.rend());
    std::int64_t reach = to_int64(floor_div(top_sum));
    for (int i = 0; i < n && i < static_cast<int>(ray_sums.size()); ++i) reach += ray_sums[i];
    regions.push_back({lower, reach});
  });

  if (!negative_rays.empty())
    return detail::toric_result(ExtRat::neg_inf(), detail::first_negative_point(obj, negative_rays));

  std::vector<std::int64_t> best = ones;
  i128 best_val = obj.eval(ones);
  auto horizon = [&]() {
    const Rat best_rat = detail::to_rat(best_val, obj.denom);
    std::int64_t h = 0;
    for (const auto& r : regions)
      if (r.lower <= best_rat) h = std::max(h, r.reach);
    return h;
  };
  std::int64_t limit = horizon();
  for (std::int64_t s = n + 1; s <= limit; ++s) {
    bool improved = false;
    for_each_vector_with_sum(n, s, 1, [&](const std::vector<std::int64_t>& v) {
      i128 val = obj.eval(v);
      if (val < best_val) {
        best_val = val;
        best = v;
        improved = true;
      }
      return true;
    });
    if (improved) limit = horizon();
  }
  return detail::toric_result(ExtRat(detail::to_rat(best_val, obj.denom)), best);
}

/// lct_0(A^n, a) over toric divisors whose center contains the origin, i.e.
/// weights v in Z_{>=0}^n \ {0}. +inf when ord_v(a) = 0 for every v.
inline MldResult lct_monomial(const ToricProblem& p, const SearchConfig& cfg = {}) {
  (void)cfg;
  using detail::i128;
  const int n = p.dim();
  const detail::ScaledObjective obj(p.a);
  std::optional<Rat> best;
  std::int64_t reach = 0;
  detail::for_each_selection(obj, [&](const detail::Selection& s) {
    for (const auto& r : detail::cone_rays(s, n)) {
      i128 o = detail::dot(s.ord_coeffs, r);
      if (o <= 0) continue;
      Rat ratio = detail::to_rat(static_cast<i128>(detail::sum(r)) * obj.denom, 1) / detail::to_rat(o, 1);
      if (!best || ratio < *best) {
        best = ratio;
        reach = detail::sum(r);
      } else if (ratio == *best) {
        reach = std::min(reach, detail::sum(r));
      }
    }
  });
  MldResult res;
  if (!best) {
    res.value = ExtRat::pos_inf();
    return res;
  }
  // Smallest (sum, lex) integer point on which the ratio is attained.
  const Rat target = *best;
  std::optional<std::vector<std::int64_t>> w;
  for (std::int64_t s = 1; s <= reach && !w; ++s) {
    for_each_vector_with_sum(n, s, 0, [&](const std::vector<std::int64_t>& v) {
      i128 o = obj.ord(v);
      if (o > 0 && detail::to_rat(static_cast<i128>(s) * obj.denom, 1) == target * detail::to_rat(o, 1)) {
        w = v;
        return false;
      }
      return true;
    });
  }
  if (!w) throw std::logic_error("lct_monomial: minimizing ray not found");
  return detail::toric_result(ExtRat(target), *w);
}

/// The delta > 0 with mld_0(a * m^delta) = 0, namely the minimum of
/// a_E(a) / ord_E(m) over toric E. Requires mld_0(a) > 0.
inline Rat delta_threshold(const ToricProblem& p, const SearchConfig& cfg = {}) {
  const MldResult m = mld_monomial(p, cfg);
  if (!m.value.is_finite() || m.value.value() <= 0)
    throw InputError("delta_threshold: requires mld > 0, got " + m.value.str());
  using detail::i128;
  const int n = p.dim();
  const detail::ScaledObjective obj(p.a);
  std::optional<Rat> best;
  detail::for_each_selection(obj, [&](const detail::Selection& s) {
    std::vector<std::int64_t> c(n);
    for (int i = 0; i < n; ++i) c[i] = obj.denom - s.ord_coeffs[i];
    for (int lo = 0; lo < n; ++lo) {
      // refine by which coordinate realizes ord(m) = min_i v_i
      auto rows = detail::orthant_rows(n, 0);
      rows.insert(rows.end(), s.consistency.begin(), s.consistency.end());
      for (int i = 0; i < n; ++i) {
        if (i == lo) continue;
        poly::HalfSpace h;
        h.a.assign(n, 0);
        h.a[i] = 1;
        h.a[lo] = -1;
        rows.push_back(std::move(h));
      }
      for (const auto& r : poly::extreme_rays(rows, n)) {
        if (r[lo] == 0) continue;
        Rat ratio = detail::to_rat(detail::dot(c, r), obj.denom) / Rat(static_cast<long>(r[lo]));
        if (!best || ratio < *best) best = ratio;
      }
    }
  });
  if (!best) throw std::logic_error("delta_threshold: no candidate ray");
  const ToricProblem shifted{p.a.times(MonomialIdeal::maximal(n), *best)};
  const MldResult check = mld_monomial(shifted, cfg);
  if (check.value != ExtRat(Rat(0)))
    throw GuardError("delta_threshold: post-check failed, mld(a * m^delta) = " + check.value.str());
  return *best;
}

// ---------------------------------------------------------------------------
// Boundedness probe

/// prod_j (a_j + m^d)^{lambda_j}.
inline RIdeal truncated(const RIdeal& a, int d) {
  if (d < 1) throw InputError("truncated: d must be >= 1");
  auto f = a.factors();
  for (auto& x : f) x.ideal = sum_with_power_of_max_ideal(x.ideal, d);
  return RIdeal(a.dim(), std::move(f));
}

/// Smallest d with d * ord_v(m) >= ord_v(a_j) for every factor.
inline int truncation_degree(const std::vector<std::int64_t>& v, const RIdeal& a) {
  const auto om = *std::min_element(v.begin(), v.end());
  std::int64_t d = 1;
  for (const auto& f : a.factors()) d = std::max(d, (ord_weight(v, f.ideal) + om - 1) / om);
  if (d > 1000000) throw GuardError("truncation_degree: degree too large");
  return static_cast<int>(d);
}

struct BoundednessReport {
  std::vector<MldResult> entries;
  std::int64_t max_k = 0;
  std::int64_t max_ord_m = 0;
  std::size_t comparable_pairs = 0;
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // (larger, smaller) with mld increasing
  bool all_certified = true;

  bool weakly_decreasing() const { return violations.empty(); }
};

/// True iff the factors of `small` are factorwise contained in those of
/// `big` with identical exponents.
inline bool factorwise_contained(const RIdeal& big, const RIdeal& small) {
  if (big.factors().size() != small.factors().size() || big.dim() != small.dim()) return false;
  for (std::size_t j = 0; j < big.factors().size(); ++j) {
    if (big.factors()[j].exp != small.factors()[j].exp) return false;
    if (!ideal_contains(big.factors()[j].ideal, small.factors()[j].ideal)) return false;
  }
  return true;
}

/// Witness statistics over a family, plus a check that mld values weakly
/// decrease along factorwise ideal containment.
inline BoundednessReport boundedness_probe(const std::vector<ToricProblem>& family, const SearchConfig& cfg = {}) {
  if (family.empty()) throw InputError("boundedness_probe: empty family");
  const int n = family.front().dim();
  for (const auto& p : family)
    if (p.dim() != n) throw InputError("boundedness_probe: mixed dimensions");
  BoundednessReport rep;
  for (const auto& p : family) {
    MldResult r = mld_monomial(p, cfg);
    rep.max_k = std::max(rep.max_k, r.k);
    rep.max_ord_m = std::max(rep.max_ord_m, r.ord_m);
    rep.all_certified = rep.all_certified && r.certified;
    rep.entries.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j || !factorwise_contained(family[i].a, family[j].a)) continue;
      ++rep.comparable_pairs;
      if (rep.entries[j].value > rep.entries[i].value) rep.violations.emplace_back(i, j);
    }
  return rep;
}

}  // namespace mldlab
