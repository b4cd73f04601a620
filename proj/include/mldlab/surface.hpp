#pragma once

// Point blow-ups over the origin of A^2. Every node stores the weak
// transforms of the ideal factors in local coordinates at its center, so
// further points on its exceptional curve can be blown up directly.
//
// Charts at a center with local coordinates (x, y):
//   direction (1, t): (x, y) = (x1, x1 (y1 + t)), new curve {x1 = 0}
//   direction (0, 1): (x, y) = (x1 y1, y1),        new curve {y1 = 0}
// An old exceptional curve {x = 0} through the center meets the new curve only
// at direction (0, 1); an old {y = 0} only at direction (1, 0).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mldlab/monomial.hpp"
#include "mldlab/poly2.hpp"
#include "mldlab/rational.hpp"
#include "mldlab/rideal.hpp"

namespace mldlab {

class IrrationalCenterError : public InputError {
 public:
  using InputError::InputError;
};

/// A point on an exceptional curve, as a tangent direction at the blown-up
/// center. (0, 0) stands for the origin itself.
struct Direction {
  Rat a = 0, b = 0;

  static Direction origin() { return {}; }
  static Direction chart_a(const Rat& t) { return {Rat(1), t}; }
  static Direction chart_b() { return {Rat(0), Rat(1)}; }

  bool is_origin() const { return a == 0 && b == 0; }
  bool in_chart_b() const { return a == 0 && b != 0; }
  Rat slope() const { return b / a; }

  Direction normalized() const {
    if (is_origin()) return *this;
    if (a == 0) return chart_b();
    return chart_a(b / a);
  }
  friend bool operator==(const Direction& p, const Direction& q) { return p.a == q.a && p.b == q.b; }
  std::string str() const { return "[" + to_string(a) + ":" + to_string(b) + "]"; }
};

struct SurfaceFactor {
  std::vector<Poly2> gens;
  Rat exp;
};

/// A product of ideals of Q[x, y] with nonnegative exponents, each vanishing at the origin.
class SurfaceIdeal {
 public:
  SurfaceIdeal() = default;
  explicit SurfaceIdeal(std::vector<SurfaceFactor> factors) : f_(std::move(factors)) {
    for (std::size_t j = 0; j < f_.size(); ++j) {
      const std::string path = "factors[" + std::to_string(j) + "]";
      if (f_[j].exp < 0) throw InputError(path + ".exp: exponent must be >= 0");
      if (f_[j].gens.empty()) throw InputError(path + ": no generators");
      for (std::size_t i = 0; i < f_[j].gens.size(); ++i) {
        if (f_[j].gens[i].is_zero()) throw InputError(path + ".gens[" + std::to_string(i) + "]: zero polynomial");
        if (!f_[j].gens[i].vanishes_at_origin())
          throw InputError(path + ": ideal does not vanish at the origin");
      }
    }
  }

  static SurfaceIdeal from_monomial(const RIdeal& a) {
    if (a.dim() != 2) throw InputError("surface engine works on A^2, got dimension " + std::to_string(a.dim()));
    std::vector<SurfaceFactor> f;
    for (const auto& fac : a.factors()) {
      SurfaceFactor s;
      for (const auto& g : fac.ideal.gens()) s.gens.push_back(Poly2::term(g.exps[0], g.exps[1]));
      s.exp = fac.exp;
      f.push_back(std::move(s));
    }
    return SurfaceIdeal(std::move(f));
  }

  const std::vector<SurfaceFactor>& factors() const { return f_; }
  std::size_t size() const { return f_.size(); }

 private:
  std::vector<SurfaceFactor> f_;
};

/// Weak transforms of every factor at a point, plus the exceptional curves
/// through it (always coordinate axes).
struct LocalData {
  std::vector<std::vector<Poly2>> gens;
  std::optional<int> div_x0, div_y0;

  int exceptional_count() const { return (div_x0 ? 1 : 0) + (div_y0 ? 1 : 0); }
};

struct BlowupNode {
  int id = 0;
  std::optional<int> parent;
  Direction point;
  std::vector<int> proximate_to;
  std::int64_t k = 0;
  std::vector<std::int64_t> mults;
  std::vector<std::int64_t> ords;
  std::int64_t ord_m = 0;
  std::int64_t self_int = -1;
  LocalData center;
};

/// A curve through the origin that is a fixed component of some factor.
/// `poly` may be reducible over Q; all its components share `mult`.
struct CurveComponent {
  Poly2 poly;
  std::vector<std::int64_t> mult;
};

struct BlowupChain {
  SurfaceIdeal ideal;
  std::vector<BlowupNode> nodes;
  std::set<std::pair<int, int>> edges;  // (smaller id, larger id)
  std::vector<CurveComponent> curves;
  bool resolved = false;

  const BlowupNode& node(int id) const {
    if (id < 0 || id >= static_cast<int>(nodes.size())) throw InputError("no node with id " + std::to_string(id));
    return nodes[id];
  }
  Rat ord_total(int id) const {
    Rat s = 0;
    for (std::size_t j = 0; j < ideal.size(); ++j) s += ideal.factors()[j].exp * Rat(static_cast<long>(node(id).ords[j]));
    return s;
  }
  /// a_E = k_E + 1 - sum_j exp_j ord_E(a_j)
  Rat log_discrepancy(int id) const { return Rat(static_cast<long>(node(id).k + 1)) - ord_total(id); }
  Rat curve_coefficient(std::size_t c) const {
    Rat s = 0;
    for (std::size_t j = 0; j < ideal.size(); ++j) s += ideal.factors()[j].exp * Rat(static_cast<long>(curves[c].mult[j]));
    return s;
  }
  std::vector<int> neighbors(int id) const {
    std::vector<int> out;
    for (const auto& [u, v] : edges) {
      if (u == id) out.push_back(v);
      if (v == id) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

inline int generator_mult(const std::vector<Poly2>& gens) {
  int m = -1;
  for (const auto& g : gens) m = m < 0 ? g.ord() : std::min(m, g.ord());
  return m;
}

/// Drops redundant generators: a constant makes the ideal a unit, repeated
/// generators collapse, and divisible monomials are removed.
inline std::vector<Poly2> simplify_generators(std::vector<Poly2> gens) {
  for (const auto& g : gens)
    if (g.is_constant()) return {Poly2::constant(1)};
  for (auto& g : gens) g = g.normalized();
  std::vector<Poly2> out;
  for (const auto& g : gens)
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  const bool monomial = std::all_of(out.begin(), out.end(), [](const Poly2& g) { return g.is_monomial(); });
  if (!monomial) return out;
  std::vector<Poly2> kept;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto ei = out[i].terms().begin()->first;
    bool dominated = false;
    for (std::size_t j = 0; j < out.size() && !dominated; ++j) {
      if (i == j) continue;
      const auto ej = out[j].terms().begin()->first;
      dominated = ej.first <= ei.first && ej.second <= ei.second;
    }
    if (!dominated) kept.push_back(out[i]);
  }
  return kept;
}

inline LocalData transform(const LocalData& c, int self_id, const Direction& d) {
  LocalData out;
  for (const auto& gens : c.gens) {
    const int m = generator_mult(gens);
    std::vector<Poly2> t;
    for (const auto& g : gens) t.push_back(d.in_chart_b() ? g.chart_b(m) : g.chart_a(d.slope(), m));
    out.gens.push_back(simplify_generators(std::move(t)));
  }
  if (d.in_chart_b()) {
    out.div_x0 = c.div_x0;
    out.div_y0 = self_id;
  } else {
    out.div_x0 = self_id;
    if (d.slope() == 0) out.div_y0 = c.div_y0;
  }
  return out;
}

struct FactorSplit {
  Poly2 fixed;                 // gcd of the generators
  std::vector<Poly2> cofactors;
};

inline FactorSplit split_factor(const std::vector<Poly2>& gens) {
  FactorSplit s;
  s.fixed = gcd(gens);
  for (const auto& g : gens) s.cofactors.push_back(*exact_div(g, s.fixed));
  return s;
}

/// Squarefree product of the fixed curves of all factors.
inline Poly2 curve_radical(const std::vector<FactorSplit>& splits) {
  Poly2 p = Poly2::constant(1);
  for (const auto& s : splits)
    if (!s.fixed.is_constant()) p = p * squarefree_part(s.fixed);
  return squarefree_part(p);
}

}  // namespace detail

/// True when the total transform is not yet a normal crossing divisor with
/// principal factors at the origin of these local coordinates.
inline bool needs_blowup(const LocalData& p) {
  std::vector<detail::FactorSplit> splits;
  for (const auto& gens : p.gens) {
    splits.push_back(detail::split_factor(gens));
    bool unit = false;
    for (const auto& c : splits.back().cofactors) unit = unit || !c.vanishes_at_origin();
    if (!unit) return true;
  }
  const Poly2 R = detail::curve_radical(splits);
  const int ord = R.ord() + p.exceptional_count();
  if (ord <= 1) return false;
  if (ord >= 3) return true;
  Poly2 cone = R.lowest_form();
  if (p.div_x0) cone = cone * Poly2::x();
  if (p.div_y0) cone = cone * Poly2::y();
  const Rat a = cone.coef(2, 0), b = cone.coef(1, 1), c = cone.coef(0, 2);
  return b * b - 4 * a * c == 0;
}

/// Local data at a point: the origin when `node` is empty, otherwise a point
/// of that node's exceptional curve.
inline LocalData point_data(const BlowupChain& chain, std::optional<int> node, const Direction& d) {
  if (!node) {
    LocalData root;
    for (const auto& f : chain.ideal.factors()) root.gens.push_back(detail::simplify_generators(f.gens));
    return root;
  }
  return detail::transform(chain.node(*node).center, *node, d.normalized());
}

inline BlowupChain start_chain(SurfaceIdeal a) {
  BlowupChain ch;
  ch.ideal = std::move(a);
  std::vector<Poly2> fixed;
  for (const auto& f : ch.ideal.factors()) fixed.push_back(gcd(f.gens));
  for (const auto& b : gcd_free_basis(fixed)) {
    if (!b.vanishes_at_origin()) continue;
    CurveComponent c{b, {}};
    for (const auto& g : fixed) c.mult.push_back(g.is_constant() ? 0 : multiplicity_in(b, g));
    ch.curves.push_back(std::move(c));
  }
  return ch;
}

/// Blows up the origin (node empty, direction (0,0)) or a point of the given
/// node's exceptional curve. Returns the new node id.
inline int blow_up_in_place(BlowupChain& chain, std::optional<int> node, Direction d) {
  d = d.normalized();
  if (!node) {
    if (!d.is_origin()) throw InputError("blow_up: the first center must be the origin");
    if (!chain.nodes.empty()) throw InputError("blow_up: the origin is already blown up");
  } else {
    chain.node(*node);
    if (d.is_origin()) throw InputError("blow_up: point " + d.str() + " is not on the exceptional curve of node " + std::to_string(*node));
    for (const auto& n : chain.nodes)
      if (n.parent == node && n.point == d)
        throw InputError("blow_up: point " + d.str() + " on node " + std::to_string(*node) + " is already blown up");
  }
  BlowupNode n;
  n.id = static_cast<int>(chain.nodes.size());
  n.parent = node;
  n.point = d;
  n.center = point_data(chain, node, d);
  if (n.center.div_x0) n.proximate_to.push_back(*n.center.div_x0);
  if (n.center.div_y0) n.proximate_to.push_back(*n.center.div_y0);
  std::sort(n.proximate_to.begin(), n.proximate_to.end());
  n.k = 1;
  n.ord_m = node ? 0 : 1;
  for (int p : n.proximate_to) {
    n.k += chain.nodes[p].k;
    n.ord_m += chain.nodes[p].ord_m;
  }
  for (std::size_t j = 0; j < n.center.gens.size(); ++j) {
    const std::int64_t m = detail::generator_mult(n.center.gens[j]);
    n.mults.push_back(m);
    std::int64_t o = m;
    for (int p : n.proximate_to) o += chain.nodes[p].ords[j];
    n.ords.push_back(o);
  }
  n.self_int = -1;
  for (int p : n.proximate_to) chain.nodes[p].self_int -= 1;
  if (n.proximate_to.size() == 2) chain.edges.erase({n.proximate_to[0], n.proximate_to[1]});
  for (int p : n.proximate_to) chain.edges.insert({std::min(p, n.id), std::max(p, n.id)});
  chain.nodes.push_back(std::move(n));
  chain.resolved = false;
  return chain.nodes.back().id;
}

inline BlowupChain blow_up(BlowupChain chain, std::optional<int> node, const Direction& d) {
  blow_up_in_place(chain, node, d);
  return chain;
}

/// Points of the exceptional curve of `node` that may need attention: where
/// it meets other exceptional curves, where fixed curves cross it, and base
/// points of the cofactor ideals. Throws IrrationalCenterError if such a point
/// is irrational and is not a simple crossing of one smooth curve.
inline std::vector<Direction> special_points(const BlowupChain& chain, int node) {
  const LocalData a = detail::transform(chain.node(node).center, node, Direction::chart_a(0));
  std::vector<Rat> ts{Rat(0)};
  std::vector<detail::FactorSplit> splits;
  for (std::size_t j = 0; j < a.gens.size(); ++j) {
    splits.push_back(detail::split_factor(a.gens[j]));
    UPoly base;
    for (const auto& c : splits.back().cofactors) base = gcd(base, c.restrict_x0());
    if (base.degree() <= 0) continue;
    for (const auto& [t, m] : rational_roots(base)) ts.push_back(t);
    if (strip_rational_roots(base).degree() > 0)
      throw IrrationalCenterError("factors[" + std::to_string(j) + "]: base point at an irrational point of exceptional curve " +
                                  std::to_string(node));
  }
  const UPoly r = detail::curve_radical(splits).restrict_x0();
  if (r.degree() > 0) {
    for (const auto& [t, m] : rational_roots(r)) ts.push_back(t);
    const UPoly rest = strip_rational_roots(r);
    if (rest.degree() > 0 && gcd(rest, rest.derivative()).degree() > 0)
      throw IrrationalCenterError("fixed curves meet exceptional curve " + std::to_string(node) +
                                  " non-transversally at an irrational point");
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Direction> out;
  for (const auto& t : ts) out.push_back(Direction::chart_a(t));
  out.push_back(Direction::chart_b());
  return out;
}

inline constexpr int kDefaultDepthCap = 64;

/// Blows up the origin, then breadth-first every point where the total
/// transform is not yet normal crossings with principal factors.
inline BlowupChain log_resolve(const SurfaceIdeal& a, int depth_cap = kDefaultDepthCap) {
  if (depth_cap < 1) throw InputError("depth cap must be >= 1");
  BlowupChain chain = start_chain(a);
  std::deque<std::pair<std::optional<int>, Direction>> queue{{std::nullopt, Direction::origin()}};
  while (!queue.empty()) {
    if (static_cast<int>(chain.nodes.size()) >= depth_cap)
      throw GuardError("log_resolve: depth cap of " + std::to_string(depth_cap) + " blow-ups reached");
    auto [parent, d] = queue.front();
    queue.pop_front();
    const int id = blow_up_in_place(chain, parent, d);
    for (const auto& q : special_points(chain, id))
      if (needs_blowup(point_data(chain, id, q))) queue.emplace_back(id, q);
  }
  chain.resolved = true;
  return chain;
}

/// mld at the origin from a log resolution. The witness node is the one with
/// the least a_E, ties broken by smaller k then id. When the pair fails to be
/// log canonical only along a curve through the origin, no node is reported.
inline MldResult mld_from_chain(const BlowupChain& chain) {
  if (chain.nodes.empty()) throw InputError("mld: empty chain");
  int best = 0;
  for (const auto& n : chain.nodes) {
    const Rat a = chain.log_discrepancy(n.id), b = chain.log_discrepancy(best);
    if (a < b || (a == b && n.k < chain.nodes[best].k)) best = n.id;
  }
  MldResult r;
  const Rat amin = chain.log_discrepancy(best);
  bool curve_neg = false;
  for (std::size_t c = 0; c < chain.curves.size(); ++c) curve_neg = curve_neg || chain.curve_coefficient(c) > 1;
  if (amin < 0) {
    int w = -1;
    for (const auto& n : chain.nodes)
      if (chain.log_discrepancy(n.id) < 0 && (w < 0 || n.k < chain.nodes[w].k)) w = n.id;
    best = w;
  }
  r.value = (amin < 0 || curve_neg) ? ExtRat::neg_inf() : ExtRat(amin);
  if (amin >= 0 && curve_neg) return r;
  r.node = best;
  r.k = chain.nodes[best].k;
  r.ord_m = chain.nodes[best].ord_m;
  return r;
}

inline MldResult mld_surface(const SurfaceIdeal& a, int depth_cap = kDefaultDepthCap) {
  return mld_from_chain(log_resolve(a, depth_cap));
}

/// lct at the origin: min of (k+1)/ord over exceptional nodes and 1/coefficient
/// over fixed curves through the origin.
inline MldResult lct_from_chain(const BlowupChain& chain) {
  MldResult r;
  r.value = ExtRat::pos_inf();
  for (const auto& n : chain.nodes) {
    const Rat o = chain.ord_total(n.id);
    if (o <= 0) continue;
    const ExtRat v(Rat(static_cast<long>(n.k + 1)) / o);
    if (v < r.value || (v == r.value && r.node && n.k < r.k)) {
      r.value = v;
      r.node = n.id;
      r.k = n.k;
      r.ord_m = n.ord_m;
    }
  }
  for (std::size_t c = 0; c < chain.curves.size(); ++c) {
    const Rat d = chain.curve_coefficient(c);
    if (d <= 0) continue;
    const ExtRat v(1 / d);
    if (v < r.value) {
      r.value = v;
      r.node.reset();
      r.k = 0;
      r.ord_m = 0;
    }
  }
  return r;
}

inline MldResult lct_surface(const SurfaceIdeal& a, int depth_cap = kDefaultDepthCap) {
  return lct_from_chain(log_resolve(a, depth_cap));
}

// ---------------------------------------------------------------------------
// Checks on chains

struct ConvexityViolation {
  int center, left, right;
  Rat a_center, a_left, a_right;
};

struct ConvexityReport {
  bool premise = true;  // log canonical at the origin and every exceptional a_E <= 1
  std::size_t triples = 0;
  std::vector<ConvexityViolation> violations;
};

/// a_1 <= (a_2 + a_3) / 2 for every E_1 with E_1^2 <= -2 and distinct
/// neighbours E_2, E_3. Skipped (premise = false) when the pair is not log
/// canonical or some a_E > 1.
inline ConvexityReport check_convexity(const BlowupChain& chain) {
  if (!chain.resolved) throw InputError("check_convexity: chain is not resolved");
  ConvexityReport rep;
  rep.premise = !mld_from_chain(chain).value.is_neg_inf();
  for (const auto& n : chain.nodes)
    if (chain.log_discrepancy(n.id) > 1) rep.premise = false;
  if (!rep.premise) return rep;
  for (const auto& n : chain.nodes) {
    if (n.self_int > -2) continue;
    const auto nb = chain.neighbors(n.id);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        ++rep.triples;
        const Rat a1 = chain.log_discrepancy(n.id), a2 = chain.log_discrepancy(nb[i]), a3 = chain.log_discrepancy(nb[j]);
        if (2 * a1 > a2 + a3) rep.violations.push_back({n.id, nb[i], nb[j], a1, a2, a3});
      }
  }
  return rep;
}

struct KBoundReport {
  std::int64_t k_last = 0;
  std::int64_t bound = 0;  // 2^(n-1)
  bool k_ok = false;
  bool ord_ok = false;  // ord_{E_{n-1}}(pullback of E_i) <= 2^(n-1-i) for all i
  bool ok() const { return k_ok && ord_ok; }
};

/// For a linear chain (node i+1 centered on the curve of node i).
inline KBoundReport check_k_bound(const BlowupChain& chain) {
  const int n = static_cast<int>(chain.nodes.size());
  if (n == 0) throw InputError("check_k_bound: empty chain");
  for (int i = 0; i < n; ++i)
    if (chain.nodes[i].parent != (i == 0 ? std::optional<int>{} : std::optional<int>{i - 1}))
      throw InputError("check_k_bound: node " + std::to_string(i) + " is not centered on the previous exceptional curve");
  if (n > 62) throw GuardError("check_k_bound: chain too long for 64-bit bounds");
  KBoundReport rep;
  rep.k_last = chain.nodes.back().k;
  rep.bound = std::int64_t{1} << (n - 1);
  rep.k_ok = rep.k_last <= rep.bound;
  // c[i][m] = coefficient of E_m in the total transform of E_i
  rep.ord_ok = true;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> c(n, 0);
    c[i] = 1;
    for (int m = i + 1; m < n; ++m)
      for (int p : chain.nodes[m].proximate_to) c[m] += c[p];
    if (c[n - 1] > (std::int64_t{1} << (n - 1 - i))) rep.ord_ok = false;
  }
  return rep;
}

/// The point where the curve of `node` meets the curve of `other`.
inline Direction satellite_direction(const BlowupChain& chain, int node, int other) {
  const auto& c = chain.node(node).center;
  if (c.div_y0 == other) return Direction::chart_a(0);
  if (c.div_x0 == other) return Direction::chart_b();
  throw InputError("curve " + std::to_string(other) + " does not meet curve " + std::to_string(node));
}

/// A point of the curve of `node` lying on no other exceptional curve.
inline Direction free_direction() { return Direction::chart_a(1); }

/// Chain of toric blow-ups ending at the divisor with monomial valuation of
/// weight v; returns the chain and that node.
inline std::pair<BlowupChain, int> toric_weight_chain(std::int64_t v1, std::int64_t v2, SurfaceIdeal a = {}) {
  if (v1 < 1 || v2 < 1) throw InputError("toric_weight_chain: weights must be positive");
  if (std::gcd(v1, v2) != 1)
    throw InputError("toric_weight_chain: weight must be primitive");
  BlowupChain ch = start_chain(std::move(a));
  using W = std::pair<std::int64_t, std::int64_t>;
  const auto cross = [](const W& p, const W& q) { return p.first * q.second - p.second * q.first; };
  W wx{1, 0}, wy{0, 1};
  int id = blow_up_in_place(ch, std::nullopt, Direction::origin());
  const W target{v1, v2};
  while (true) {
    const W we{wx.first + wy.first, wx.second + wy.second};
    if (we == target) return {std::move(ch), id};
    if (cross(we, target) > 0) {
      wx = we;
      id = blow_up_in_place(ch, id, Direction::chart_a(0));
    } else {
      wy = we;
      id = blow_up_in_place(ch, id, Direction::chart_b());
    }
  }
}

}  // namespace mldlab
