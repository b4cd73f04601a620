#pragma once

// Polynomials over Q in one and two variables: just enough algebra for point
// blow-ups on the plane (chart substitutions, gcds, squarefree parts,
// rational roots).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mldlab/rational.hpp"

namespace mldlab {

// ---------------------------------------------------------------------------
// Univariate

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const Rat& a) { return UPoly({a}); }
  static UPoly monomial(int d, const Rat& a = 1) {
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
    c.back() = a;
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& lc() const { return c_.back(); }
  Rat coef(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
  const std::vector<Rat>& coefs() const { return c_; }

  Rat eval(const Rat& t) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
  }

  UPoly derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    const Rat l = lc();
    for (auto& a : r.c_) a /= l;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// (quotient, remainder)
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
    std::vector<Rat> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, Rat(0));
    std::vector<Rat> r = a.c_;
    const int db = b.degree();
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
      if (r[i] == 0) continue;
      const Rat f = r[i] / b.lc();
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string str(char var = 't') const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_string(c_[i]) + ")";
      if (i > 0) s += std::string("*") + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > BigInt("100000000000000")) throw GuardError("rational_roots: coefficient too large to factor");
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Distinct rational roots in increasing order, with multiplicities.
inline std::vector<std::pair<Rat, int>> rational_roots(UPoly p) {
  if (p.is_zero()) throw InputError("rational_roots: zero polynomial");
  std::vector<std::pair<Rat, int>> out;
  int zero_mult = 0;
  while (p.degree() > 0 && p.coef(0) == 0) {
    p = divmod(p, UPoly::monomial(1)).first;
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(Rat(0), zero_mult);
  if (p.degree() > 0) {
    BigInt den = 1;
    for (const auto& c : p.coefs()) den = lcm(den, BigInt(c.get_den()));
    std::vector<BigInt> a;
    for (const auto& c : p.coefs()) a.push_back(BigInt(c * Rat(den)));
    const auto ps = detail::positive_divisors(a.front());
    const auto qs = detail::positive_divisors(a.back());
    std::vector<Rat> cands;
    for (const auto& num : ps)
      for (const auto& q : qs) {
        Rat r(num, q);
        r.canonicalize();
        cands.push_back(r);
        cands.push_back(-r);
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands) {
      if (p.eval(r) != 0) continue;
      int m = 0;
      const UPoly lin({-r, Rat(1)});
      while (p.degree() > 0 && p.eval(r) == 0) {
        p = divmod(p, lin).first;
        ++m;
      }
      out.emplace_back(r, m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// p divided by all its linear factors over Q.
inline UPoly strip_rational_roots(UPoly p) {
  for (const auto& [r, m] : rational_roots(p))
    for (int i = 0; i < m; ++i) p = divmod(p, UPoly({-r, Rat(1)})).first;
  return p;
}

// ---------------------------------------------------------------------------
// Bivariate

class Poly2 {
 public:
  using Exp = std::pair<int, int>;  // (degree in x, degree in y)

  Poly2() = default;
  static Poly2 constant(const Rat& c) { return term(0, 0, c); }
  static Poly2 term(int dx, int dy, const Rat& c = 1) {
    if (dx < 0 || dy < 0) throw InputError("Poly2: negative exponent");
    Poly2 p;
    if (c != 0) p.t_[{dx, dy}] = c;
    return p;
  }
  static Poly2 x() { return term(1, 0); }
  static Poly2 y() { return term(0, 1); }

  const std::map<Exp, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp{0, 0}); }
  bool is_monomial() const { return t_.size() == 1; }
  Rat coef(int dx, int dy) const {
    auto it = t_.find({dx, dy});
    return it == t_.end() ? Rat(0) : it->second;
  }
  Rat constant_term() const { return coef(0, 0); }
  bool vanishes_at_origin() const { return constant_term() == 0; }

  /// Multiplicity at the origin (lowest total degree).
  int ord() const {
    if (is_zero()) throw InputError("Poly2: order of the zero polynomial");
    int m = -1;
    for (const auto& [e, c] : t_)
      if (m < 0 || e.first + e.second < m) m = e.first + e.second;
    return m;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
    return d;
  }
  int deg_x() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first);
    return d;
  }
  int deg_y() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.second);
    return d;
  }

  Poly2 lowest_form() const {
    Poly2 r;
    const int m = ord();
    for (const auto& [e, c] : t_)
      if (e.first + e.second == m) r.t_[e] = c;
    return r;
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
  }
  friend Poly2 operator-(const Poly2& a) {
    Poly2 r = a;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [e1, c1] : a.t_)
      for (const auto& [e2, c2] : b.t_) r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    return r;
  }
  friend Poly2 operator*(const Rat& s, const Poly2& a) { return constant(s) * a; }
  friend bool operator==(const Poly2&, const Poly2&) = default;

  Poly2 pow(int k) const {
    Poly2 r = constant(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  Poly2 dx() const {
    Poly2 r;
    for (const auto& [e, c] : t_)
      if (e.first > 0) r.add_term({e.first - 1, e.second}, c * Rat(e.first));
    return r;
  }
  Poly2 dy() const {
    Poly2 r;
    for (const auto& [e, c] : t_)
      if (e.second > 0) r.add_term({e.first, e.second - 1}, c * Rat(e.second));
    return r;
  }

  /// p(x, x*(y + t)) / x^m. Throws if x^m does not divide.
  Poly2 chart_a(const Rat& t, int m) const {
    Poly2 r;
    for (const auto& [e, c] : t_) {
      // x^a (x (y+t))^b = x^(a+b) * sum_i C(b,i) t^(b-i) y^i
      const int a = e.first, b = e.second;
      if (a + b < m) throw std::logic_error("chart_a: exceptional power exceeds term order");
      BigInt binom = 1;
      Rat tp = 1;
      std::vector<Rat> tpow(static_cast<std::size_t>(b) + 1);
      for (int i = 0; i <= b; ++i) {
        tpow[i] = tp;
        tp *= t;
      }
      for (int i = 0; i <= b; ++i) {
        if (i > 0) binom = binom * (b - i + 1) / i;
        const Rat coef = c * Rat(binom) * tpow[b - i];
        if (coef != 0) r.add_term({a + b - m, i}, coef);
      }
    }
    return r;
  }

  /// p(x*y, y) / y^m.
  Poly2 chart_b(int m) const {
    Poly2 r;
    for (const auto& [e, c] : t_) {
      const int a = e.first, b = e.second;
      if (a + b < m) throw std::logic_error("chart_b: exceptional power exceeds term order");
      r.add_term({a, a + b - m}, c);
    }
    return r;
  }

  /// p(x + s, y + t)
  Poly2 translate(const Rat& s, const Rat& t) const {
    Poly2 r;
    const Poly2 X = x() + constant(s), Y = y() + constant(t);
    for (const auto& [e, c] : t_) r = r + c * (X.pow(e.first) * Y.pow(e.second));
    return r;
  }

  /// Restriction to {x = 0} as a polynomial in y.
  UPoly restrict_x0() const {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(deg_y(), 0)) + 1, Rat(0));
    for (const auto& [e, v] : t_)
      if (e.first == 0) c[e.second] = v;
    return UPoly(std::move(c));
  }

  /// Coefficients as a polynomial in y over Q[x]: result[j] is the coefficient of y^j.
  std::vector<UPoly> as_poly_in_y() const {
    std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(std::max(deg_y(), -1) + 1));
    for (const auto& [e, c] : t_) {
      auto& v = raw[e.second];
      if (static_cast<int>(v.size()) <= e.first) v.resize(e.first + 1, Rat(0));
      v[e.first] = c;
    }
    std::vector<UPoly> out;
    for (auto& v : raw) out.emplace_back(std::move(v));
    return out;
  }
  static Poly2 from_poly_in_y(const std::vector<UPoly>& cs) {
    Poly2 r;
    for (std::size_t j = 0; j < cs.size(); ++j)
      for (int i = 0; i <= cs[j].degree(); ++i)
        if (cs[j].coef(i) != 0) r.t_[{i, static_cast<int>(j)}] = cs[j].coef(i);
    return r;
  }

  /// Leading term in the order comparing y-degree first, then x-degree.
  std::pair<Exp, Rat> leading_term() const {
    if (is_zero()) throw InputError("Poly2: leading term of zero");
    auto best = t_.begin();
    for (auto it = t_.begin(); it != t_.end(); ++it)
      if (std::make_pair(it->first.second, it->first.first) > std::make_pair(best->first.second, best->first.first))
        best = it;
    return *best;
  }

  /// Scaled so that the leading term has coefficient 1.
  Poly2 normalized() const {
    if (is_zero()) return *this;
    const Rat l = leading_term().second;
    Poly2 r = *this;
    for (auto& [e, c] : r.t_) c /= l;
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string m;
      if (e.first > 0) m += "x" + (e.first > 1 ? "^" + std::to_string(e.first) : "");
      if (e.second > 0) m += std::string(m.empty() ? "" : "*") + "y" + (e.second > 1 ? "^" + std::to_string(e.second) : "");
      std::string cs = to_string(c);
      if (!s.empty()) s += (c < 0 ? " - " : " + ");
      else if (c < 0) s += "-";
      const Rat a = abs(c);
      if (m.empty()) s += to_string(a);
      else if (a == 1) s += m;
      else s += to_string(a) + "*" + m;
    }
    return s;
  }

 private:
  void add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  std::map<Exp, Rat> t_;
};

/// f / g when g divides f exactly, otherwise nullopt.
inline std::optional<Poly2> exact_div(const Poly2& f, const Poly2& g) {
  if (g.is_zero()) throw InputError("exact_div: division by zero");
  const auto [eg, cg] = g.leading_term();
  Poly2 r = f, q;
  while (!r.is_zero()) {
    const auto [er, cr] = r.leading_term();
    if (er.first < eg.first || er.second < eg.second) return std::nullopt;
    const Poly2 m = Poly2::term(er.first - eg.first, er.second - eg.second, cr / cg);
    q = q + m;
    r = r - m * g;
  }
  return q;
}

namespace detail {

inline UPoly content_in_y(const std::vector<UPoly>& f) {
  UPoly c;
  for (const auto& a : f) c = gcd(c, a);
  return c;
}

inline std::vector<UPoly> primitive_part(std::vector<UPoly> f) {
  const UPoly c = content_in_y(f);
  if (c.is_zero()) return f;
  for (auto& a : f) a = divmod(a, c).first;
  return f;
}

inline void trim_y(std::vector<UPoly>& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

/// Pseudo-remainder of a by b as polynomials in y over Q[x].
inline std::vector<UPoly> pseudo_rem(std::vector<UPoly> a, const std::vector<UPoly>& b) {
  const std::size_t db = b.size() - 1;
  trim_y(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const UPoly la = a.back();
    for (auto& c : a) c = b.back() * c;
    for (std::size_t j = 0; j <= db; ++j) a[j + shift] = a[j + shift] - la * b[j];
    trim_y(a);
  }
  return a;
}

}  // namespace detail

/// Normalized gcd (leading coefficient 1); gcd(0, 0) = 0.
inline Poly2 gcd(const Poly2& f, const Poly2& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  auto A = f.as_poly_in_y(), B = g.as_poly_in_y();
  const UPoly c = gcd(detail::content_in_y(A), detail::content_in_y(B));
  A = detail::primitive_part(A);
  B = detail::primitive_part(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    auto R = detail::pseudo_rem(A, B);
    A = std::move(B);
    B = R.empty() ? R : detail::primitive_part(std::move(R));
  }
  A = detail::primitive_part(A);
  if (A.size() == 1) A = {UPoly::constant(1)};
  for (auto& a : A) a = c * a;
  return Poly2::from_poly_in_y(A).normalized();
}

inline Poly2 gcd(const std::vector<Poly2>& ps) {
  Poly2 g;
  for (const auto& p : ps) g = gcd(g, p);
  return g;
}

/// Product of the distinct irreducible factors, normalized.
inline Poly2 squarefree_part(const Poly2& f) {
  if (f.is_zero()) throw InputError("squarefree_part: zero polynomial");
  if (f.is_constant()) return Poly2::constant(1);
  const Poly2 g = gcd(gcd(f, f.dx()), f.dy());
  return exact_div(f, g)->normalized();
}

/// Largest e with b^e dividing f (b non-constant).
inline int multiplicity_in(const Poly2& b, Poly2 f) {
  if (b.is_constant()) throw InputError("multiplicity_in: constant base");
  int e = 0;
  while (auto q = exact_div(f, b)) {
    f = std::move(*q);
    ++e;
  }
  return e;
}

/// Pairwise coprime squarefree polynomials such that every input is a
/// constant times a product of powers of them. Constant inputs are ignored.
inline std::vector<Poly2> gcd_free_basis(const std::vector<Poly2>& fs) {
  // seed with the layers rad(f), rad(f / rad(f)), ... so that every basis
  // element has a single multiplicity inside each input
  std::vector<Poly2> basis;
  for (const auto& f0 : fs) {
    if (f0.is_zero()) throw InputError("gcd_free_basis: zero polynomial");
    Poly2 f = f0;
    while (!f.is_constant()) {
      const Poly2 r = squarefree_part(f);
      basis.push_back(r);
      f = *exact_div(f, r);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        const Poly2 d = gcd(basis[i], basis[j]);
        if (d.is_constant()) continue;
        const Poly2 a = *exact_div(basis[i], d), b = *exact_div(basis[j], d);
        basis.erase(basis.begin() + static_cast<long>(j));
        basis.erase(basis.begin() + static_cast<long>(i));
        for (const Poly2& p : {d, a, b})
          if (!p.is_constant()) basis.push_back(p.normalized());
        changed = true;
      }
  }
  std::sort(basis.begin(), basis.end(), [](const Poly2& a, const Poly2& b) { return a.str() < b.str(); });
  return basis;
}

}  // namespace mldlab
