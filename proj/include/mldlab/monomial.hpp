#pragma once

// Monomials and monomial ideals, kept as minimal generating antichains.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mldlab/rational.hpp"

namespace mldlab {

struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  int dim() const { return static_cast<int>(exps.size()); }
  int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
  bool is_unit() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
  }
  /// Componentwise <=, i.e. this monomial divides `other`.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class MonomialIdeal;
MonomialIdeal normalize_ideal(std::vector<Monomial> gens);

/// Ideal of k[x_1..x_n] generated by monomials. The generator list is the
/// minimal antichain, sorted lexicographically descending (x-heavy first).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  int dim() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  int max_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }
  /// Order at the origin: smallest generator degree.
  int order() const {
    int d = gens_.front().degree();
    for (const auto& g : gens_) d = std::min(d, g.degree());
    return d;
  }
  /// True iff the monomial lies in the ideal.
  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  static MonomialIdeal unit(int n) { return normalize_ideal({Monomial(std::vector<int>(n, 0))}); }
  /// The maximal ideal (x_1, ..., x_n).
  static MonomialIdeal maximal(int n) {
    std::vector<Monomial> g;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      g.emplace_back(std::move(e));
    }
    return normalize_ideal(std::move(g));
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal normalize_ideal(std::vector<Monomial> gens);
  int n_ = 0;
  std::vector<Monomial> gens_;
};

/// Minimal antichain generating the same ideal as `gens`.
inline MonomialIdeal normalize_ideal(std::vector<Monomial> gens) {
  if (gens.empty()) throw InputError("monomial ideal needs at least one generator");
  const int n = gens.front().dim();
  if (n < 1) throw InputError("monomial ideal needs ambient dimension >= 1");
  for (const auto& g : gens) {
    if (g.dim() != n) throw InputError("generators of mixed dimension");
    for (int e : g.exps)
      if (e < 0) throw InputError("negative exponent in monomial");
  }
  // Sorting by degree first lets every generator be tested only against kept ones.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!dominated) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  MonomialIdeal I;
  I.n_ = n;
  I.gens_ = std::move(kept);
  return I;
}

inline MonomialIdeal make_ideal(std::initializer_list<std::vector<int>> gens) {
  std::vector<Monomial> g;
  for (const auto& e : gens) g.emplace_back(e);
  return normalize_ideal(std::move(g));
}

/// True iff J is contained in I.
inline bool ideal_contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim() != J.dim()) throw InputError("ideal_contains: dimension mismatch");
  return std::all_of(J.gens().begin(), J.gens().end(), [&](const Monomial& m) { return I.contains(m); });
}

/// Calls `fn` on every exponent vector of total degree d in n variables,
/// in lexicographically descending order.
template <class Fn>
void for_each_monomial_of_degree(int n, int d, Fn&& fn) {
  std::vector<int> e(n, 0);
  auto rec = [&](auto& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      fn(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, d);
}

/// I + m^d where m is the maximal ideal at the origin.
inline MonomialIdeal sum_with_power_of_max_ideal(const MonomialIdeal& I, int d) {
  if (d <= 0) throw InputError("sum_with_power_of_max_ideal: d must be positive");
  std::vector<Monomial> g = I.gens();
  for_each_monomial_of_degree(I.dim(), d, [&](const std::vector<int>& e) {
    Monomial m(e);
    if (!I.contains(m)) g.push_back(std::move(m));
  });
  return normalize_ideal(std::move(g));
}

inline std::string to_string(const Monomial& m) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::string s;
  for (int i = 0; i < m.dim(); ++i) {
    if (m.exps[i] == 0) continue;
    s += m.dim() <= 4 ? std::string(names[i]) : "x" + std::to_string(i + 1);
    if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const MonomialIdeal& I) {
  std::string s = "(";
  for (std::size_t i = 0; i < I.gens().size(); ++i) {
    if (i) s += ", ";
    s += to_string(I.gens()[i]);
  }
  return s + ")";
}

}  // namespace mldlab
