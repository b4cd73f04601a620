#pragma once

// Jet scheme dimensions of monomial subschemes of A^n through contact loci:
// codim Cont^{>=p}(a) = min { sum(v) : v in Z_{>=0}^n, ord_v(a) >= p }, and
// dim Y_m = (m+1) n - codim Cont^{>=m+1}(a).

#include <cstdint>
#include <optional>
#include <vector>

#include "mldlab/monomial.hpp"
#include "mldlab/polyhedral.hpp"
#include "mldlab/rational.hpp"
#include "mldlab/toric.hpp"

namespace mldlab {

/// Solves the covering problems min sum(v) s.t. <g, v> >= p for all
/// generators g, for varying p. The LP optimum at p = 1 is computed once;
/// the integer optimum at p is searched upward from ceil(p * lp).
class ContactSolver {
 public:
  explicit ContactSolver(const MonomialIdeal& I) : I_(I) {
    if (I.is_unit()) return;
    const int n = I.dim();
    std::vector<poly::HalfSpace> rows = detail::orthant_rows(n, 0);
    for (const auto& g : I.gens()) {
      poly::HalfSpace h;
      h.a.assign(g.exps.begin(), g.exps.end());
      h.b = 1;
      rows.push_back(std::move(h));
    }
    bool first = true;
    for (const auto& q : poly::vertices(rows, n)) {
      Rat s = q.sum();
      if (first || s < lp_) lp_ = s;
      first = false;
    }
  }

  /// Real relaxation optimum for p = 1 (this equals the lct of I).
  const Rat& lp_bound() const { return lp_; }

  /// nullopt when the contact locus is empty (I is the unit ideal).
  std::optional<std::int64_t> codim(std::int64_t p) const {
    if (p < 1) throw InputError("contact_codim: p must be >= 1");
    if (I_.is_unit()) return std::nullopt;
    const int n = I_.dim();
    for (std::int64_t s = to_int64(ceil_div(lp_ * Rat(static_cast<long>(p)))); s <= p * n; ++s) {
      bool feasible = false;
      for_each_vector_with_sum(n, s, 0, [&](const std::vector<std::int64_t>& v) {
        for (const auto& g : I_.gens()) {
          std::int64_t dot = 0;
          for (int i = 0; i < n; ++i) dot += v[i] * g.exps[i];
          if (dot < p) return true;
        }
        feasible = true;
        return false;
      });
      if (feasible) return s;
    }
    // p * (1,...,1) is always feasible for a proper ideal
    throw std::logic_error("contact_codim: no feasible point below p * n");
  }

 private:
  MonomialIdeal I_;
  Rat lp_ = 0;
};

inline std::optional<std::int64_t> contact_codim(const MonomialIdeal& I, std::int64_t p) {
  return ContactSolver(I).codim(p);
}

inline std::int64_t jet_dim(const ContactSolver& solver, int n, std::int64_t m) {
  if (m < 0) throw InputError("jet_dim: jet level must be >= 0");
  auto c = solver.codim(m + 1);
  if (!c) throw InputError("jet_dim: unit ideal defines the empty subscheme");
  const std::int64_t d = (m + 1) * n - *c;
  if (d < 0) throw std::logic_error("jet_dim: negative dimension");
  return d;
}

inline std::int64_t jet_dim(const MonomialIdeal& I, std::int64_t m) { return jet_dim(ContactSolver(I), I.dim(), m); }

/// dim(Y_m) <= (m+1)(n-q) for every 0 <= m <= N.
inline bool lc_via_jets(const MonomialIdeal& I, const Rat& q, std::int64_t N) {
  if (q <= 0) throw InputError("lc_via_jets: q must be positive");
  if (I.is_unit()) throw InputError("lc_via_jets: unit ideal");
  const ContactSolver solver(I);
  const int n = I.dim();
  for (std::int64_t m = 0; m <= N; ++m) {
    const Rat rhs = Rat(static_cast<long>(m + 1)) * (Rat(n) - q);
    if (Rat(static_cast<long>(jet_dim(solver, n, m))) > rhs) return false;
  }
  return true;
}

/// Empirical stand-in for the level bound: 3 * (max generator degree) * ceil(1/q + 1).
inline std::int64_t default_jet_level_bound(const MonomialIdeal& I, const Rat& q) {
  if (q <= 0) throw InputError("default_jet_level_bound: q must be positive");
  return 3 * I.max_degree() * to_int64(ceil_div(Rat(1) / q + 1));
}

struct JetQuery {
  MonomialIdeal ideal;
  Rat q;
  std::vector<std::int64_t> levels;
  std::optional<std::int64_t> max_level;  // N; defaults to max(levels)
};

struct JetReport {
  std::vector<std::pair<std::int64_t, std::int64_t>> dims;  // (m, dim Y_m)
  bool lc = false;
  std::int64_t max_level = 0;
};

inline JetReport run_jet_query(const JetQuery& q) {
  if (q.q <= 0) throw InputError("jets: q must be positive");
  for (std::size_t i = 0; i < q.levels.size(); ++i)
    for (std::size_t j = i + 1; j < q.levels.size(); ++j)
      if (q.levels[i] == q.levels[j]) throw InputError("jets: duplicate jet level");
  JetReport rep;
  const ContactSolver solver(q.ideal);
  for (auto m : q.levels) rep.dims.emplace_back(m, jet_dim(solver, q.ideal.dim(), m));
  std::int64_t N = 0;
  for (auto m : q.levels) N = std::max(N, m);
  rep.max_level = q.max_level.value_or(N);
  rep.lc = lc_via_jets(q.ideal, q.q, rep.max_level);
  return rep;
}

}  // namespace mldlab
