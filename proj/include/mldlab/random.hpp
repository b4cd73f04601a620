#pragma once

// Deterministic random instance generation. Only the raw mt19937_64 stream
// is used (its output is fixed by the standard); bounded draws are done here
// so that reports are identical across standard library implementations.

#include <cstdint>
#include <random>
#include <vector>

#include "mldlab/monomial.hpp"
#include "mldlab/rideal.hpp"

namespace mldlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(eng_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(items.size()) - 1))];
  }

  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

/// All nonzero exponent vectors in n variables of total degree <= d.
inline std::vector<Monomial> monomials_up_to_degree(int n, int d) {
  std::vector<Monomial> out;
  for (int k = 1; k <= d; ++k)
    for_each_monomial_of_degree(n, k, [&](const std::vector<int>& e) { out.emplace_back(e); });
  return out;
}

/// 1..max_gens generators drawn uniformly from the nonzero exponent vectors
/// of degree <= max_degree, then normalized. Never the unit ideal.
inline MonomialIdeal random_monomial_ideal(Rng& rng, int n, int max_degree, int max_gens = 4) {
  const auto pool = monomials_up_to_degree(n, max_degree);
  const auto g = rng.uniform(1, max_gens);
  std::vector<Monomial> gens;
  for (std::int64_t i = 0; i < g; ++i) gens.push_back(rng.pick(pool));
  return normalize_ideal(std::move(gens));
}

struct RandomRIdealSpec {
  int n = 2;
  int max_degree = 4;
  int max_factors = 3;
  int max_gens = 4;
  std::vector<Rat> exponents{Rat(1)};
};

inline RIdeal random_rideal(Rng& rng, const RandomRIdealSpec& spec) {
  const auto r = rng.uniform(1, spec.max_factors);
  std::vector<Factor<MonomialIdeal>> f;
  for (std::int64_t j = 0; j < r; ++j) {
    MonomialIdeal I = random_monomial_ideal(rng, spec.n, spec.max_degree, spec.max_gens);
    f.push_back({std::move(I), rng.pick(spec.exponents)});
  }
  return RIdeal(spec.n, std::move(f));
}

}  // namespace mldlab
