#pragma once

// R-ideals (formal products of ideals with rational exponents), toric weight
// vectors, and the result record shared by the mld/lct engines.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mldlab/monomial.hpp"
#include "mldlab/rational.hpp"

namespace mldlab {

template <class Ideal>
struct Factor {
  Ideal ideal;
  Rat exp;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// prod_j ideal_j^{exp_j}. An empty factor list is the trivial R-ideal.
template <class Ideal>
class BasicRIdeal {
 public:
  BasicRIdeal() = default;
  BasicRIdeal(int n, std::vector<Factor<Ideal>> factors) : n_(n), factors_(std::move(factors)) {
    if (n_ < 1) throw InputError("R-ideal needs ambient dimension >= 1");
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      if (factors_[j].exp < 0)
        throw InputError("factors[" + std::to_string(j) + "].exp: exponent must be nonnegative");
      if (factors_[j].ideal.dim() != n_)
        throw InputError("factors[" + std::to_string(j) + "].ideal: dimension mismatch");
    }
  }

  int dim() const { return n_; }
  const std::vector<Factor<Ideal>>& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }

  Rat exponent_sum() const {
    Rat s = 0;
    for (const auto& f : factors_) s += f.exp;
    return s;
  }

  /// a^delta: every exponent multiplied by delta.
  BasicRIdeal scaled(const Rat& delta) const {
    auto f = factors_;
    for (auto& x : f) x.exp *= delta;
    return BasicRIdeal(n_, std::move(f));
  }

  /// a * ideal^exp.
  BasicRIdeal times(Ideal ideal, Rat exp) const {
    auto f = factors_;
    f.push_back({std::move(ideal), std::move(exp)});
    return BasicRIdeal(n_, std::move(f));
  }

  friend bool operator==(const BasicRIdeal&, const BasicRIdeal&) = default;

 private:
  int n_ = 1;
  std::vector<Factor<Ideal>> factors_;
};

using RIdeal = BasicRIdeal<MonomialIdeal>;

/// A strictly positive integer weight; names the toric divisor over the
/// origin with discrepancy sum(v) - 1.
class WeightVector {
 public:
  explicit WeightVector(std::vector<std::int64_t> v) : v_(std::move(v)) {
    if (v_.empty()) throw InputError("weight vector must be nonempty");
    for (auto x : v_)
      if (x < 1) throw InputError("weight vector entries must be >= 1");
  }
  int dim() const { return static_cast<int>(v_.size()); }
  const std::vector<std::int64_t>& values() const { return v_; }
  std::int64_t discrepancy() const { return std::accumulate(v_.begin(), v_.end(), std::int64_t{0}) - 1; }
  std::int64_t ord_max_ideal() const { return *std::min_element(v_.begin(), v_.end()); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int64_t> v_;
};

/// An mld or lct value with the divisor realizing it. Toric engines fill
/// `weight`; the surface engine fills `node`.
struct MldResult {
  ExtRat value;
  std::optional<std::vector<std::int64_t>> weight;
  std::optional<int> node;
  std::int64_t k = 0;
  std::int64_t ord_m = 0;
  bool certified = true;

  friend bool operator==(const MldResult&, const MldResult&) = default;
};

}  // namespace mldlab
