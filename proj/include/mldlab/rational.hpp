#pragma once

// Exact rationals and rationals extended by +/- infinity.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mldlab {

/// Thrown for malformed or out-of-contract inputs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal safety guard (depth cap, overflow) trips.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arbitrary precision rational, always kept in lowest terms.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

/// Parses "p", "-p" or "p/q".
inline Rat parse_rat(std::string_view s) {
  std::string str(s);
  if (str.empty()) throw InputError("empty rational literal");
  auto slash = str.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = str.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational literal '" + str + "'");
  if (num[0] == '+') num.erase(0, 1);
  return make_rat(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline BigInt floor_div(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline BigInt ceil_div(const Rat& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// Converts to int64, throwing GuardError if it does not fit.
inline std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw GuardError("integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

/// A rational or one of the two infinities.
class ExtRat {
 public:
  enum class Kind { kFinite, kNegInf, kPosInf };

  ExtRat() = default;
  ExtRat(Rat v) : kind_(Kind::kFinite), value_(std::move(v)) {}  // NOLINT: implicit by intent

  static ExtRat neg_inf() { return ExtRat(Kind::kNegInf); }
  static ExtRat pos_inf() { return ExtRat(Kind::kPosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  const Rat& value() const {
    if (!is_finite()) throw std::logic_error("value() on infinite ExtRat");
    return value_;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }

  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    auto rank = [](Kind k) { return k == Kind::kNegInf ? 0 : (k == Kind::kFinite ? 1 : 2); };
    if (a.kind_ != b.kind_) return rank(a.kind_) < rank(b.kind_);
    return a.is_finite() && a.value_ < b.value_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

  std::string str() const {
    switch (kind_) {
      case Kind::kNegInf: return "-inf";
      case Kind::kPosInf: return "+inf";
      default: return to_string(value_);
    }
  }

  static ExtRat parse(std::string_view s) {
    if (s == "-inf") return neg_inf();
    if (s == "+inf" || s == "inf") return pos_inf();
    return ExtRat(parse_rat(s));
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtRat& e) { return os << e.str(); }

 private:
  explicit ExtRat(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kFinite;
  Rat value_ = 0;
};

}  // namespace mldlab
