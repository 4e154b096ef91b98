#pragma once

#include "daha/rational.hpp"

#include <map>
#include <string>

namespace daha {

enum class TClass { Short, Long };

/// Exponent triple of one monomial: q-exponent (exact rational, lives on the
/// 1/m grid), and doubled exponents of t_s and t_l (so half-integer powers
/// stay integral).  Single-root-length types only ever use the t_s slot.
struct ExpKey {
  Rat q{0};
  Int ts2 = 0;
  Int tl2 = 0;

  bool operator==(const ExpKey&) const = default;
  bool operator<(const ExpKey& o) const {
    // cross-multiplied comparison: exponents are tiny, and this sidesteps
    // the expensive generic rational ordering in the hottest comparator
    Int lhs = q.numerator() * o.q.denominator();
    Int rhs = o.q.numerator() * q.denominator();
    if (lhs != rhs) return lhs < rhs;
    if (ts2 != o.ts2) return ts2 < o.ts2;
    return tl2 < o.tl2;
  }
};

/// Sparse Laurent polynomial in q^{1/m}, t_s^{1/2}, t_l^{1/2} over Q.
/// Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return rational(Rat(1)); }
  static Laurent rational(const Rat& r);
  static Laurent q_pow(const Rat& exp);
  static Laurent t_pow(TClass cls, Int half_units);
  /// t^{1/2} - t^{-1/2} for the given class.
  static Laurent t_unit(TClass cls);
  static Laurent monomial(const ExpKey& k, const Rat& coeff);

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent scaled(const Rat& r) const;

  void add_term(const ExpKey& k, const Rat& coeff);

  /// q -> q^{-1}, t_s -> t_s^{-1}, t_l -> t_l^{-1}.
  Laurent bar() const;
  /// swaps the t_s and t_l exponents (node length classes under iota).
  Laurent swap_t_classes() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// true iff a single term; used for exact division by units.
  bool is_monomial() const { return terms_.size() == 1; }
  Laurent monomial_inverse() const;

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

  const std::map<ExpKey, Rat>& terms() const { return terms_; }

  /// Canonical rendering, e.g. "3*q^-1*ts^1/2 - tl"; deterministic
  /// (lexicographic on exponent triples).
  std::string str() const;

 private:
  std::map<ExpKey, Rat> terms_;
};

}  // namespace daha
