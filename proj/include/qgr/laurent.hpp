#ifndef QGR_LAURENT_HPP
#define QGR_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>

#include "qgr/errors.hpp"

namespace qgr {

// Exact coefficient arithmetic. 64-bit with overflow detection: every result
// that would wrap throws OverflowError.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer add overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer mul overflow");
  return r;
}

inline Int checked_neg(Int a) {
  Int r;
  if (__builtin_sub_overflow(Int{0}, a, &r)) throw OverflowError("integer neg overflow");
  return r;
}

// Sparse integer Laurent polynomial in one variable. Canonical form: no zero
// coefficients stored. The variable name (q or v) is a printing concern only.
class LaurentInt {
 public:
  LaurentInt() = default;

  static LaurentInt zero() { return LaurentInt(); }
  static LaurentInt one() { return monomial(1, 0); }
  static LaurentInt monomial(Int coeff, int exp) {
    LaurentInt p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && coeff(0) == 1; }

  Int coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
  }

  // True when the polynomial is a single term c*x^e.
  bool is_monomial() const { return terms_.size() == 1; }

  int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  const std::map<int, Int>& terms() const { return terms_; }

  void add_term(int exp, Int coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(exp, coeff);
    if (!fresh) {
      it->second = checked_add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentInt& operator+=(const LaurentInt& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentInt& operator-=(const LaurentInt& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, checked_neg(c));
    return *this;
  }

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator-(const LaurentInt& a) {
    LaurentInt r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = checked_neg(c);
    return r;
  }

  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    LaurentInt r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
    return r;
  }
  LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }

  friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentInt& a, const LaurentInt& b) { return !(a == b); }
  friend bool operator<(const LaurentInt& a, const LaurentInt& b) { return a.terms_ < b.terms_; }

  // The involution x -> x^{-1} (exponent negation).
  LaurentInt bar() const {
    LaurentInt r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  // Multiply by a single monomial; cheaper than building a LaurentInt.
  LaurentInt shifted(int exp, Int scale = 1) const {
    LaurentInt r;
    for (const auto& [e, c] : terms_) r.add_term(e + exp, checked_mul(c, scale));
    return r;
  }

  Int value_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
  }

  bool is_palindromic() const { return *this == bar(); }

  // Coefficients all >= 0 (i.e. lies in N[x,x^{-1}]).
  bool is_nonnegative() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  // Canonical rendering: terms by decreasing exponent, no spaces, `3v^2+1-v^-3`.
  std::string str(char var) const;

 private:
  std::map<int, Int> terms_;
};

// Symmetric Gaussian binomial in v; zero for p < 0 or p > m.
LaurentInt v_binomial(int m, int p);

}  // namespace qgr

#endif
