#ifndef QGR_SERIES_HPP
#define QGR_SERIES_HPP

#include <map>
#include <vector>

#include "qgr/laurent.hpp"

namespace qgr {

// Truncated formal series in q^{-1}: exponents are bounded above, and all
// terms with exponent >= known_from are exact; anything below is dropped.
// known_from = -trunc_order in the usual convention.
class TruncSeries {
 public:
  TruncSeries() : known_from_(0) {}
  explicit TruncSeries(int known_from) : known_from_(known_from) {}

  static TruncSeries from_laurent(const LaurentInt& p, int trunc_order) {
    TruncSeries s(-trunc_order);
    for (const auto& [e, c] : p.terms())
      if (e >= s.known_from_) s.terms_[e] = c;
    return s;
  }

  int known_from() const { return known_from_; }
  int trunc_order() const { return -known_from_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Int>& terms() const { return terms_; }

  Int coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(int exp, Int coeff) {
    if (coeff == 0 || exp < known_from_) return;
    auto [it, fresh] = terms_.try_emplace(exp, coeff);
    if (!fresh) {
      it->second = checked_add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    known_from_ = std::max(known_from_, o.known_from_);
    std::erase_if(terms_, [&](const auto& t) { return t.first < known_from_; });
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  // Multiply by an exact Laurent polynomial. The unknown tail of the series
  // pollutes everything below known_from + max_exp(p).
  TruncSeries scaled(const LaurentInt& p) const {
    TruncSeries r(p.is_zero() ? known_from_ : known_from_ + p.max_exp());
    for (const auto& [e, c] : terms_)
      for (const auto& [ep, cp] : p.terms()) r.add_term(e + ep, checked_mul(c, cp));
    return r;
  }

  // Constant term, certified exact: requires exponent 0 inside the known window.
  Int const_term() const {
    if (known_from_ > 0)
      throw TruncationError("constant term lies below the truncation window");
    return coeff(0);
  }

  // Exact terms as a Laurent polynomial (only meaningful when the series is
  // known to terminate above the window).
  LaurentInt to_laurent() const {
    LaurentInt p;
    for (const auto& [e, c] : terms_) p.add_term(e, c);
    return p;
  }

 private:
  std::map<int, Int> terms_;
  int known_from_;
};

// Neumann inverse (I+X)^{-1} = sum_k (-X)^k for a square matrix X of Laurent
// polynomials all of whose exponents are strictly negative. Exact down to
// exponent -trunc_order. Throws DomainError for nonconvergent input.
std::vector<std::vector<TruncSeries>> ts_neumann_inv(
    const std::vector<std::vector<LaurentInt>>& x, int trunc_order);

// (I+X)^{-1} applied to a vector of Laurent polynomials, same convergence rule.
std::vector<TruncSeries> ts_neumann_apply(const std::vector<std::vector<LaurentInt>>& x,
                                          const std::vector<LaurentInt>& rhs, int trunc_order);

}  // namespace qgr

#endif
