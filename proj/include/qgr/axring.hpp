#ifndef QGR_AXRING_HPP
#define QGR_AXRING_HPP

#include <map>
#include <vector>

#include "qgr/lattice.hpp"

namespace qgr {

// Element of the twisted group algebra A_X: a finite Z[v,v^{-1}]-combination
// of basis symbols e^gamma, gamma in X. Zero coefficients are never stored.
struct AXElem {
  std::map<XElem, LaurentInt> c;

  bool is_zero() const { return c.empty(); }
  LaurentInt coeff(const XElem& gamma) const {
    auto it = c.find(gamma);
    return it == c.end() ? LaurentInt::zero() : it->second;
  }
  void add_term(const XElem& gamma, const LaurentInt& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = c.try_emplace(gamma, p);
    if (!fresh) {
      it->second = it->second + p;
      if (it->second.is_zero()) c.erase(it);
    }
  }

  AXElem& operator+=(const AXElem& o) {
    for (const auto& [g, p] : o.c) add_term(g, p);
    return *this;
  }
  AXElem& operator-=(const AXElem& o) {
    for (const auto& [g, p] : o.c) add_term(g, -p);
    return *this;
  }
  friend AXElem operator+(AXElem a, const AXElem& b) { return a += b; }
  friend AXElem operator-(AXElem a, const AXElem& b) { return a -= b; }
  friend bool operator==(const AXElem& a, const AXElem& b) { return a.c == b.c; }
  friend bool operator!=(const AXElem& a, const AXElem& b) { return !(a == b); }
};

// e^0 with coefficient one.
AXElem ax_one();

// The basis symbol e^gamma.
AXElem ax_basis(const XElem& gamma);

// Scale every coefficient by a Laurent polynomial in v.
AXElem ax_scale(const AXElem& a, const LaurentInt& p);

// Twisted product: e^gamma e^{gamma'} = v^{<gamma,gamma'>} e^{gamma+gamma'}.
AXElem ax_mul(const CartanDatum& c, const AXElem& a, const AXElem& b);

// Bar involution: v -> v^{-1} on coefficients, e^gamma fixed. It is a ring
// antihomomorphism for the twisted product.
AXElem ax_bar(const AXElem& a);

// All gamma with nonzero coefficient whose support is dominant.
std::vector<XElem> dominant_terms(const AXElem& a);

// True when every coefficient lies in N[v, v^{-1}].
bool ax_nonnegative(const AXElem& a);

// True when every coefficient is bar-invariant.
bool ax_palindromic(const AXElem& a);

}  // namespace qgr

#endif
