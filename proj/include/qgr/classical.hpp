#ifndef QGR_CLASSICAL_HPP
#define QGR_CLASSICAL_HPP

#include <optional>

#include "qgr/axring.hpp"

namespace qgr {

// Weight multiplicities of the irreducible V(lambda), dominant keys only.
struct MultTable {
  Weight lambda;
  std::map<Weight, Int> mult;
};

// v-graded element of the classical character ring in one of three bases.
struct ClassicalGraded {
  enum class Basis { weight, orbit, chi };
  Basis basis = Basis::weight;
  std::map<Weight, LaurentInt> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Weight& w, const LaurentInt& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(w, p);
    if (!fresh) {
      it->second = it->second + p;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend bool operator==(const ClassicalGraded& a, const ClassicalGraded& b) {
    return a.basis == b.basis && a.terms == b.terms;
  }
};

// Express a weight in simple-root coordinates; nullopt when the coordinates
// are not nonnegative integers.
std::optional<Root> weight_to_root(const CartanDatum& c, const Weight& w);

// The dominant Weyl-chamber representative of mu.
Weight dominant_conjugate(const CartanDatum& c, const Weight& mu);

// Size of the Weyl orbit of a dominant weight.
Int orbit_size(const CartanDatum& c, const Weight& mu);

// Exact weight multiplicities by the Freudenthal recursion.
MultTable freudenthal(const CartanDatum& c, const Weight& lambda);

// Dimension of V(lambda) by the product formula.
Int weyl_dim(const CartanDatum& c, const Weight& lambda);

// Full weight support of V(lambda): every Weyl conjugate with multiplicity.
std::map<Weight, Int> full_character(const CartanDatum& c, const Weight& lambda);

// Basis conversions between the irreducible (chi) and orbit-sum bases;
// exact, mutually inverse.
ClassicalGraded chi_m_convert(const CartanDatum& c, const ClassicalGraded& x,
                              ClassicalGraded::Basis target);

// Multiplicity of V(mu) in V(lambda') (x) V(lambda'').
std::map<Weight, Int> tensor_mult(const CartanDatum& c, const Weight& lambda_p,
                                  const Weight& lambda_pp);

// Restriction to the classical ring: e^gamma -> v^{eps_gamma} e^{gamma(1)}.
ClassicalGraded restrict_ax(const CartanDatum& c, const AXElem& x);

// Expand a weight-basis element in irreducible characters by leading-term
// elimination; input must be Weyl-invariant at v=1.
ClassicalGraded expand_in_chi(const CartanDatum& c, const ClassicalGraded& x);

// Transition row of a folded datum: the multiplicity row of V(lambda).
MultTable folded_transition(const CartanDatum& cf, const Weight& lambda);

}  // namespace qgr

#endif
