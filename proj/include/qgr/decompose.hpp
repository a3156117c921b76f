#ifndef QGR_DECOMPOSE_HPP
#define QGR_DECOMPOSE_HPP

#include <vector>

#include "qgr/chartab.hpp"

namespace qgr {

// Expansion in the simple basis. On success residual is zero and
// sum coeff * simple_char recovers the input exactly.
struct BExpansion {
  std::map<XElem, LaurentInt> terms;
  AXElem residual;

  bool success() const { return residual.is_zero(); }
};

// Leading-dominant-term elimination. Term selection is deterministic:
// largest height at v=1, then largest total spectral degree, then
// lexicographically largest key.
BExpansion expand_in_simples(CharTable& t, const AXElem& x, int max_iter = 10000);

// True iff every coefficient lies in N[v,v^{-1}]; offenders collected.
bool positivity_check(const BExpansion& e, std::vector<XElem>* offenders = nullptr);

// The three conjectured equivalent conditions on b_gamma (x) b_gamma':
//   single: the product is one basis element times a v-power;
//   commutes: both orders agree up to a global v-power;
//   exact: the expansion is exactly { gamma+gamma' : v^<gamma,gamma'> }.
struct ProbeReport {
  bool single = false;
  bool commutes = false;
  bool exact = false;
  bool coherent() const { return single == commutes && commutes == exact; }
};

ProbeReport conjecture_probe(CharTable& t, const XElem& gamma, const XElem& gamma_p);

}  // namespace qgr

#endif
