#ifndef QGR_QUIVERDIM_HPP
#define QGR_QUIVERDIM_HPP

#include "qgr/lattice.hpp"

namespace qgr {

// d_{lambda alpha} = (alpha | 2 lambda - alpha) under (alpha_i|omega_j) = delta_ij.
Int d_lambda_alpha(const CartanDatum& c, const Weight& lambda, const Root& alpha);

// d_{gamma eta} = (bar eta | [2] gamma - Omega(q eta))_0, a finite pairing.
Int d_gamma_eta(const CartanDatum& c, const XElem& gamma, const YElem& eta);

// Attracting/repelling ranks for a two-part decomposition:
//   kappa+ = (bar eta'|q^{-1} gamma'')_0 + (bar eta''|q gamma')_0 - (bar eta''|q Omega(eta'))_0
//   kappa- = kappa+ with both primed pairs swapped.
struct KappaPair {
  Int plus;
  Int minus;
};
KappaPair kappa_pm(const CartanDatum& c, const XElem& gamma_p, const XElem& gamma_pp,
                   const YElem& eta_p, const YElem& eta_pp);

// kappa- = d_{lambda alpha}/2 - d_{gamma eta}, kappa+ = d_{lambda alpha}/2.
// Throws DomainError when d_{lambda alpha} is odd.
KappaPair kappa_eta(const CartanDatum& c, const Weight& lambda, const Root& alpha,
                    const XElem& gamma, const YElem& eta);

// Incidence dimension d_{eta' eta} with eta' = eta + q^t alpha_i, solved from
//   d_{gamma eta} + d_{gamma eta'} - d_{eta' eta}
//     = (q bar eta + q^{-1} bar eta' | gamma)_0 - (q bar eta | Omega(eta'))_0.
Int c_dim(const CartanDatum& c, const XElem& gamma, const YElem& eta, int i, int t);

// Fiber dimension e_{eta' eta} = 1 + (alpha_i | q^{-t}(q^{-1}-q)(gamma - Omega(eta')))_0.
Int e_dim(const CartanDatum& c, const XElem& gamma, const YElem& eta, int i, int t);

// Cross-check form e = d_{gamma eta} + d_{gamma eta'} - 2 d_{eta' eta}.
Int e_dim_via_d(const CartanDatum& c, const XElem& gamma, const YElem& eta, int i, int t);

}  // namespace qgr

#endif
