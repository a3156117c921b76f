#include "qgr/quiverdim.hpp"

namespace qgr {

namespace {

XElem qshift(const XElem& x, int s) {
  XElem r;
  for (const auto& [ik, g] : x.c) r.c[{ik.first, ik.second + s}] = g;
  return r;
}

YElem qshift(const YElem& y, int s) {
  YElem r;
  for (const auto& [ik, h] : y.c) r.c[{ik.first, ik.second + s}] = h;
  return r;
}

XElem two_bracket(const XElem& x) { return qshift(x, 1) + qshift(x, -1); }

}  // namespace

Int d_lambda_alpha(const CartanDatum& c, const Weight& lambda, const Root& alpha) {
  Weight aw = root_to_weight(c, alpha);
  Int s = 0;
  for (int i = 0; i < c.rank(); ++i) {
    Int coord = checked_add(checked_mul(Int(2), lambda.c[i]), checked_neg(aw.c[i]));
    s = checked_add(s, checked_mul(alpha.c[i], coord));
  }
  return s;
}

Int d_gamma_eta(const CartanDatum& c, const XElem& gamma, const YElem& eta) {
  XElem rhs = two_bracket(gamma) - omega(c, qshift(eta, 1));
  return pair_const_finite(eta.bar(), rhs);
}

KappaPair kappa_pm(const CartanDatum& c, const XElem& gamma_p, const XElem& gamma_pp,
                   const YElem& eta_p, const YElem& eta_pp) {
  auto plus = [&](const XElem& gp, const XElem& gpp, const YElem& ep, const YElem& epp) {
    Int a = pair_const_finite(ep.bar(), qshift(gpp, -1));
    Int b = pair_const_finite(epp.bar(), qshift(gp, 1));
    Int d = pair_const_finite(epp.bar(), qshift(omega(c, ep), 1));
    return checked_add(checked_add(a, b), checked_neg(d));
  };
  return {plus(gamma_p, gamma_pp, eta_p, eta_pp), plus(gamma_pp, gamma_p, eta_pp, eta_p)};
}

KappaPair kappa_eta(const CartanDatum& c, const Weight& lambda, const Root& alpha,
                    const XElem& gamma, const YElem& eta) {
  Int d = d_lambda_alpha(c, lambda, alpha);
  if (d % 2 != 0) throw DomainError("d_lambda_alpha is odd; inconsistent inputs");
  Int half = d / 2;
  return {half, checked_add(half, checked_neg(d_gamma_eta(c, gamma, eta)))};
}

namespace {

Int c_dim_pair(const CartanDatum& c, const XElem& gamma, const YElem& eta, const YElem& eta_p) {
  if (eta_p == eta) throw DomainError("degenerate incidence pair");
  Int rhs = checked_add(pair_const_finite(qshift(eta.bar(), 1), gamma),
                        pair_const_finite(qshift(eta_p.bar(), -1), gamma));
  rhs = checked_add(rhs, checked_neg(pair_const_finite(qshift(eta.bar(), 1), omega(c, eta_p))));
  Int d = checked_add(d_gamma_eta(c, gamma, eta), d_gamma_eta(c, gamma, eta_p));
  return checked_add(d, checked_neg(rhs));
}

}  // namespace

Int c_dim(const CartanDatum& c, const XElem& gamma, const YElem& eta, int i, int t) {
  return c_dim_pair(c, gamma, eta, eta + y_monomial(i, t));
}

Int e_dim(const CartanDatum& c, const XElem& gamma, const YElem& eta, int i, int t) {
  YElem eta_p = eta + y_monomial(i, t);
  XElem chi = gamma - omega(c, eta_p);
  XElem arg = qshift(chi, -t - 1) - qshift(chi, -t + 1);
  return checked_add(Int(1), pair_const_finite(y_monomial(i, 0), arg));
}

Int e_dim_via_d(const CartanDatum& c, const XElem& gamma, const YElem& eta, int i, int t) {
  YElem eta_p = eta + y_monomial(i, t);
  Int s = checked_add(d_gamma_eta(c, gamma, eta), d_gamma_eta(c, gamma, eta_p));
  return checked_add(s, checked_mul(Int(-2), c_dim_pair(c, gamma, eta, eta_p)));
}

}  // namespace qgr
