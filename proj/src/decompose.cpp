#include "qgr/decompose.hpp"

namespace qgr {

namespace {

Int key_height(const XElem& g) {
  Int h = 0;
  for (const auto& [ik, c] : g.c) h = checked_add(h, c);
  return h;
}

// Deterministic maximality: height, then total spectral degree, then key.
const XElem* pick_dominant(const AXElem& x) {
  const XElem* best = nullptr;
  Int bh = 0, bd = 0;
  for (const auto& [g, p] : x.c) {
    if (!g.is_dominant()) continue;
    Int h = key_height(g), d = g.total_q_exp();
    if (!best || h > bh || (h == bh && d > bd) || (h == bh && d == bd && *best < g)) {
      best = &g;
      bh = h;
      bd = d;
    }
  }
  return best;
}

}  // namespace

BExpansion expand_in_simples(CharTable& t, const AXElem& x, int max_iter) {
  BExpansion e;
  e.residual = x;
  for (int iter = 0; !e.residual.is_zero(); ++iter) {
    if (iter >= max_iter) throw ResourceError("expansion iteration cap exceeded");
    const XElem* top = pick_dominant(e.residual);
    if (!top) return e;  // residual nonzero, caller inspects
    XElem key = *top;
    LaurentInt coeff = e.residual.coeff(key);
    e.residual -= ax_scale(simple_char(t, key), coeff);
    auto [it, fresh] = e.terms.try_emplace(key, coeff);
    if (!fresh) {
      it->second = it->second + coeff;
      if (it->second.is_zero()) e.terms.erase(it);
    }
  }
  return e;
}

bool positivity_check(const BExpansion& e, std::vector<XElem>* offenders) {
  bool ok = true;
  for (const auto& [g, p] : e.terms)
    if (!p.is_nonnegative()) {
      ok = false;
      if (offenders) offenders->push_back(g);
    }
  return ok;
}

ProbeReport conjecture_probe(CharTable& t, const XElem& gamma, const XElem& gamma_p) {
  const CartanDatum& c = t.cartan();
  AXElem bg = simple_char(t, gamma), bh = simple_char(t, gamma_p);
  BExpansion fwd = expand_in_simples(t, ax_mul(c, bg, bh));
  BExpansion rev = expand_in_simples(t, ax_mul(c, bh, bg));
  if (!fwd.success() || !rev.success())
    throw DomainError("product of simples not in the span of the table");

  ProbeReport r;
  r.single = fwd.terms.size() == 1 && fwd.terms.begin()->second.is_monomial();

  // Two orders agree up to one global power of v.
  r.commutes = fwd.terms.size() == rev.terms.size();
  if (r.commutes && !fwd.terms.empty()) {
    bool shift_set = false;
    int shift = 0;
    for (auto itf = fwd.terms.begin(), itr = rev.terms.begin(); itf != fwd.terms.end();
         ++itf, ++itr) {
      if (itf->first != itr->first) {
        r.commutes = false;
        break;
      }
      if (!shift_set) {
        if (itf->second.min_exp() - itr->second.min_exp() !=
            itf->second.max_exp() - itr->second.max_exp()) {
          r.commutes = false;
          break;
        }
        shift = itf->second.min_exp() - itr->second.min_exp();
        shift_set = true;
      }
      if (itf->second != itr->second.shifted(shift)) {
        r.commutes = false;
        break;
      }
    }
  }

  Int br = bracket(c, gamma, gamma_p);
  r.exact = fwd.terms.size() == 1 && fwd.terms.begin()->first == gamma + gamma_p &&
            fwd.terms.begin()->second == LaurentInt::monomial(1, static_cast<int>(br));
  return r;
}

}  // namespace qgr
