#include "qgr/axring.hpp"

#include <limits>

namespace qgr {

AXElem ax_one() { return ax_basis(XElem{}); }

AXElem ax_basis(const XElem& gamma) {
  AXElem a;
  a.c.emplace(gamma, LaurentInt::one());
  return a;
}

AXElem ax_scale(const AXElem& a, const LaurentInt& p) {
  AXElem r;
  if (p.is_zero()) return r;
  for (const auto& [g, q] : a.c) r.add_term(g, q * p);
  return r;
}

AXElem ax_mul(const CartanDatum& c, const AXElem& a, const AXElem& b) {
  AXElem r;
  for (const auto& [g, p] : a.c)
    for (const auto& [h, q] : b.c) {
      Int br = bracket(c, g, h);
      if (br > std::numeric_limits<int>::max() || br < std::numeric_limits<int>::min())
        throw OverflowError("twist exponent out of range");
      r.add_term(g + h, (p * q).shifted(static_cast<int>(br)));
    }
  return r;
}

AXElem ax_bar(const AXElem& a) {
  AXElem r;
  for (const auto& [g, p] : a.c) r.c.emplace(g, p.bar());
  return r;
}

std::vector<XElem> dominant_terms(const AXElem& a) {
  std::vector<XElem> out;
  for (const auto& [g, p] : a.c)
    if (g.is_dominant()) out.push_back(g);
  return out;
}

bool ax_nonnegative(const AXElem& a) {
  for (const auto& [g, p] : a.c)
    if (!p.is_nonnegative()) return false;
  return true;
}

bool ax_palindromic(const AXElem& a) {
  for (const auto& [g, p] : a.c)
    if (!p.is_palindromic()) return false;
  return true;
}

}  // namespace qgr
