#ifndef QGR_LATTICE_HPP
#define QGR_LATTICE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qgr/cartan.hpp"
#include "qgr/series.hpp"

namespace qgr {

// Node/spectral-exponent coordinate key: (i, k) with i a 0-based node index.
using IK = std::pair<int, int>;

// gamma = sum g_{ik} q^k omega_i, finitely supported.
struct XElem {
  std::map<IK, Int> c;

  bool is_zero() const { return c.empty(); }
  bool is_dominant() const {
    for (const auto& [ik, g] : c)
      if (g < 0) return false;
    return true;
  }
  Int coeff(int i, int k) const {
    auto it = c.find({i, k});
    return it == c.end() ? 0 : it->second;
  }
  void add_term(int i, int k, Int g) {
    if (g == 0) return;
    auto [it, fresh] = c.try_emplace(IK{i, k}, g);
    if (!fresh) {
      it->second = checked_add(it->second, g);
      if (it->second == 0) c.erase(it);
    }
  }
  int min_q_exp() const;
  int max_q_exp() const;
  Int total_q_exp() const;  // sum g_{ik} * k

  XElem& operator+=(const XElem& o) {
    for (const auto& [ik, g] : o.c) add_term(ik.first, ik.second, g);
    return *this;
  }
  XElem& operator-=(const XElem& o) {
    for (const auto& [ik, g] : o.c) add_term(ik.first, ik.second, checked_neg(g));
    return *this;
  }
  friend XElem operator+(XElem a, const XElem& b) { return a += b; }
  friend XElem operator-(XElem a, const XElem& b) { return a -= b; }
  friend XElem operator-(const XElem& a) {
    XElem r;
    for (const auto& [ik, g] : a.c) r.c[ik] = checked_neg(g);
    return r;
  }
  XElem bar() const {  // q -> q^{-1}
    XElem r;
    for (const auto& [ik, g] : c) r.c[{ik.first, -ik.second}] = g;
    return r;
  }
  friend bool operator==(const XElem& a, const XElem& b) { return a.c == b.c; }
  friend bool operator!=(const XElem& a, const XElem& b) { return !(a == b); }
  friend bool operator<(const XElem& a, const XElem& b) { return a.c < b.c; }
};

// eta = sum h_{ik} q^k alpha_i.
struct YElem {
  std::map<IK, Int> c;

  bool is_zero() const { return c.empty(); }
  bool is_nonnegative() const {  // eta in Y+
    for (const auto& [ik, h] : c)
      if (h < 0) return false;
    return true;
  }
  Int coeff(int i, int k) const {
    auto it = c.find({i, k});
    return it == c.end() ? 0 : it->second;
  }
  void add_term(int i, int k, Int h) {
    if (h == 0) return;
    auto [it, fresh] = c.try_emplace(IK{i, k}, h);
    if (!fresh) {
      it->second = checked_add(it->second, h);
      if (it->second == 0) c.erase(it);
    }
  }
  YElem& operator+=(const YElem& o) {
    for (const auto& [ik, h] : o.c) add_term(ik.first, ik.second, h);
    return *this;
  }
  YElem& operator-=(const YElem& o) {
    for (const auto& [ik, h] : o.c) add_term(ik.first, ik.second, checked_neg(h));
    return *this;
  }
  friend YElem operator+(YElem a, const YElem& b) { return a += b; }
  friend YElem operator-(YElem a, const YElem& b) { return a -= b; }
  YElem bar() const {
    YElem r;
    for (const auto& [ik, h] : c) r.c[{ik.first, -ik.second}] = h;
    return r;
  }
  friend bool operator==(const YElem& a, const YElem& b) { return a.c == b.c; }
  friend bool operator!=(const YElem& a, const YElem& b) { return !(a == b); }
  friend bool operator<(const YElem& a, const YElem& b) { return a.c < b.c; }
};

// Per-node truncated series over Q-coordinates (values of Omega^{-1}).
struct SeriesRootVec {
  std::vector<TruncSeries> per_node;
  int known_from() const { return per_node.empty() ? 0 : per_node.front().known_from(); }
};

// Convenience constructors.
XElem x_monomial(int i, int k, Int g = 1);
YElem y_monomial(int i, int k, Int h = 1);

// Omega: q^k alpha_i -> q^{k+1} omega_i + q^{k-1} omega_i - sum_{j~i} q^k omega_j.
XElem omega(const CartanDatum& c, const YElem& eta);

// Series inverse of Omega, exact down to exponent -trunc_order.
SeriesRootVec omega_inv(const CartanDatum& c, const XElem& gamma, int trunc_order);

// (alpha_i | omega_j) = delta_{ij}, extended bilinearly; the full series
// and its certified constant term.
TruncSeries pair_series(const SeriesRootVec& xi, const XElem& gamma);
Int pair_const(const SeriesRootVec& xi, const XElem& gamma);

// Finite Laurent pairing (eta | gamma)_0 for eta in Z[q,q^{-1}] (x) Q.
Int pair_const_finite(const YElem& eta, const XElem& gamma);

// Process-wide floor for the starting truncation depth used by epsilon;
// the depth still grows automatically when a value cannot be certified.
void set_min_truncation(int t);

// epsilon_{gamma gamma'} = (q^{-1} Omega^{-1}(bar gamma) | gamma')_0,
// computed through truncated series with automatic truncation growth.
Int epsilon(const CartanDatum& c, const XElem& gamma, const XElem& gamma_p);

// <gamma, gamma'> = epsilon_{gamma gamma'} - epsilon_{gamma' gamma}.
Int bracket(const CartanDatum& c, const XElem& gamma, const XElem& gamma_p);

// epsilon_gamma = epsilon_{gamma gamma}.
Int epsilon_gamma(const CartanDatum& c, const XElem& gamma);

// gamma +- Omega(eta): additive shorthand mixing X and Y coordinates.
XElem add_xy(const CartanDatum& c, const XElem& gamma, const YElem& eta);
XElem sub_xy(const CartanDatum& c, const XElem& gamma, const YElem& eta);

// Order predicates.
bool is_dominant(const XElem& gamma);
bool succeq_xy(const CartanDatum& c, const XElem& gamma, const YElem& eta);  // gamma >= eta
bool succeq_yy(const YElem& eta, const YElem& delta);                        // eta >= delta

// Specialization q -> 1: collapse spectral exponents onto P.
Weight spec_q1(const CartanDatum& c, const XElem& gamma);
Root spec_q1(const CartanDatum& c, const YElem& eta);

// Exact integral solution of Omega(eta) = x, if one exists.
std::optional<YElem> solve_omega(const CartanDatum& c, const XElem& x);

}  // namespace qgr

#endif
