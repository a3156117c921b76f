#include "qgr/lattice.hpp"

#include <algorithm>

namespace qgr {

int XElem::min_q_exp() const {
  int m = 0;
  bool first = true;
  for (const auto& [ik, g] : c) {
    if (first || ik.second < m) m = ik.second;
    first = false;
  }
  return m;
}

int XElem::max_q_exp() const {
  int m = 0;
  bool first = true;
  for (const auto& [ik, g] : c) {
    if (first || ik.second > m) m = ik.second;
    first = false;
  }
  return m;
}

Int XElem::total_q_exp() const {
  Int t = 0;
  for (const auto& [ik, g] : c) t = checked_add(t, checked_mul(g, Int(ik.second)));
  return t;
}

XElem x_monomial(int i, int k, Int g) {
  XElem x;
  x.add_term(i, k, g);
  return x;
}

YElem y_monomial(int i, int k, Int h) {
  YElem y;
  y.add_term(i, k, h);
  return y;
}

XElem omega(const CartanDatum& c, const YElem& eta) {
  XElem out;
  for (const auto& [ik, h] : eta.c) {
    const auto [i, k] = ik;
    out.add_term(i, k + 1, h);
    out.add_term(i, k - 1, h);
    for (int j : c.neighbors(i)) out.add_term(j, k, checked_neg(h));
  }
  return out;
}

namespace {

// q^{-1} Omega = I + M with M = q^{-2} I - q^{-1} Adj, all exponents < 0.
std::vector<std::vector<LaurentInt>> omega_tail(const CartanDatum& c) {
  const int n = c.rank();
  std::vector<std::vector<LaurentInt>> m(n, std::vector<LaurentInt>(n));
  for (int i = 0; i < n; ++i) {
    m[i][i] = LaurentInt::monomial(1, -2);
    for (int j : c.neighbors(i)) m[i][j] = LaurentInt::monomial(-1, -1);
  }
  return m;
}

std::vector<LaurentInt> x_coord_vector(const CartanDatum& c, const XElem& gamma) {
  std::vector<LaurentInt> v(c.rank());
  for (const auto& [ik, g] : gamma.c) v[ik.first].add_term(ik.second, g);
  return v;
}

}  // namespace

SeriesRootVec omega_inv(const CartanDatum& c, const XElem& gamma, int trunc_order) {
  if (!c.simply_laced()) throw DomainError("omega_inv needs a simply-laced datum");
  // Omega^{-1} = (I + M)^{-1} q^{-1} in omega-coordinates.
  auto rhs = x_coord_vector(c, gamma);
  for (auto& p : rhs) p = p.shifted(-1);
  SeriesRootVec out;
  out.per_node = ts_neumann_apply(omega_tail(c), rhs, trunc_order);
  return out;
}

TruncSeries pair_series(const SeriesRootVec& xi, const XElem& gamma) {
  auto n = static_cast<int>(xi.per_node.size());
  TruncSeries acc(xi.known_from());
  for (const auto& [ik, g] : gamma.c) {
    const auto [i, k] = ik;
    if (i >= n) throw DomainError("node index out of range in pairing");
    acc += xi.per_node[i].scaled(LaurentInt::monomial(g, k));
  }
  return acc;
}

Int pair_const(const SeriesRootVec& xi, const XElem& gamma) {
  return pair_series(xi, gamma).const_term();
}

Int pair_const_finite(const YElem& eta, const XElem& gamma) {
  Int s = 0;
  for (const auto& [ik, h] : eta.c) {
    Int g = gamma.coeff(ik.first, -ik.second);
    s = checked_add(s, checked_mul(h, g));
  }
  return s;
}

namespace {
int g_min_trunc = 0;
}  // namespace

void set_min_truncation(int t) { g_min_trunc = t; }

Int epsilon(const CartanDatum& c, const XElem& gamma, const XElem& gamma_p) {
  if (gamma.is_zero() || gamma_p.is_zero()) return 0;
  int span = std::max(gamma.max_q_exp(), gamma_p.max_q_exp()) -
             std::min(gamma.min_q_exp(), gamma_p.min_q_exp());
  int t = std::max(span + 4, g_min_trunc);
  XElem gbar = gamma.bar();
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      SeriesRootVec xi = omega_inv(c, gbar, t);
      for (auto& s : xi.per_node) s = s.scaled(LaurentInt::monomial(1, -1));
      return pair_const(xi, gamma_p);
    } catch (const TruncationError&) {
      t = 2 * t + 8;
    }
  }
  throw TruncationError("epsilon did not stabilize under truncation growth");
}

Int bracket(const CartanDatum& c, const XElem& gamma, const XElem& gamma_p) {
  return checked_add(epsilon(c, gamma, gamma_p), checked_neg(epsilon(c, gamma_p, gamma)));
}

Int epsilon_gamma(const CartanDatum& c, const XElem& gamma) { return epsilon(c, gamma, gamma); }

XElem add_xy(const CartanDatum& c, const XElem& gamma, const YElem& eta) {
  return gamma + omega(c, eta);
}

XElem sub_xy(const CartanDatum& c, const XElem& gamma, const YElem& eta) {
  return gamma - omega(c, eta);
}

bool is_dominant(const XElem& gamma) { return gamma.is_dominant(); }

bool succeq_xy(const CartanDatum& c, const XElem& gamma, const YElem& eta) {
  return sub_xy(c, gamma, eta).is_dominant();
}

bool succeq_yy(const YElem& eta, const YElem& delta) { return (eta - delta).is_nonnegative(); }

Weight spec_q1(const CartanDatum& c, const XElem& gamma) {
  Weight w(c.rank());
  for (const auto& [ik, g] : gamma.c) w.c[ik.first] = checked_add(w.c[ik.first], g);
  return w;
}

Root spec_q1(const CartanDatum& c, const YElem& eta) {
  Root r(c.rank());
  for (const auto& [ik, h] : eta.c) r.c[ik.first] = checked_add(r.c[ik.first], h);
  return r;
}

std::optional<YElem> solve_omega(const CartanDatum& c, const XElem& x) {
  // Peel layers from the top: the q^K layer of Omega(eta) comes only from
  // the q^{K-1} layer of eta, and any solution has its layers confined to
  // [min_q_exp(x)+1, max_q_exp(x)-1].
  YElem eta;
  if (x.is_zero()) return eta;
  const int floor_exp = x.min_q_exp();
  XElem rem = x;
  while (!rem.is_zero()) {
    int top = rem.max_q_exp();
    if (top < floor_exp + 2) return std::nullopt;
    YElem layer;
    for (const auto& [ik, g] : rem.c)
      if (ik.second == top) layer.add_term(ik.first, top - 1, g);
    eta += layer;
    rem -= omega(c, layer);
  }
  return eta;
}

}  // namespace qgr
