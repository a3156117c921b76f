#include "qgr/classical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qgr {

namespace {

// Fraction-free Gaussian elimination solving embed(y) = w over the integers,
// where embed(y)_j = sum_i a_{ji} y_i.
std::optional<std::vector<Int>> solve_embed(const CartanDatum& c, const Weight& w) {
  const int n = c.rank();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n + 1));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[j][i] = c.a(j, i);
    m[j][n] = w.c[j];
  }
  // Bareiss elimination.
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (m[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(m[k], m[piv]);
    for (int r = k + 1; r < n; ++r)
      for (int col = k + 1; col <= n; ++col)
        m[r][col] = (m[r][col] * m[k][k] - m[r][k] * m[k][col]) / prev;
    for (int r = k + 1; r < n; ++r) m[r][k] = 0;
    prev = m[k][k];
  }
  std::vector<Int> y(n);
  for (int k = n - 1; k >= 0; --k) {
    long long s = m[k][n];
    for (int col = k + 1; col < n; ++col) s -= m[k][col] * y[col];
    if (m[k][k] == 0 || s % m[k][k] != 0) return std::nullopt;
    y[k] = s / m[k][k];
  }
  return y;
}

// Functional strictly positive on every simple root ((alpha_i, 2rho) = 2d_i),
// hence strictly decreasing along dominance order; used to linearize
// leading-term elimination.
Root sum_positive_roots(const CartanDatum& c) {
  Root s(c.rank());
  for (const Root& alpha : positive_roots(c))
    for (int i = 0; i < c.rank(); ++i) s.c[i] = checked_add(s.c[i], alpha.c[i]);
  return s;
}

}  // namespace

std::optional<Root> weight_to_root(const CartanDatum& c, const Weight& w) {
  auto y = solve_embed(c, w);
  if (!y) return std::nullopt;
  Root r(c.rank());
  for (int i = 0; i < c.rank(); ++i) {
    if ((*y)[i] < 0) return std::nullopt;
    r.c[i] = (*y)[i];
  }
  return r;
}

Weight dominant_conjugate(const CartanDatum& c, const Weight& mu) {
  Weight w = mu;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < c.rank(); ++i)
      if (w.c[i] < 0) {
        w = simple_reflection(c, i, w);
        moved = true;
      }
  }
  return w;
}

Int orbit_size(const CartanDatum& c, const Weight& mu) {
  std::set<Weight> seen{mu};
  std::vector<Weight> frontier{mu};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier)
      for (int i = 0; i < c.rank(); ++i) {
        Weight s = simple_reflection(c, i, w);
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return static_cast<Int>(seen.size());
}

namespace {

// det(A^T) via Bareiss; positive for finite type.
long long embed_det(const CartanDatum& c) {
  const int n = c.rank();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m[j][i] = c.a(j, i);
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (m[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int col = k + 1; col < n; ++col)
        m[r][col] = (m[r][col] * m[k][k] - m[r][k] * m[k][col]) / prev;
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Dominant mu with lambda - mu in Q+, found by boxing the root coordinates:
// y = (A^T)^{-1}(lambda - mu) <= (A^T)^{-1} lambda componentwise, since the
// inverse Cartan matrix of a finite type has nonnegative entries.
std::vector<Weight> dominant_below(const CartanDatum& c, const Weight& lambda) {
  const int n = c.rank();
  long long det = embed_det(c);
  Weight scaled(n);
  for (int i = 0; i < n; ++i) scaled.c[i] = checked_mul(Int(det), lambda.c[i]);
  auto y_scaled = solve_embed(c, scaled);
  if (!y_scaled) throw DomainError("singular Cartan matrix");
  std::vector<Int> bound(n);
  for (int i = 0; i < n; ++i) bound[i] = (*y_scaled)[i] < 0 ? 0 : (*y_scaled)[i] / det;
  std::vector<Weight> out;
  std::vector<Int> y(n, 0);
  // Iterate the integer box with early pruning on ruled-out prefixes.
  while (true) {
    Weight mu(n);
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      Int s = lambda.c[j];
      for (int i = 0; i < n; ++i) s = checked_add(s, checked_mul(Int(-c.a(j, i)), y[i]));
      mu.c[j] = s;
      if (s < 0) ok = false;
    }
    if (ok) out.push_back(mu);
    int k = 0;
    for (; k < n; ++k) {
      if (y[k] < bound[k]) {
        ++y[k];
        break;
      }
      y[k] = 0;
    }
    if (k == n) break;
  }
  return out;
}

Root as_root_unchecked(const CartanDatum& c, const Weight& w) {
  auto y = solve_embed(c, w);
  if (!y) throw DomainError("weight not in the root lattice");
  Root r(c.rank());
  for (int i = 0; i < c.rank(); ++i) r.c[i] = (*y)[i];
  return r;
}

}  // namespace

MultTable freudenthal(const CartanDatum& c, const Weight& lambda) {
  if (!lambda.is_dominant()) throw DomainError("freudenthal needs a dominant weight");
  const int n = c.rank();
  auto pos = positive_roots(c);
  Weight two_rho(n);
  for (int i = 0; i < n; ++i) two_rho.c[i] = 2;

  auto weights = dominant_below(c, lambda);
  // Process downward in dominance order via the (., 2rho) functional.
  Root f = sum_positive_roots(c);
  std::sort(weights.begin(), weights.end(), [&](const Weight& a, const Weight& b) {
    Int fa = pairing(c, a, f), fb = pairing(c, b, f);
    if (fa != fb) return fa > fb;
    return a < b;
  });

  MultTable t;
  t.lambda = lambda;
  for (const Weight& mu : weights) {
    if (mu == lambda) {
      t.mult[mu] = 1;
      continue;
    }
    Int num = 0;
    for (const Root& alpha : pos) {
      Weight aw = root_to_weight(c, alpha);
      Weight nu = mu;
      while (true) {
        nu = nu + aw;
        Weight dom = dominant_conjugate(c, nu);
        auto it = t.mult.find(dom);
        if (it == t.mult.end()) break;
        num = checked_add(num, checked_mul(it->second, pairing(c, nu, alpha)));
      }
    }
    num = checked_mul(num, Int(2));
    Root beta = as_root_unchecked(c, lambda - mu);
    Int den = pairing(c, lambda + mu + two_rho, beta);
    if (den <= 0 || num % den != 0)
      throw DomainError("Freudenthal recursion produced a non-integral step");
    if (num / den > 0) t.mult[mu] = num / den;
  }
  return t;
}

Int weyl_dim(const CartanDatum& c, const Weight& lambda) {
  if (!lambda.is_dominant()) throw DomainError("weyl_dim needs a dominant weight");
  Weight lr = lambda + rho(c);
  Weight r = rho(c);
  __int128 num = 1;
  __int128 den = 1;
  for (const Root& alpha : positive_roots(c)) {
    long long a = pairing(c, lr, alpha);
    long long b = pairing(c, r, alpha);
    long long g = std::gcd(a, b);
    num *= a / g;
    den *= b / g;
  }
  if (num % den != 0) throw DomainError("Weyl dimension is not integral");
  __int128 d = num / den;
  if (d > std::numeric_limits<Int>::max()) throw OverflowError("Weyl dimension overflow");
  return static_cast<Int>(d);
}

std::map<Weight, Int> full_character(const CartanDatum& c, const Weight& lambda) {
  MultTable t = freudenthal(c, lambda);
  std::map<Weight, Int> full;
  for (const auto& [mu, m] : t.mult) {
    std::set<Weight> seen{mu};
    std::vector<Weight> frontier{mu};
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const Weight& w : frontier)
        for (int i = 0; i < c.rank(); ++i) {
          Weight s = simple_reflection(c, i, w);
          if (seen.insert(s).second) next.push_back(s);
        }
      frontier = std::move(next);
    }
    for (const Weight& w : seen) full[w] = checked_add(full[w], m);
  }
  return full;
}

ClassicalGraded chi_m_convert(const CartanDatum& c, const ClassicalGraded& x,
                              ClassicalGraded::Basis target) {
  using Basis = ClassicalGraded::Basis;
  if (x.basis == Basis::weight || target == Basis::weight)
    throw DomainError("chi_m_convert moves between the chi and orbit bases only");
  if (x.basis == target) return x;
  ClassicalGraded out;
  out.basis = target;
  if (x.basis == Basis::chi) {
    // chi_lambda = sum mult(mu) m_mu.
    for (const auto& [lam, p] : x.terms) {
      MultTable t = freudenthal(c, lam);
      for (const auto& [mu, m] : t.mult) out.add_term(mu, p.shifted(0, m));
    }
    return out;
  }
  // orbit -> chi: unitriangular elimination at the dominance-maximal key.
  Root f = sum_positive_roots(c);
  std::map<Weight, LaurentInt> rem = x.terms;
  while (!rem.empty()) {
    auto best = rem.begin();
    for (auto it = rem.begin(); it != rem.end(); ++it)
      if (pairing(c, it->first, f) > pairing(c, best->first, f)) best = it;
    Weight lam = best->first;
    if (!lam.is_dominant()) throw DomainError("orbit-basis input with a non-dominant key");
    LaurentInt p = best->second;
    out.add_term(lam, p);
    MultTable t = freudenthal(c, lam);
    for (const auto& [mu, m] : t.mult) {
      auto [it, fresh] = rem.try_emplace(mu, LaurentInt::zero());
      it->second = it->second - p.shifted(0, m);
      if (it->second.is_zero()) rem.erase(it);
    }
  }
  return out;
}

namespace {

// Subtract full irreducible characters at dominance-maximal dominant keys.
// The pick maximizes the (., 2rho) functional, so emitted keys can never be
// reintroduced and the loop terminates on Weyl-invariant input.
template <class Coeff, class Scale>
std::map<Weight, Coeff> eliminate_chi(const CartanDatum& c, std::map<Weight, Coeff> rem,
                                      Scale scale) {
  Root f = sum_positive_roots(c);
  std::map<Weight, Coeff> out;
  while (!rem.empty()) {
    const Weight* best = nullptr;
    Int bf = 0;
    for (const auto& [w, p] : rem) {
      if (!w.is_dominant()) continue;
      Int wf = pairing(c, w, f);
      if (!best || wf > bf) {
        best = &w;
        bf = wf;
      }
    }
    if (!best) throw DomainError("weight-basis input is not Weyl-invariant");
    Weight lam = *best;
    Coeff p = rem.at(lam);
    out.emplace(lam, p);
    auto full = full_character(c, lam);
    for (const auto& [mu, m] : full) {
      auto [it, fresh] = rem.try_emplace(mu, Coeff{});
      it->second = it->second - scale(p, m);
      if (it->second == Coeff{}) rem.erase(it);
    }
  }
  return out;
}

}  // namespace

std::map<Weight, Int> tensor_mult(const CartanDatum& c, const Weight& lambda_p,
                                  const Weight& lambda_pp) {
  auto a = full_character(c, lambda_p);
  auto b = full_character(c, lambda_pp);
  std::map<Weight, Int> conv;
  for (const auto& [u, mu] : a)
    for (const auto& [w, mw] : b) {
      Weight s = u + w;
      conv[s] = checked_add(conv[s], checked_mul(mu, mw));
    }
  std::erase_if(conv, [](const auto& t) { return t.second == 0; });
  return eliminate_chi<Int>(c, std::move(conv),
                            [](Int p, Int m) { return checked_mul(p, m); });
}

ClassicalGraded restrict_ax(const CartanDatum& c, const AXElem& x) {
  ClassicalGraded out;
  out.basis = ClassicalGraded::Basis::weight;
  for (const auto& [g, p] : x.c) {
    Int e = epsilon_gamma(c, g);
    if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min())
      throw OverflowError("restriction grading out of range");
    out.add_term(spec_q1(c, g), p.shifted(static_cast<int>(e)));
  }
  return out;
}

ClassicalGraded expand_in_chi(const CartanDatum& c, const ClassicalGraded& x) {
  if (x.basis == ClassicalGraded::Basis::chi) return x;
  if (x.basis != ClassicalGraded::Basis::weight)
    throw DomainError("expand_in_chi needs a weight-basis input");
  ClassicalGraded out;
  out.basis = ClassicalGraded::Basis::chi;
  out.terms = eliminate_chi<LaurentInt>(
      c, x.terms, [](const LaurentInt& p, Int m) { return p.shifted(0, m); });
  return out;
}

MultTable folded_transition(const CartanDatum& cf, const Weight& lambda) {
  return freudenthal(cf, lambda);
}

}  // namespace qgr
