#include "qgr/series.hpp"

namespace qgr {

namespace {

void require_convergent(const std::vector<std::vector<LaurentInt>>& x) {
  for (const auto& row : x)
    for (const auto& p : row)
      if (!p.is_zero() && p.max_exp() >= 0)
        throw DomainError("Neumann inversion needs strictly negative exponents");
}

// One application of -X to a truncated coefficient vector.
std::vector<std::map<int, Int>> step(const std::vector<std::vector<LaurentInt>>& x,
                                     const std::vector<std::map<int, Int>>& vec, int lo) {
  const int n = static_cast<int>(x.size());
  std::vector<std::map<int, Int>> out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const LaurentInt& p = x[i][j];
      if (p.is_zero()) continue;
      for (const auto& [ev, cv] : vec[j]) {
        for (const auto& [ep, cp] : p.terms()) {
          int e = ev + ep;
          if (e < lo) continue;
          Int& slot = out[i][e];
          slot = checked_add(slot, checked_mul(checked_neg(cp), cv));
          if (slot == 0) out[i].erase(e);
        }
      }
    }
  }
  return out;
}

std::vector<TruncSeries> neumann_core(const std::vector<std::vector<LaurentInt>>& x,
                                      const std::vector<LaurentInt>& rhs, int trunc_order) {
  require_convergent(x);
  const int n = static_cast<int>(x.size());
  const int lo = -trunc_order;
  std::vector<std::map<int, Int>> acc(n), cur(n);
  for (int i = 0; i < n; ++i)
    for (const auto& [e, c] : rhs[i].terms())
      if (e >= lo) acc[i][e] = cur[i][e] = c;
  // Each application of -X lowers every exponent by at least one, so the
  // loop terminates once the moving term falls below the window.
  for (;;) {
    cur = step(x, cur, lo);
    bool empty = true;
    for (int i = 0; i < n; ++i) {
      for (const auto& [e, c] : cur[i]) {
        Int& slot = acc[i][e];
        slot = checked_add(slot, c);
        if (slot == 0) acc[i].erase(e);
        empty = false;
      }
    }
    if (empty) break;
  }
  std::vector<TruncSeries> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    TruncSeries s(lo);
    for (const auto& [e, c] : acc[i]) s.add_term(e, c);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<TruncSeries> ts_neumann_apply(const std::vector<std::vector<LaurentInt>>& x,
                                          const std::vector<LaurentInt>& rhs, int trunc_order) {
  return neumann_core(x, rhs, trunc_order);
}

std::vector<std::vector<TruncSeries>> ts_neumann_inv(
    const std::vector<std::vector<LaurentInt>>& x, int trunc_order) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<TruncSeries>> out(n);
  for (int j = 0; j < n; ++j) {
    std::vector<LaurentInt> e(n);
    e[j] = LaurentInt::one();
    auto col = neumann_core(x, e, trunc_order);
    for (int i = 0; i < n; ++i) {
      if (out[i].empty()) out[i].resize(n);
      out[i][j] = std::move(col[i]);
    }
  }
  return out;
}

}  // namespace qgr
