#include "qgr/laurent.hpp"

#include <cstdlib>
#include <vector>

namespace qgr {

std::string LaurentInt::str(char var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!out.empty() && c > 0) out += '+';
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c == -1)
      out += '-';
    else if (c != 1)
      out += std::to_string(c);
    out += var;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

LaurentInt v_binomial(int m, int p) {
  if (p < 0 || p > m) return LaurentInt::zero();
  // Symmetric Gaussian recurrence [m p] = v^p [m-1 p] + v^{p-m} [m-1 p-1].
  std::vector<LaurentInt> row = {LaurentInt::one()};
  for (int n = 1; n <= m; ++n) {
    std::vector<LaurentInt> next(n + 1);
    for (int k = 0; k <= n; ++k) {
      LaurentInt val;
      if (k <= n - 1) val += row[k].shifted(k);
      if (k >= 1) val += row[k - 1].shifted(k - n);
      next[k] = std::move(val);
    }
    row = std::move(next);
  }
  return row[p];
}

}  // namespace qgr
