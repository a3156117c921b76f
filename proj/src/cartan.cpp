#include "qgr/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qgr {

namespace {

// Coprime positive symmetrizers d with d_i a_{ij} = d_j a_{ji}, by ratio
// propagation along the Dynkin graph.
std::vector<Int> symmetrizers(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Int> num(n, 0), den(n, 0);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (num[start] != 0) continue;
    num[start] = den[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        // d_j = d_i * a_{ij} / a_{ji}
        Int nj = checked_mul(num[i], a[i][j]);
        Int dj = checked_mul(den[i], a[j][i]);
        if (dj < 0) {
          nj = -nj;
          dj = -dj;
        }
        Int g = std::gcd(nj, dj);
        nj /= g;
        dj /= g;
        if (num[j] == 0) {
          num[j] = nj;
          den[j] = dj;
          stack.push_back(j);
        } else if (num[j] * dj != nj * den[j]) {
          throw DomainError("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Int l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  std::vector<Int> d(n);
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    d[i] = num[i] * (l / den[i]);
    if (d[i] <= 0) throw DomainError("Cartan matrix is not symmetrizable");
    g = std::gcd(g, d[i]);
  }
  for (Int& x : d) x /= g;
  return d;
}

// Leading principal minors of the symmetrized matrix, by fraction-free
// (Bareiss) elimination; all must be positive for finite type.
bool positive_definite(const std::vector<std::vector<Int>>& b) {
  const int n = static_cast<int>(b.size());
  std::vector<std::vector<Int>> m = b;
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (checked_mul(m[i][j], m[k][k]) - checked_mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return true;
}

}  // namespace

CartanDatum::CartanDatum(std::vector<std::vector<int>> a, std::string name)
    : a_(std::move(a)), name_(std::move(name)) {
  const int n = rank();
  if (n == 0) throw DomainError("empty Cartan matrix");
  simply_laced_ = true;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a_[i].size()) != n) throw DomainError("Cartan matrix not square");
    if (a_[i][i] != 2) throw DomainError("Cartan diagonal entry must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) throw DomainError("positive off-diagonal Cartan entry");
      if ((a_[i][j] == 0) != (a_[j][i] == 0)) throw DomainError("Cartan zero pattern not symmetric");
      if (a_[i][j] < -1 || a_[i][j] != a_[j][i]) simply_laced_ = false;
    }
  }
  d_ = symmetrizers(a_);
  std::vector<std::vector<Int>> b(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = checked_mul(d_[i], Int(a_[i][j]));
  if (!positive_definite(b)) throw DomainError("Cartan matrix is not of finite type");
  nbr_.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a_[i][j] != 0) nbr_[i].push_back(j);
}

CartanDatum build_cartan(char family, int rank) {
  auto chain = [](int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    return a;
  };
  switch (family) {
    case 'A': {
      if (rank < 1) throw DomainError("type A needs rank >= 1");
      return CartanDatum(chain(rank), "A" + std::to_string(rank));
    }
    case 'D': {
      if (rank < 4) throw DomainError("type D needs rank >= 4");
      // Bourbaki: chain 1..n-2, with n-1 and n both attached to n-2.
      auto a = chain(rank);
      a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
      a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
      return CartanDatum(a, "D" + std::to_string(rank));
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw DomainError("type E needs rank in {6,7,8}");
      // Bourbaki: chain 1-3-4-...-n, node 2 attached to 4.
      std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < rank; ++i) link(i, i + 1);
      return CartanDatum(a, "E" + std::to_string(rank));
    }
    default:
      throw DomainError("unknown type family");
  }
}

CartanDatum build_cartan(const std::string& type) {
  if (type.size() < 2) throw DomainError("bad Cartan type literal: " + type);
  char fam = type[0];
  for (std::size_t i = 1; i < type.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(type[i])))
      throw DomainError("bad Cartan type literal: " + type);
  return build_cartan(fam, std::stoi(type.substr(1)));
}

Weight root_to_weight(const CartanDatum& c, const Root& alpha) {
  Weight w(c.rank());
  for (int j = 0; j < c.rank(); ++j) {
    Int s = 0;
    for (int i = 0; i < c.rank(); ++i) s = checked_add(s, checked_mul(Int(c.a(j, i)), alpha.c[i]));
    w.c[j] = s;
  }
  return w;
}

bool geq(const Root& beta, const Root& alpha) { return (beta - alpha).is_nonnegative(); }

bool geq(const CartanDatum& c, const Weight& lambda, const Root& alpha) {
  return (lambda - root_to_weight(c, alpha)).is_dominant();
}

CartanDatum fold_cartan(const CartanDatum& c, const std::vector<std::vector<int>>& orbits) {
  const int n = c.rank();
  std::vector<int> orbit_of(n, -1);
  for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
    for (int node : orbits[o]) {
      if (node < 1 || node > n || orbit_of[node - 1] != -1)
        throw DomainError("orbits do not form a partition of the node set");
      orbit_of[node - 1] = o;
    }
  }
  for (int i = 0; i < n; ++i)
    if (orbit_of[i] == -1) throw DomainError("orbits do not cover the node set");
  // No two nodes of one orbit adjacent.
  for (int i = 0; i < n; ++i)
    for (int j : c.neighbors(i))
      if (orbit_of[i] == orbit_of[j])
        throw DomainError("orbit contains adjacent nodes; not a diagram automorphism");

  const int m = static_cast<int>(orbits.size());
  std::vector<std::vector<int>> fa(m, std::vector<int>(m, 0));
  bool all_singleton = true;
  for (int p = 0; p < m; ++p) {
    if (orbits[p].size() > 1) all_singleton = false;
    for (int r = 0; r < m; ++r) {
      // \bar a_{pr} = sum_{i in orbit p} a_{ij}, independent of j in orbit r.
      int val = 0;
      bool first = true;
      for (int j : orbits[r]) {
        int s = 0;
        for (int i : orbits[p]) s += c.a(i - 1, j - 1);
        if (first) {
          val = s;
          first = false;
        } else if (s != val) {
          throw DomainError("partition is not automorphism-compatible");
        }
      }
      fa[p][r] = val;
    }
  }
  CartanDatum folded(fa, "fold(" + c.name() + ")");
  if (all_singleton) return c;
  return folded;
}

std::vector<Root> positive_roots(const CartanDatum& c) {
  const int n = c.rank();
  std::set<Root> roots;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root r(n);
    r.c[i] = 1;
    roots.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier) {
      for (int i = 0; i < n; ++i) {
        // s_i(b) = b - <b, alpha_i^vee> alpha_i, <alpha_j, alpha_i^vee> = a_{ij}.
        Int pair = 0;
        for (int j = 0; j < n; ++j) pair = checked_add(pair, checked_mul(Int(c.a(i, j)), b.c[j]));
        Root r = b;
        r.c[i] = checked_add(r.c[i], checked_neg(pair));
        if (r.is_nonnegative() && !r.is_zero() && roots.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Root>(roots.begin(), roots.end());
}

Weight simple_reflection(const CartanDatum& c, int i, const Weight& w) {
  Weight r = w;
  Int k = w.c[i];
  if (k == 0) return r;
  for (int j = 0; j < c.rank(); ++j)
    r.c[j] = checked_add(r.c[j], checked_neg(checked_mul(k, Int(c.a(j, i)))));
  return r;
}

Weight rho(const CartanDatum& c) {
  Weight r(c.rank());
  for (auto& x : r.c) x = 1;
  return r;
}

Int pairing(const CartanDatum& c, const Weight& mu, const Root& alpha) {
  Int s = 0;
  for (int j = 0; j < c.rank(); ++j)
    s = checked_add(s, checked_mul(alpha.c[j], checked_mul(c.d(j), mu.c[j])));
  return s;
}

}  // namespace qgr
