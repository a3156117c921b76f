#ifndef QGR_CARTAN_HPP
#define QGR_CARTAN_HPP

#include <string>
#include <vector>

#include "qgr/laurent.hpp"

namespace qgr {

// Element of the weight lattice P in fundamental-weight coordinates.
struct Weight {
  std::vector<Int> c;

  Weight() = default;
  explicit Weight(int rank) : c(rank, 0) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (Int x : c)
      if (x != 0) return false;
    return true;
  }
  bool is_dominant() const {
    for (Int x : c)
      if (x < 0) return false;
    return true;
  }
  Int height() const {
    Int h = 0;
    for (Int x : c) h = checked_add(h, x);
    return h;
  }

  friend Weight operator+(Weight a, const Weight& b) {
    for (int i = 0; i < a.rank(); ++i) a.c[i] = checked_add(a.c[i], b.c[i]);
    return a;
  }
  friend Weight operator-(Weight a, const Weight& b) {
    for (int i = 0; i < a.rank(); ++i) a.c[i] = checked_add(a.c[i], checked_neg(b.c[i]));
    return a;
  }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
};

// Element of the root lattice Q in simple-root coordinates.
struct Root {
  std::vector<Int> c;

  Root() = default;
  explicit Root(int rank) : c(rank, 0) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (Int x : c)
      if (x != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (Int x : c)
      if (x < 0) return false;
    return true;
  }
  Int height() const {
    Int h = 0;
    for (Int x : c) h = checked_add(h, x);
    return h;
  }

  friend Root operator+(Root a, const Root& b) {
    for (int i = 0; i < a.rank(); ++i) a.c[i] = checked_add(a.c[i], b.c[i]);
    return a;
  }
  friend Root operator-(Root a, const Root& b) {
    for (int i = 0; i < a.rank(); ++i) a.c[i] = checked_add(a.c[i], checked_neg(b.c[i]));
    return a;
  }
  friend bool operator==(const Root& a, const Root& b) { return a.c == b.c; }
  friend bool operator<(const Root& a, const Root& b) { return a.c < b.c; }
};

// Finite-type Cartan datum: node set {1..rank} (exposed 1-based, stored
// 0-based), Cartan matrix a, and the coprime symmetrizers d_i. Validity
// (sign pattern, symmetrizability, positive definiteness) is enforced at
// construction; downstream code may assume it.
class CartanDatum {
 public:
  CartanDatum(std::vector<std::vector<int>> a, std::string name);

  int rank() const { return static_cast<int>(a_.size()); }
  int a(int i, int j) const { return a_[i][j]; }
  Int d(int i) const { return d_[i]; }
  bool simply_laced() const { return simply_laced_; }
  const std::string& name() const { return name_; }
  const std::vector<int>& neighbors(int i) const { return nbr_[i]; }

 private:
  std::vector<std::vector<int>> a_;
  std::vector<Int> d_;
  std::vector<std::vector<int>> nbr_;  // j with a(i,j) != 0, j != i
  bool simply_laced_;
  std::string name_;
};

// Standard simply-laced data, Bourbaki numbering. family is 'A', 'D' or 'E'.
CartanDatum build_cartan(char family, int rank);

// Parse "A2", "D4", "E6" into build_cartan arguments.
CartanDatum build_cartan(const std::string& type);

// alpha_i -> sum_j a_{ji} omega_j, extended linearly.
Weight root_to_weight(const CartanDatum& c, const Root& alpha);

// beta >= alpha : beta - alpha in Q+.
bool geq(const Root& beta, const Root& alpha);
// lambda >= alpha : lambda - alpha in P+ (alpha read through the embedding).
bool geq(const CartanDatum& c, const Weight& lambda, const Root& alpha);

// Diagram-automorphism folding: orbits is a partition of {1..rank} (1-based).
// Entries of the folded matrix must not depend on the representative chosen,
// and no two nodes within an orbit may be adjacent.
CartanDatum fold_cartan(const CartanDatum& c, const std::vector<std::vector<int>>& orbits);

// All positive roots, by reflection closure from the simple roots.
std::vector<Root> positive_roots(const CartanDatum& c);

// <w, alpha_i^vee> is just the i-th coordinate; the reflection s_i.
Weight simple_reflection(const CartanDatum& c, int i, const Weight& w);

// Weight with every coordinate 1 (the rho shift).
Weight rho(const CartanDatum& c);

// Scaled invariant product (mu | alpha) = sum_j alpha_j d_j mu_j, integral by
// construction (mu in omega-coordinates, alpha in alpha-coordinates).
Int pairing(const CartanDatum& c, const Weight& mu, const Root& alpha);

}  // namespace qgr

#endif
