#include <random>

#include "doctest.h"
#include "qgr/lattice.hpp"

using namespace qgr;

namespace {

// Closed rank-1 rule: eps(q^m, q^n) = (-1)^{j+1} when n - m = 2j with j >= 1,
// and 0 otherwise.
Int eps_rule(int m, int n) {
  int d = n - m;
  if (d <= 0 || d % 2 != 0) return 0;
  return (d / 2) % 2 == 1 ? 1 : -1;
}

Int bracket_rule(int m, int n) {
  int d = n - m;
  if (d == 0 || d % 2 != 0) return 0;
  int l = d / 2;
  Int t = l % 2 == 0 ? 1 : -1;
  return l < 0 ? t : -t;
}

XElem rand_x(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> node(0, rank - 1), exp(-6, 6);
  std::uniform_int_distribution<Int> coeff(-3, 3);
  XElem g;
  for (int t = 0; t < 3; ++t) g.add_term(node(rng), exp(rng), coeff(rng));
  return g;
}

YElem rand_y(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> node(0, rank - 1), exp(-6, 6);
  std::uniform_int_distribution<Int> coeff(-3, 3);
  YElem h;
  for (int t = 0; t < 3; ++t) h.add_term(node(rng), exp(rng), coeff(rng));
  return h;
}

}  // namespace

TEST_CASE("omega on monomials") {
  CartanDatum a1 = build_cartan('A', 1);
  XElem expect = x_monomial(0, 1) + x_monomial(0, -1);
  CHECK(omega(a1, y_monomial(0, 0)) == expect);

  CartanDatum a2 = build_cartan('A', 2);
  XElem e2 = x_monomial(0, 1) + x_monomial(0, -1) - x_monomial(1, 0);
  CHECK(omega(a2, y_monomial(0, 0)) == e2);
  CHECK(omega(a2, YElem{}).is_zero());
}

TEST_CASE("series inverse of omega: rank-1 geometric coefficients") {
  CartanDatum a1 = build_cartan('A', 1);
  SeriesRootVec xi = omega_inv(a1, x_monomial(0, 0), 9);
  for (int e = -1; e >= -9; e -= 2) CHECK(xi.per_node[0].coeff(e) == ((-e - 1) / 2 % 2 ? -1 : 1));
  for (int e = 0; e >= -9; e -= 2) CHECK(xi.per_node[0].coeff(e) == 0);
}

TEST_CASE("omega and its inverse cancel") {
  std::mt19937_64 rng(3);
  for (const char* ty : {"A1", "A2", "D4"}) {
    CartanDatum c = build_cartan(ty);
    for (int i = 0; i < 50; ++i) {
      YElem eta = rand_y(rng, c.rank());
      SeriesRootVec xi = omega_inv(c, omega(c, eta), 20);
      // The series terminates: it must equal eta exactly within the window.
      for (int node = 0; node < c.rank(); ++node)
        for (const auto& [e, co] : xi.per_node[node].terms())
          CHECK(co == eta.coeff(node, e));
    }
  }
}

TEST_CASE("pairing constants") {
  CartanDatum a2 = build_cartan('A', 2);
  SeriesRootVec xi;
  xi.per_node.assign(2, TruncSeries(-8));
  xi.per_node[0].add_term(-1, 1);
  CHECK(pair_const(xi, x_monomial(0, 1)) == 1);
  CHECK(pair_const(xi, x_monomial(1, 0)) == 0);

  SeriesRootVec geom;
  geom.per_node.assign(1, TruncSeries(-8));
  for (int e = -2; e >= -8; e -= 2) geom.per_node[0].add_term(e, (-e - 2) / 2 % 2 ? -1 : 1);
  CHECK(pair_const(geom, x_monomial(0, 2)) == 1);
}

TEST_CASE("rank-1 closed rules for the cocycle and the bracket") {
  CartanDatum a1 = build_cartan('A', 1);
  for (int m = -10; m <= 10; ++m) {
    for (int n = -10; n <= 10; ++n) {
      CHECK(epsilon(a1, x_monomial(0, m), x_monomial(0, n)) == eps_rule(m, n));
      CHECK(bracket(a1, x_monomial(0, m), x_monomial(0, n)) == bracket_rule(m, n));
    }
  }
  CHECK(epsilon(a1, XElem{}, x_monomial(0, 3)) == 0);
}

TEST_CASE("cocycle identity on random triples") {
  std::mt19937_64 rng(17);
  for (const char* ty : {"A1", "A2", "A3", "D4"}) {
    CartanDatum c = build_cartan(ty);
    for (int i = 0; i < 60; ++i) {
      XElem a = rand_x(rng, c.rank()), b = rand_x(rng, c.rank()), d = rand_x(rng, c.rank());
      CHECK(epsilon(c, a + b, d) + epsilon(c, a, b) == epsilon(c, a, b + d) + epsilon(c, b, d));
    }
  }
}

TEST_CASE("bracket is skew and bi-additive") {
  std::mt19937_64 rng(23);
  CartanDatum c = build_cartan('A', 2);
  for (int i = 0; i < 40; ++i) {
    XElem a = rand_x(rng, 2), b = rand_x(rng, 2), d = rand_x(rng, 2);
    CHECK(bracket(c, a, b) == -bracket(c, b, a));
    CHECK(bracket(c, a, a) == 0);
    CHECK(bracket(c, a + b, d) == bracket(c, a, d) + bracket(c, b, d));
  }
}

TEST_CASE("mixed additive shorthand") {
  CartanDatum a1 = build_cartan('A', 1);
  CHECK(sub_xy(a1, x_monomial(0, 0), y_monomial(0, 1)) == -x_monomial(0, 2));
  XElem two = x_monomial(0, 0, 2);
  CHECK(sub_xy(a1, two, y_monomial(0, 1)) == x_monomial(0, 0) - x_monomial(0, 2));
  XElem g = x_monomial(0, 4);
  CHECK(add_xy(a1, g, YElem{}) == g);
}

TEST_CASE("order predicates and the spectral collapse") {
  CartanDatum a1 = build_cartan('A', 1);
  CHECK(succeq_xy(a1, x_monomial(0, 2) + x_monomial(0, 0), y_monomial(0, 1)));
  CHECK_FALSE(succeq_xy(a1, x_monomial(0, 0, 2), y_monomial(0, 1)));
  CHECK(succeq_yy(y_monomial(0, 1, 2), y_monomial(0, 1)));
  CHECK_FALSE(succeq_yy(y_monomial(0, 1), y_monomial(0, 2)));

  Weight w = spec_q1(a1, x_monomial(0, 5) + x_monomial(0, -3));
  CHECK(w.c == std::vector<Int>{2});
}

TEST_CASE("self-cocycle values") {
  CartanDatum a1 = build_cartan('A', 1);
  CHECK(epsilon_gamma(a1, x_monomial(0, 0, 2)) == 0);
  CHECK(epsilon_gamma(a1, x_monomial(0, 0) - x_monomial(0, 2)) == -1);
  CHECK(epsilon_gamma(a1, XElem{}) == 0);
}

TEST_CASE("adjunction between the pairing and omega") {
  std::mt19937_64 rng(31);
  for (const char* ty : {"A1", "A2", "D4"}) {
    CartanDatum c = build_cartan(ty);
    for (int i = 0; i < 30; ++i) {
      XElem g = rand_x(rng, c.rank());
      YElem eta = rand_y(rng, c.rank());
      SeriesRootVec xi = omega_inv(c, g, 40);
      CHECK(pair_const(xi, omega(c, eta)) == pair_const_finite(eta, g));
    }
  }
}

TEST_CASE("exact integral solutions of omega") {
  std::mt19937_64 rng(37);
  for (const char* ty : {"A1", "A2", "D4"}) {
    CartanDatum c = build_cartan(ty);
    for (int i = 0; i < 50; ++i) {
      YElem eta = rand_y(rng, c.rank());
      auto back = solve_omega(c, omega(c, eta));
      REQUIRE(back.has_value());
      CHECK(*back == eta);
    }
  }
  CartanDatum a1 = build_cartan('A', 1);
  CHECK_FALSE(solve_omega(a1, x_monomial(0, 0)).has_value());
}
