#include <random>

#include "doctest.h"
#include "qgr/axring.hpp"
#include "qgr/chartab.hpp"

using namespace qgr;

namespace {

LaurentInt v(int e, Int c = 1) { return LaurentInt::monomial(c, e); }

AXElem rand_ax(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), vexp(-2, 2);
  std::uniform_int_distribution<Int> coeff(-2, 2);
  AXElem a;
  for (int t = 0; t < 2; ++t) {
    XElem g;
    g.add_term(0, exp(rng), coeff(rng));
    g.add_term(0, exp(rng), coeff(rng));
    a.add_term(g, v(vexp(rng), coeff(rng)));
  }
  return a;
}

}  // namespace

TEST_CASE("twisted monomial products") {
  CartanDatum a1 = build_cartan('A', 1);
  AXElem lhs = ax_mul(a1, ax_basis(x_monomial(0, 0)), ax_basis(x_monomial(0, -2)));
  AXElem expect;
  expect.add_term(x_monomial(0, 0) + x_monomial(0, -2), v(-1));
  CHECK(lhs == expect);

  AXElem up = ax_mul(a1, ax_basis(x_monomial(0, 0)), ax_basis(x_monomial(0, 2)));
  AXElem expect_up;
  expect_up.add_term(x_monomial(0, 0) + x_monomial(0, 2), v(1));
  CHECK(up == expect_up);

  std::mt19937_64 rng(5);
  AXElem x = rand_ax(rng);
  CHECK(ax_mul(a1, ax_one(), x) == x);
  CHECK(ax_mul(a1, x, ax_one()) == x);
}

TEST_CASE("bar involution on coefficients") {
  AXElem a;
  a.add_term(x_monomial(0, 3), v(1));
  AXElem b;
  b.add_term(x_monomial(0, 3), v(-1));
  CHECK(ax_bar(a) == b);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    AXElem x = rand_ax(rng);
    CHECK(ax_bar(ax_bar(x)) == x);
  }

  CHECK(ax_bar(sl2_fundamental(0)) == sl2_fundamental(0));
}

TEST_CASE("coefficient access and dominant filtering") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);
  AXElem w2 = standard_char(t, x_monomial(0, 0, 2));
  CHECK(w2.coeff(x_monomial(0, 0) - x_monomial(0, 2)) == v(1) + v(-1));
  CHECK(w2.coeff(x_monomial(0, 7)).is_zero());

  auto dom = dominant_terms(sl2_fundamental(0));
  REQUIRE(dom.size() == 1);
  CHECK(dom[0] == x_monomial(0, 0));
}

TEST_CASE("antihomomorphism law for bar") {
  std::mt19937_64 rng(13);
  CartanDatum a1 = build_cartan('A', 1);
  for (int i = 0; i < 60; ++i) {
    AXElem x = rand_ax(rng), y = rand_ax(rng);
    CHECK(ax_bar(ax_mul(a1, x, y)) == ax_mul(a1, ax_bar(y), ax_bar(x)));
  }
}

TEST_CASE("opposite products differ by monomial-wise twist powers") {
  std::mt19937_64 rng(19);
  CartanDatum a1 = build_cartan('A', 1);
  for (int i = 0; i < 40; ++i) {
    XElem g = x_monomial(0, std::uniform_int_distribution<int>(-4, 4)(rng));
    XElem h = x_monomial(0, std::uniform_int_distribution<int>(-4, 4)(rng));
    AXElem xy = ax_mul(a1, ax_basis(g), ax_basis(h));
    AXElem yx = ax_mul(a1, ax_basis(h), ax_basis(g));
    Int br = bracket(a1, g, h);
    CHECK(xy == ax_scale(yx, v(static_cast<int>(2 * br))));
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(29);
  for (const char* ty : {"A1", "A2", "A3"}) {
    CartanDatum c = build_cartan(ty);
    std::uniform_int_distribution<int> node(0, c.rank() - 1), exp(-4, 4), vexp(-2, 2);
    std::uniform_int_distribution<Int> coeff(-2, 2);
    auto rand_elem = [&] {
      AXElem a;
      for (int t = 0; t < 2; ++t) {
        XElem g;
        g.add_term(node(rng), exp(rng), coeff(rng));
        a.add_term(g, v(vexp(rng), coeff(rng)));
      }
      return a;
    };
    for (int i = 0; i < 60; ++i) {
      AXElem x = rand_elem(), y = rand_elem(), z = rand_elem();
      CHECK(ax_mul(c, ax_mul(c, x, y), z) == ax_mul(c, x, ax_mul(c, y, z)));
    }
  }
}
