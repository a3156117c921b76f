#include "doctest.h"
#include "qgr/decompose.hpp"
#include "qgr/io.hpp"

using namespace qgr;

namespace {

LaurentInt v(int e, Int c = 1) { return LaurentInt::monomial(c, e); }

XElem str_x(std::initializer_list<int> exps) {
  XElem g;
  for (int n : exps) g.add_term(0, n, 1);
  return g;
}

}  // namespace

TEST_CASE("standard classes expand with a unit leading coefficient") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);
  BExpansion e = expand_in_simples(t, standard_char(t, str_x({2, 0})));
  REQUIRE(e.success());
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms.at(str_x({2, 0})) == v(0));
  CHECK(e.terms.at(XElem{}) == v(1));
}

TEST_CASE("basis elements are their own expansion") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);
  for (XElem g : {str_x({2, 0}), str_x({4, 0}), x_monomial(0, 0, 3)}) {
    BExpansion e = expand_in_simples(t, simple_char(t, g));
    REQUIRE(e.success());
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms.at(g).is_one());
  }
}

TEST_CASE("product of two fundamentals") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);
  AXElem prod = ax_mul(a1, simple_char(t, str_x({2})), simple_char(t, str_x({0})));
  BExpansion e = expand_in_simples(t, prod);
  REQUIRE(e.success());
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms.at(str_x({2, 0})) == v(-1));
  CHECK(e.terms.at(XElem{}).is_one());
  CHECK(positivity_check(e));
}

TEST_CASE("reconstruction recovers the input") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);
  AXElem x = ax_mul(a1, standard_char(t, str_x({2, 0})), simple_char(t, str_x({-2})));
  BExpansion e = expand_in_simples(t, x);
  REQUIRE(e.success());
  AXElem back;
  for (const auto& [g, p] : e.terms) back += ax_scale(simple_char(t, g), p);
  CHECK(back == x);
}

TEST_CASE("positivity reports offenders") {
  BExpansion e;
  e.terms[x_monomial(0, 0)] = v(1) - v(0);
  std::vector<XElem> bad;
  CHECK_FALSE(positivity_check(e, &bad));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == x_monomial(0, 0));
  CHECK(positivity_check(BExpansion{}));
}

TEST_CASE("iteration cap converts a runaway elimination into an error") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);
  CHECK_THROWS_AS(expand_in_simples(t, standard_char(t, str_x({2, 0})), 1), ResourceError);
}

TEST_CASE("probe on aligned and split pairs") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);

  ProbeReport same = conjecture_probe(t, str_x({0}), str_x({0}));
  CHECK(same.single);
  CHECK(same.commutes);
  CHECK(same.exact);
  CHECK(same.coherent());

  ProbeReport split = conjecture_probe(t, str_x({2}), str_x({0}));
  CHECK_FALSE(split.single);
  CHECK_FALSE(split.exact);
  CHECK(split.coherent());

  ProbeReport unit = conjecture_probe(t, str_x({4, 2}), XElem{});
  CHECK(unit.single);
  CHECK(unit.commutes);
  CHECK(unit.exact);
}
