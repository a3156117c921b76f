#include <algorithm>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "qgr/chartab.hpp"
#include "qgr/io.hpp"

using namespace qgr;

namespace {

LaurentInt v(int e, Int c = 1) { return LaurentInt::monomial(c, e); }

// Rank-1 shorthand: q^{n1} + q^{n2} + ... as an XElem.
XElem str_x(std::initializer_list<int> exps) {
  XElem g;
  for (int n : exps) g.add_term(0, n, 1);
  return g;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/qgr_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("rank-1 fundamental characters") {
  CHECK(sl2_fundamental(0) == parse_ax("e[q^0]+e[x{1:2:-1}]"));
  CHECK(sl2_fundamental(2) == parse_ax("e[q^2]+e[x{1:4:-1}]"));
  // Both terms differ by the image of q^{n+1} alpha_1.
  CartanDatum a1 = build_cartan('A', 1);
  for (int n : {-3, 0, 5}) {
    auto terms = sl2_fundamental(n).c;
    REQUIRE(terms.size() == 2);
    CHECK(sub_xy(a1, terms.begin()->first, y_monomial(0, n + 1)) == terms.rbegin()->first);
  }
}

TEST_CASE("spectral shifts") {
  CHECK(shift_spectral(sl2_fundamental(0), 2) == sl2_fundamental(2));
  AXElem x = sl2_fundamental(4);
  CHECK(shift_spectral(x, 0) == x);
  CHECK(shift_spectral(shift_spectral(x, 3), -3) == x);
}

TEST_CASE("standard characters: printed rank-1 instances") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);

  AXElem w = standard_char(t, str_x({2, 0}));
  AXElem expect = parse_ax("e[q^2+q^0]+e[x{1:0:1,1:4:-1}]+e[x{1:2:-1,1:4:-1}]+(v)*e[]");
  CHECK(w == expect);

  AXElem w2 = standard_char(t, x_monomial(0, 0, 2));
  AXElem expect2;
  expect2.add_term(x_monomial(0, 0, 2), v(0));
  expect2.add_term(x_monomial(0, 0) - x_monomial(0, 2), v(1) + v(-1));
  expect2.add_term(x_monomial(0, 2, -2), v(0));
  CHECK(w2 == expect2);

  CHECK(standard_char(t, str_x({0})) == sl2_fundamental(0));
}

TEST_CASE("standard characters: binomial coefficients for repeated factors") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);
  for (int k = 1; k <= 5; ++k) {
    for (int n : {-2, 0, 2}) {
      AXElem w = standard_char(t, x_monomial(0, n, k));
      AXElem expect;
      for (int i = 0; i <= k; ++i)
        expect.add_term(x_monomial(0, n, i) + x_monomial(0, n + 2, i - k), v_binomial(k, i));
      CHECK(w == expect);
    }
  }
}

TEST_CASE("standard characters do not depend on the factor order") {
  // The same dominant element is assembled regardless of how its factor
  // multiset is presented, so permuting string input must be invisible.
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);
  XElem g = str_x({4, 0}) + x_monomial(0, 0);
  XElem same = x_monomial(0, 0, 2) + x_monomial(0, 4);
  CHECK(g == same);
  CHECK(standard_char(t, g) == standard_char(t, same));
}

TEST_CASE("greedy string decomposition") {
  CHECK(string_decompose(str_x({2, 0})) == std::vector<std::vector<int>>{{2, 0}});
  CHECK(string_decompose(str_x({4, 0})) == std::vector<std::vector<int>>{{4}, {0}});
  CHECK(string_decompose(str_x({2, 0}) + x_monomial(0, 0)) ==
        std::vector<std::vector<int>>{{2, 0}, {0}});
}

TEST_CASE("simple characters in rank 1") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);

  CHECK(simple_char(t, str_x({2, 0})) ==
        parse_ax("e[q^2+q^0]+e[x{1:0:1,1:4:-1}]+e[x{1:2:-1,1:4:-1}]"));
  CHECK(simple_char(t, x_monomial(0, 0, 2)) == standard_char(t, x_monomial(0, 0, 2)));
  CHECK(simple_char(t, str_x({0})) == sl2_fundamental(0));

  // A string of k entries restricts to k+1 monomials, each with coefficient
  // summing to 1 at v=1.
  for (auto exps : {std::vector<int>{4, 2, 0}, std::vector<int>{1, -1}}) {
    XElem g;
    for (int n : exps) g.add_term(0, n, 1);
    AXElem s = simple_char(t, g);
    CHECK(s.c.size() == exps.size() + 1);
    for (const auto& [key, p] : s.c) {
      Int at_one = 0;
      for (const auto& [e, co] : p.terms()) at_one += co;
      CHECK(at_one == 1);
    }
  }
}

TEST_CASE("support sets of standard modules") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);

  auto has = [](const std::vector<YElem>& s, const YElem& e) {
    return std::find(s.begin(), s.end(), e) != s.end();
  };

  auto [lam, lam_plus] = lambda_sets(t, str_x({0}));
  CHECK(lam.size() == 2);
  CHECK(has(lam, YElem{}));
  CHECK(has(lam, y_monomial(0, 1)));
  CHECK(lam_plus == std::vector<YElem>{YElem{}});

  auto [lam2, lam2_plus] = lambda_sets(t, x_monomial(0, 0, 2));
  CHECK(has(lam2, YElem{}));
  CHECK(has(lam2, y_monomial(0, 1)));
  CHECK_FALSE(has(lam2_plus, y_monomial(0, 1)));
  for (const YElem& e : lam2_plus) CHECK(has(lam2, e));
}

TEST_CASE("table files round trip") {
  CartanDatum a1 = build_cartan('A', 1);
  CharTable t(a1);
  standard_char(t, str_x({2, 0}));  // populate fundamentals and a simple

  TempFile f("roundtrip.tbl");
  table_save(t, f.path);
  CharTable back = table_load(f.path);
  CHECK(back.cartan().name() == "A1");
  CHECK(back.fund() == t.fund());
  CHECK(back.simples() == t.simples());
}

TEST_CASE("table validation rejects bad characters") {
  TempFile f("negative.tbl");
  {
    std::ofstream out(f.path);
    out << "fund A1 1 0 := e[q^0]+(-1)*e[x{1:2:-1}]\n";
  }
  CHECK_THROWS_AS(table_load(f.path), DomainError);

  TempFile g("badsupport.tbl");
  {
    std::ofstream out(g.path);
    // Second key is not reachable from the top by subtracting Omega(Y+).
    out << "fund A1 1 0 := e[q^0]+e[x{1:3:1}]\n";
  }
  CHECK_THROWS_AS(table_load(g.path), DomainError);
}

TEST_CASE("a loaded fundamental unlocks standard characters in rank 2") {
  TempFile f("a2fund.tbl");
  {
    std::ofstream out(f.path);
    out << "# rank-2 fundamental with top term q^0 at node 1\n";
    out << "fund A2 1 0 := e[x{1:0:1}]+e[x{1:2:-1,2:1:1}]+e[x{2:3:-1}]\n";
  }
  CharTable t = table_load(f.path);
  AXElem w = standard_char(t, x_monomial(0, 0));
  CHECK(w == t.fundamental(0, 0));
  CHECK(w.c.size() == 3);

  // The same-node spectral shift serves other exponents too.
  AXElem shifted = standard_char(t, x_monomial(0, 4));
  CHECK(shifted == shift_spectral(w, 4));
}
