#include <random>

#include "doctest.h"
#include "qgr/io.hpp"
#include "qgr/laurent.hpp"

using namespace qgr;

namespace {

LaurentInt q(int e, Int c = 1) { return LaurentInt::monomial(c, e); }

// [n] = (q^n - q^{-n}) / (q - q^{-1}) as a bar-invariant Laurent polynomial.
LaurentInt quantum_int(int n) {
  LaurentInt r;
  for (int e = n - 1; e >= -(n - 1); e -= 2) r.add_term(e, 1);
  return r;
}

LaurentInt rand_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-5, 5);
  std::uniform_int_distribution<Int> coeff(-4, 4);
  LaurentInt p;
  for (int t = 0; t < 3; ++t) p.add_term(exp(rng), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("ring operations are exact and canonical") {
  CHECK((q(1) + q(-1)) * (q(1) - q(-1)) == q(2) - q(-2));
  LaurentInt x = q(3, 2) + q(0, -1);
  CHECK(x * LaurentInt::one() == x);
  LaurentInt s = q(1) + q(-1);
  CHECK(s * s == q(2) + q(0, 2) + q(-2));
  CHECK((x - x).is_zero());
}

TEST_CASE("multiplication distributes over addition") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentInt a = rand_poly(rng), b = rand_poly(rng), c = rand_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("bar negates exponents and is an involution") {
  CHECK((q(2) + q(0, 3)).bar() == q(-2) + q(0, 3));
  CHECK((q(1) + q(-1)).bar() == q(1) + q(-1));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    LaurentInt a = rand_poly(rng);
    CHECK(a.bar().bar() == a);
  }
}

TEST_CASE("symmetric binomials: printed coefficients") {
  CHECK(v_binomial(2, 1) == q(1) + q(-1));
  for (int k = 0; k <= 6; ++k) CHECK(v_binomial(k, 0).is_one());
  CHECK(v_binomial(3, -1).is_zero());
  CHECK(v_binomial(3, 4).is_zero());
}

TEST_CASE("symmetric binomial (4,2) against the factorial identity") {
  // [4 2] * [2]! * [2]! = [4]!; quotient frozen from polynomial division.
  LaurentInt fact2 = quantum_int(2) * quantum_int(1);
  LaurentInt fact4 = quantum_int(4) * quantum_int(3) * fact2;
  LaurentInt b = v_binomial(4, 2);
  CHECK(b * fact2 * fact2 == fact4);
  CHECK(b == q(4) + q(2) + q(0, 2) + q(-2) + q(-4));
}

TEST_CASE("binomials are palindromic and sum to the ordinary binomial") {
  for (int m = 0; m <= 12; ++m) {
    Int choose = 1;
    for (int p = 0; p <= m; ++p) {
      LaurentInt b = v_binomial(m, p);
      CHECK(b.is_palindromic());
      Int at_one = 0;
      for (const auto& [e, c] : b.terms()) at_one += c;
      CHECK(at_one == choose);
      choose = choose * (m - p) / (p + 1);
    }
  }
}
