#include "doctest.h"
#include "qgr/errors.hpp"
#include "qgr/suites.hpp"

using namespace qgr;

TEST_CASE("suite catalogue") {
  auto names = suite_names();
  CHECK(names.size() == 8);
  CHECK_THROWS_AS(run_suite("no-such-suite", 5, 1), DomainError);
}

TEST_CASE("identical parameters give byte-identical reports") {
  for (const char* name : {"cocycle", "rank-identities", "folding"}) {
    SuiteReport a = run_suite(name, 25, 7);
    SuiteReport b = run_suite(name, 25, 7);
    CHECK(a.passed);
    CHECK(a.text == b.text);
    CHECK(a.passed == b.passed);
  }
}

TEST_CASE("every suite passes a short run") {
  for (const auto& name : suite_names()) {
    SuiteReport r = run_suite(name, 15, 42);
    CHECK_MESSAGE(r.passed, r.text);
  }
}
