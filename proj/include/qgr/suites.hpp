#ifndef QGR_SUITES_HPP
#define QGR_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qgr {

struct SuiteReport {
  bool passed = false;
  int cases = 0;
  int failures = 0;
  std::string text;  // deterministic for a fixed (name, n, seed)
};

// Known suites: cocycle, associativity, rank-identities, restriction-identities,
// positivity, palindromicity, classical, folding.
std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& name, int n, std::uint64_t seed);

}  // namespace qgr

#endif
