#ifndef POLYTORIC_SUITES_HPP
#define POLYTORIC_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace polytoric {

struct SuiteResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::vector<std::string> notes;  // reproducers for the first failures
  bool pass() const { return failures == 0; }
};

// Randomized property suites.  Every instance derives its stream from
// (seed, instance index), so any failure note pins the instance down.
//   sep-veronese          box bases satisfy the strong exchange check
//   power-sep             powers of a box basis stay strong-exchange
//   product-polymatroidal products of exchange-closed bases stay closed
//   symmetric-exchange    the exchange axiom comes symmetrized for free
//   white-proper          proper moves connect fibers of box products
//   white-single-column   one-column moves connect fibers of box products
//   generalized-vs-proper generalized moves never connect more than
//                         proper ones, fiber by fiber, and the collapsed
//                         sweep agrees with the direct one
//   shortcut              the two-step exchange shortcut on box bases
//   column-permutation    one-column move counts survive relabeling
//   gb-fiber-oracle       degree-bounded generators certify against
//                         exhaustive fiber enumeration
std::vector<std::string> suite_names();

// instances < 0 means the suite's default size; 0 runs nothing and passes.
SuiteResult run_suite(const std::string& name, int instances, std::uint64_t seed);

// All suites; scale < 0 keeps defaults, otherwise scale instances each
// (halved for the oracle suite).
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int scale = -1);

}  // namespace polytoric

#endif
