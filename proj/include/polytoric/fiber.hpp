#ifndef POLYTORIC_FIBER_HPP
#define POLYTORIC_FIBER_HPP

#include <optional>
#include <string>
#include <vector>

#include "polytoric/presentation.hpp"

namespace polytoric {

struct FiberOptions {
  std::uint64_t cap = 1'000'000;  // max elements per fiber (FiberTooLarge beyond)
};

// All degree-e monomials in the y variables whose image equals target,
// sorted canonically.  Empty when target has the wrong degree.
std::vector<YMonomial> fiber(const Presentation& p, const Monomial& target, int e,
                             const FiberOptions& opts = {});

// Multiset containment / replacement on sorted id vectors.
bool ym_contains(const YMonomial& m, const YMonomial& sub);
YMonomial ym_replace(const YMonomial& m, const YMonomial& out, const YMonomial& in);

struct Partition {
  std::vector<int> comp;  // component id per fiber element, 0-based
  int components = 0;
};

// Connectivity of a fiber under explicit moves, each applied to any
// sub-multiset in either direction.
Partition fiber_components(const std::vector<YMonomial>& fib,
                           const std::vector<Binomial>& moves);
bool fiber_connected(const std::vector<YMonomial>& fib,
                     const std::vector<Binomial>& moves);

struct DegreeStats {
  int degree = 0;
  std::uint64_t fibers = 0;        // fibers examined at this degree
  std::uint64_t nontrivial = 0;    // fibers with more than one element
  std::uint64_t largest = 0;       // largest fiber size
  std::uint64_t disconnected = 0;  // fibers that fell apart
};

struct WhiteFailure {
  int degree = 0;
  std::string target;
  std::vector<std::string> separated;  // one element from each of two components
};

struct WhiteReport {
  bool pass = true;
  std::string moves;         // e.g. "proper+linear"
  std::string fiber_domain;  // "image-multisets" or "label-multisets"
  int d_max = 0;
  std::vector<DegreeStats> degrees;
  std::optional<WhiteFailure> failure;
};

// Checks that every fiber of degree <= d_max is connected under the
// selected moves together with the linear relations.  Exchange moves
// act on images only, so those runs collapse image-equal variables and
// sweep image multisets; the single-column run keeps label multisets.
WhiteReport white_check(const Presentation& p, MoveKind kind, int d_max,
                        const FiberOptions& opts = {});

struct Generator {
  Binomial binomial;
  int degree = 0;
};

// Degree-by-degree generating set: walking degrees 1..d_max and fibers
// in canonical order, adds the canonically smallest binomial joining two
// components whenever the output so far leaves a fiber disconnected.
std::vector<Generator> minimal_generators(const Presentation& p, int d_max,
                                          const FiberOptions& opts = {});

// Distinct degree-e products of basis images, for e = 1..d_max; the
// degree-e list enumerates the targets of every nonempty degree-e fiber.
std::vector<std::vector<Monomial>> target_ladder(const Presentation& p, int d_max);

}  // namespace polytoric

#endif
