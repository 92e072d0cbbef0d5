#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "polytoric/basis.hpp"
#include "polytoric/errors.hpp"
#include "polytoric/fiber.hpp"
#include "polytoric/presentation.hpp"

using namespace polytoric;

namespace {

Monomial m(std::vector<std::uint64_t> e) { return Monomial(std::move(e)); }

MonomialBasis example_six() {
  return MonomialBasis(4, {m({1, 1, 1, 0}), m({1, 0, 2, 0}), m({0, 2, 1, 0}),
                           m({0, 1, 2, 0}), m({0, 1, 1, 1}), m({0, 0, 2, 1})});
}

ProductStructure segre22() {
  MonomialBasis a(4, {m({1, 0, 0, 0}), m({0, 1, 0, 0})});
  MonomialBasis b(4, {m({0, 0, 1, 0}), m({0, 0, 0, 1})});
  return ProductStructure::product(a, b);
}

// Every degree-e y monomial, by odometer over sorted id tuples.
std::vector<YMonomial> all_ym(int nvars, int e) {
  std::vector<YMonomial> out;
  YMonomial cur(e, 0);
  while (true) {
    out.push_back(cur);
    int k = e - 1;
    while (k >= 0 && cur[k] == nvars - 1) --k;
    if (k < 0) break;
    ++cur[k];
    for (int t = k + 1; t < e; ++t) cur[t] = cur[k];
  }
  return out;
}

}  // namespace

TEST_CASE("fiber agrees with brute enumeration") {
  for (int which = 0; which < 2; ++which) {
    Presentation p = which == 0 ? build_presentation(example_six())
                                : build_presentation(segre22());
    for (int e = 1; e <= 2; ++e) {
      // group every degree-e y monomial by image
      std::map<Monomial, std::vector<YMonomial>> groups;
      for (const YMonomial& ym : all_ym(p.var_count(), e))
        groups[ym_image(p, ym)].push_back(ym);
      std::uint64_t total = 0;
      for (auto& [target, want] : groups) {
        std::sort(want.begin(), want.end(),
                  [](const YMonomial& a, const YMonomial& b) {
                    return ym_compare(a, b) < 0;
                  });
        CHECK(fiber(p, target, e) == want);
        total += want.size();
      }
      // ladder lists exactly the nonempty targets
      std::vector<std::vector<Monomial>> ladder = target_ladder(p, e);
      CHECK(ladder[e - 1].size() == groups.size());
      for (const Monomial& t : ladder[e - 1]) CHECK(groups.count(t) == 1);
      CHECK(total == static_cast<std::uint64_t>(all_ym(p.var_count(), e).size()));
    }
  }
}

TEST_CASE("fiber edge cases") {
  Presentation p = build_presentation(example_six());
  // wrong-degree target: empty, not an error
  CHECK(fiber(p, m({1, 1, 1, 0}), 2).empty());
  CHECK(fiber(p, m({9, 9, 9, 9}), 3).empty());
  // the smallest cap still admitting singletons
  FiberOptions tight;
  tight.cap = 1;
  CHECK(fiber(p, m({1, 1, 1, 0}), 1, tight).size() == 1);
  tight.cap = 0;
  CHECK_THROWS_AS(fiber(p, m({1, 1, 1, 0}), 1, tight), FiberTooLarge);
}

TEST_CASE("multiset helpers") {
  CHECK(ym_contains({0, 1, 1, 3}, {1, 3}));
  CHECK(ym_contains({0, 1, 1, 3}, {1, 1}));
  CHECK_FALSE(ym_contains({0, 1, 1, 3}, {1, 1, 1}));
  CHECK_FALSE(ym_contains({0, 1}, {2}));
  CHECK(ym_contains({0, 1}, {}));
  CHECK(ym_replace({0, 1, 1, 3}, {1, 3}, {2, 2}) == YMonomial{0, 1, 2, 2});
  CHECK(ym_replace({0, 1}, {}, {5}) == YMonomial{0, 1, 5});
}

TEST_CASE("fiber connectivity under explicit moves") {
  std::vector<YMonomial> fib = {{0, 3}, {1, 2}, {4, 4}};
  Binomial join{{0, 3}, {1, 2}};
  Partition part = fiber_components(fib, {join});
  CHECK(part.components == 2);
  CHECK(part.comp[0] == part.comp[1]);
  CHECK(part.comp[0] != part.comp[2]);
  CHECK_FALSE(fiber_connected(fib, {join}));
  Binomial bridge{{4, 4}, {1, 2}};
  CHECK(fiber_connected(fib, {join, bridge}));
  // moves act on sub-multisets: {0,0,3,3} ~ {0,1,2,3} via one application
  std::vector<YMonomial> big = {{0, 0, 3, 3}, {0, 1, 2, 3}, {1, 1, 2, 2}};
  CHECK(fiber_connected(big, {join}));
  CHECK(fiber_connected({{2, 2}}, {}));
}

TEST_CASE("white sweep on the six-element example") {
  Presentation p = build_presentation(example_six());
  WhiteReport rep = white_check(p, MoveKind::Proper, 3);
  CHECK(rep.pass);
  CHECK(rep.fiber_domain == "image-multisets");
  REQUIRE(rep.degrees.size() == 3);
  CHECK(rep.degrees[0].fibers == 6);
  CHECK(rep.degrees[0].nontrivial == 0);
  CHECK(rep.degrees[0].largest == 1);
  CHECK(rep.degrees[1].fibers == 18);
  CHECK(rep.degrees[1].nontrivial == 3);
  CHECK(rep.degrees[1].largest == 2);
  CHECK(rep.degrees[2].fibers == 40);
  CHECK(rep.degrees[2].nontrivial == 14);
  CHECK(rep.degrees[2].largest == 3);
  for (const DegreeStats& st : rep.degrees) CHECK(st.disconnected == 0);

  // with no moves at all the first nontrivial fiber falls apart
  WhiteReport none = white_check(p, MoveKind::None, 2);
  CHECK_FALSE(none.pass);
  REQUIRE(none.failure.has_value());
  CHECK(none.failure->degree == 2);
  REQUIRE(none.failure->separated.size() == 2);
  CHECK(none.failure->separated[0] == "y2*y3");
  CHECK(none.failure->separated[1] == "y1*y4");

  CHECK(white_check(p, MoveKind::Generalized, 3).pass);
  CHECK(white_check(p, MoveKind::SingleColumn, 3).fiber_domain == "label-multisets");
  CHECK(white_check(p, MoveKind::SingleColumn, 3).pass);
}

TEST_CASE("minimal generators") {
  Presentation p = build_presentation(example_six());
  std::vector<Generator> gens = minimal_generators(p, 2);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].binomial == Binomial{{0, 3}, {1, 2}});
  CHECK(gens[1].binomial == Binomial{{0, 5}, {1, 4}});
  CHECK(gens[2].binomial == Binomial{{2, 5}, {3, 4}});
  for (const Generator& g : gens) CHECK(g.degree == 2);
  // degree 3 adds nothing: the quadrics already connect every fiber
  CHECK(minimal_generators(p, 3).size() == 3);

  MonomialBasis squares(2, {m({2, 0}), m({1, 1}), m({0, 2})});
  std::vector<Generator> sq = minimal_generators(build_presentation(squares), 2);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].binomial == Binomial{{0, 2}, {1, 1}});  // y1*y3 - y2^2

  // a duplicate image shows up as a degree-1 generator
  MonomialBasis lin(2, {m({1, 0}), m({0, 1})});
  Presentation dup = build_presentation(ProductStructure::product(lin, lin));
  std::vector<Generator> dg = minimal_generators(dup, 2);
  REQUIRE(dg.size() == 2);
  CHECK(dg[0].degree == 1);
  CHECK(dg[0].binomial == Binomial{{2}, {1}});       // y21 - y12
  CHECK(dg[1].binomial == Binomial{{0, 3}, {1, 1}});  // y11*y22 - y12^2
}

TEST_CASE("generators connect every fiber they were built from") {
  Presentation p = build_presentation(segre22());
  std::vector<Generator> gens = minimal_generators(p, 3);
  std::vector<Binomial> moves;
  for (const Generator& g : gens) moves.push_back(g.binomial);
  std::vector<std::vector<Monomial>> ladder = target_ladder(p, 3);
  for (int e = 1; e <= 3; ++e)
    for (const Monomial& t : ladder[e - 1])
      CHECK(fiber_connected(fiber(p, t, e), moves));
}
