#include "doctest.h"

#include <algorithm>
#include <vector>

#include "polytoric/basis.hpp"
#include "polytoric/errors.hpp"
#include "polytoric/rng.hpp"

using namespace polytoric;

namespace {

Monomial m(std::vector<std::uint64_t> e) { return Monomial(std::move(e)); }

// The running six-element example: cubics in four variables.
MonomialBasis example_six() {
  return MonomialBasis(4, {m({1, 1, 1, 0}), m({1, 0, 2, 0}), m({0, 2, 1, 0}),
                           m({0, 1, 2, 0}), m({0, 1, 1, 1}), m({0, 0, 2, 1})});
}

MonomialBasis pentagon() {
  return MonomialBasis(4, {m({1, 1, 0, 0}), m({1, 0, 1, 0}), m({0, 1, 1, 0}),
                           m({0, 1, 0, 1}), m({0, 0, 1, 1})});
}

// Independent exchange-axiom oracle, written as a plain double loop so
// the library implementation has something to disagree with.
bool brute_polymatroidal(const MonomialBasis& b) {
  for (const Monomial& f : b.elements()) {
    for (const Monomial& g : b.elements()) {
      for (int i = 0; i < b.vars(); ++i) {
        if (f.deg(i) <= g.deg(i)) continue;
        bool found = false;
        for (int j = 0; j < b.vars() && !found; ++j) {
          if (f.deg(j) >= g.deg(j)) continue;
          found = b.contains(f.exchange(i, j));
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool brute_sep(const MonomialBasis& b) {
  for (const Monomial& f : b.elements()) {
    for (const Monomial& g : b.elements()) {
      for (int i = 0; i < b.vars(); ++i) {
        if (f.deg(i) <= g.deg(i)) continue;
        for (int j = 0; j < b.vars(); ++j) {
          if (f.deg(j) >= g.deg(j)) continue;
          if (!b.contains(f.exchange(i, j))) return false;
        }
      }
    }
  }
  return true;
}

// All degree-d monomials in n variables, for drawing random subsets.
std::vector<Monomial> simplex(int n, std::uint64_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint64_t> acc(n, 0);
  auto rec = [&](auto&& self, int i, std::uint64_t left) -> void {
    if (i == n - 1) {
      acc[i] = left;
      out.emplace_back(acc);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      acc[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace

TEST_CASE("basis construction validates and canonicalizes") {
  MonomialBasis b = example_six();
  CHECK(b.vars() == 4);
  CHECK(b.degree() == 3);
  CHECK(b.size() == 6);
  // descending listing fixes the variable numbering downstream
  CHECK(b.element(0) == m({1, 1, 1, 0}));
  CHECK(b.element(1) == m({1, 0, 2, 0}));
  CHECK(b.element(2) == m({0, 2, 1, 0}));
  CHECK(b.element(3) == m({0, 1, 2, 0}));
  CHECK(b.element(4) == m({0, 1, 1, 1}));
  CHECK(b.element(5) == m({0, 0, 2, 1}));

  // duplicates collapse
  CHECK(MonomialBasis(2, {m({1, 1}), m({1, 1})}).size() == 1);

  CHECK_THROWS_AS(MonomialBasis(2, {}), EmptyBasis);
  CHECK_THROWS_AS(MonomialBasis(2, {m({1, 0, 0})}), LengthMismatch);
  CHECK_THROWS_AS(MonomialBasis(2, {m({1, 0}), m({1, 1})}), PreconditionViolation);
}

TEST_CASE("six-element example: exchange yes, strong exchange no") {
  MonomialBasis b = example_six();
  CHECK(is_polymatroidal(b).ok);
  CHECK(verify_symmetric_exchange(b).ok);

  CheckResult sep = has_sep(b);
  REQUIRE_FALSE(sep.ok);
  REQUIRE(sep.witness.has_value());
  CHECK(sep.witness->f == m({1, 1, 1, 0}));
  CHECK(sep.witness->g == m({0, 0, 2, 1}));
  CHECK(sep.witness->i == 1);  // x2
  CHECK(sep.witness->j == 3);  // x4

  Profile pr = profile(b);
  CHECK(pr.lower == std::vector<std::uint64_t>{0, 0, 1, 0});
  CHECK(pr.upper == std::vector<std::uint64_t>{1, 2, 2, 1});
}

TEST_CASE("pentagon: exchange yes, strong exchange no") {
  MonomialBasis b = pentagon();
  CHECK(is_polymatroidal(b).ok);
  CHECK(verify_symmetric_exchange(b).ok);
  CHECK_FALSE(has_sep(b).ok);
}

TEST_CASE("non-exchange sets are rejected with a witness") {
  MonomialBasis b(2, {m({2, 0}), m({0, 2})});
  CheckResult r = is_polymatroidal(b);
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  // x1^2 loses a unit of x1 but x1*x2 is missing
  CHECK(r.witness->f == m({2, 0}));
  CHECK(r.witness->g == m({0, 2}));
  CHECK(r.witness->i == 0);
  CHECK_FALSE(verify_symmetric_exchange(b).ok);
}

TEST_CASE("box bases enumerate exactly the profile box") {
  MonomialBasis full = veronese_type(2, 2, {0, 0}, {2, 2});
  CHECK(full.size() == 3);
  CHECK(full.contains(m({2, 0})));
  CHECK(full.contains(m({1, 1})));
  CHECK(full.contains(m({0, 2})));
  CHECK(has_sep(full).ok);

  MonomialBasis clipped = veronese_type(3, 3, {0, 0, 1}, {1, 2, 2});
  for (const Monomial& f : clipped.elements()) {
    CHECK(f.deg(0) <= 1);
    CHECK(f.deg(2) >= 1);
  }
  CHECK(clipped.size() ==
        static_cast<int>(veronese_count(3, 3, {0, 0, 1}, {1, 2, 2})));
  CHECK(has_sep(clipped).ok);

  CHECK_THROWS_AS(veronese_type(2, 5, {0, 0}, {1, 1}), EmptyBasis);
  CHECK(veronese_count(2, 5, {0, 0}, {1, 1}) == 0);
}

TEST_CASE("library verdicts agree with brute-force oracles on random subsets") {
  std::vector<Monomial> pool = simplex(3, 3);
  SplitMix64 rng(99);
  int poly_seen = 0, sep_seen = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<Monomial> pick;
    for (const Monomial& f : pool)
      if (rng.below(3) == 0) pick.push_back(f);
    if (pick.empty()) continue;
    MonomialBasis b(3, pick);
    bool want_poly = brute_polymatroidal(b);
    bool want_sep = brute_sep(b);
    CHECK(is_polymatroidal(b).ok == want_poly);
    CHECK(has_sep(b).ok == want_sep);
    // strong exchange is the stronger property
    if (want_sep) CHECK(want_poly);
    poly_seen += want_poly ? 1 : 0;
    sep_seen += want_sep ? 1 : 0;
  }
  // the draw must exercise both verdicts
  CHECK(poly_seen > 0);
  CHECK(sep_seen > 0);
  CHECK(poly_seen < 200);
}

TEST_CASE("symmetric exchange matches the axiom on exchange-closed sets") {
  // exhaustive checker agrees with the one-sided axiom where it applies
  CHECK(verify_symmetric_exchange(veronese_type(3, 2, {0, 0, 0}, {2, 2, 2})).ok);
  CHECK(verify_symmetric_exchange(pentagon()).ok);
}

TEST_CASE("two-step shortcut on box bases") {
  CHECK(shortcut_property(veronese_type(2, 3, {0, 0}, {3, 3})).ok);
  CHECK(shortcut_property(veronese_type(3, 2, {0, 0, 0}, {1, 2, 2})).ok);
  // only defined for strong-exchange bases
  CHECK_THROWS_AS(shortcut_property(example_six()), PreconditionViolation);
}

TEST_CASE("products and powers") {
  MonomialBasis sq = veronese_type(2, 2, {0, 0}, {2, 2});
  ProductStructure pp = ProductStructure::product(sq, sq);
  CHECK(pp.factor_count() == 2);
  CHECK(pp.label_count() == 9);
  CHECK(pp.flattened().degree() == 4);
  // product of a box with itself is the degree-4 box
  CHECK(pp.flattened() == veronese_type(2, 4, {0, 0}, {4, 4}));
  CHECK(has_sep(pp.flattened()).ok);

  ProductStructure pw = ProductStructure::power(sq, 3);
  CHECK(pw.factor_count() == 3);
  CHECK(pw.flattened() == veronese_type(2, 6, {0, 0}, {6, 6}));

  ProductStructure single = ProductStructure::single(sq);
  CHECK(single.factor_count() == 1);
  CHECK(single.flattened() == sq);

  CHECK_THROWS_AS(ProductStructure::product(sq, MonomialBasis(3, {m({1, 1, 0})})),
                  LengthMismatch);
}

TEST_CASE("product_set multiplies pairwise and deduplicates") {
  std::vector<Monomial> a = {m({1, 0}), m({0, 1})};
  std::vector<Monomial> prods = product_set(a, a);
  REQUIRE(prods.size() == 3);
  CHECK(prods[0] == m({2, 0}));
  CHECK(prods[1] == m({1, 1}));
  CHECK(prods[2] == m({0, 2}));
}
