#include "doctest.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "polytoric/basis.hpp"
#include "polytoric/errors.hpp"
#include "polytoric/invariants.hpp"
#include "polytoric/presentation.hpp"
#include "polytoric/transversal.hpp"

using namespace polytoric;

namespace {

Monomial m(std::vector<std::uint64_t> e) { return Monomial(std::move(e)); }

MonomialBasis squares() {
  return MonomialBasis(2, {m({2, 0}), m({1, 1}), m({0, 2})});
}

MonomialBasis example_six() {
  return MonomialBasis(4, {m({1, 1, 1, 0}), m({1, 0, 2, 0}), m({0, 2, 1, 0}),
                           m({0, 1, 2, 0}), m({0, 1, 1, 1}), m({0, 0, 2, 1})});
}

}  // namespace

TEST_CASE("hilbert function counts distinct products") {
  // all of degree 2e in two variables exist as products: HF(e) = 2e + 1
  std::vector<std::uint64_t> hf = hilbert_function(squares(), 6);
  REQUIRE(hf.size() == 7);
  for (int e = 0; e <= 6; ++e) CHECK(hf[e] == static_cast<std::uint64_t>(2 * e + 1));

  std::vector<std::uint64_t> hf6 = hilbert_function(example_six(), 4);
  CHECK(hf6 == std::vector<std::uint64_t>{1, 6, 18, 40, 75});
}

TEST_CASE("krull dimension is the exponent-matrix rank") {
  CHECK(krull_dim(squares()) == 2);
  CHECK(krull_dim(example_six()) == 4);
  CHECK(krull_dim(MonomialBasis(3, {m({1, 1, 0}), m({1, 0, 1}), m({0, 1, 1})})) == 3);
  CHECK(krull_dim(MonomialBasis(3, {m({2, 0, 0})})) == 1);
  // scaled copies of one column direction still rank 2
  CHECK(krull_dim(MonomialBasis(2, {m({4, 0}), m({0, 4})})) == 2);
}

TEST_CASE("h-vector") {
  HVector hs = h_vector(squares(), 8);
  CHECK(hs.dim == 2);
  CHECK(hs.h == std::vector<long long>{1, 1});

  HVector h6 = h_vector(example_six(), 8);
  CHECK(h6.dim == 4);
  CHECK(h6.h == std::vector<long long>{1, 2});
  CHECK_FALSE(is_palindromic(h6.h));

  // HF values must be recoverable from (h, dim): sum h_i * C(dim-1 + e-i, dim-1)
  std::vector<std::uint64_t> hf = hilbert_function(example_six(), 8);
  for (int e = 0; e <= 8; ++e) {
    long long acc = 0;
    for (std::size_t i = 0; i < h6.h.size(); ++i) {
      long long k = e - static_cast<long long>(i);
      if (k < 0) continue;
      long long binom = 1;
      for (long long t = 1; t <= h6.dim - 1; ++t) binom = binom * (k + t) / t;
      acc += h6.h[i] * binom;
    }
    CHECK(acc == static_cast<long long>(hf[e]));
  }
}

TEST_CASE("h-vector demands stabilization evidence") {
  // five factors of degree 5 images: the window at d_max 6 is too short
  TransversalStructure t =
      make_transversal(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  MonomialBasis flat = t.to_product().flattened();
  CHECK_THROWS_AS(h_vector(flat, 6), NotStabilized);
  HVector ok = h_vector(flat, 12);
  CHECK(ok.dim == 5);
  CHECK(ok.h == std::vector<long long>{1, 26, 66, 26, 1});
  CHECK(is_palindromic(ok.h));
}

TEST_CASE("palindrome predicate") {
  CHECK(is_palindromic({1}));
  CHECK(is_palindromic({1, 1}));
  CHECK(is_palindromic({1, 26, 66, 26, 1}));
  CHECK_FALSE(is_palindromic({1, 2}));
  CHECK_FALSE(is_palindromic({1, 26, 66, 27, 1}));
  CHECK(is_palindromic({}));
}

TEST_CASE("rees bidegrees of the squares basis") {
  Presentation p = build_presentation(squares());
  ReesResult r = rees_bidegrees(p);
  REQUIRE(r.gens.size() == 3);
  CHECK(r.gens[0].a == 0);
  CHECK(r.gens[0].b == 2);
  CHECK(r.gens[0].text == "y1*y3 - y2^2");
  CHECK(r.gens[1].a == 1);
  CHECK(r.gens[1].b == 1);
  CHECK(r.gens[1].text == "x1*y2 - x2*y1");
  CHECK(r.gens[2].a == 1);
  CHECK(r.gens[2].b == 1);
  CHECK(r.gens[2].text == "x1*y3 - x2*y2");
  CHECK_FALSE(r.has_linear_ydeg);

  // each generator really is a relation of the blowup algebra:
  // x-part times y-image agrees on the two sides
  for (const ReesGenerator& g : r.gens) {
    Monomial li = g.lhs_x.multiply(ym_image(p, g.lhs_y));
    Monomial ri = g.rhs_x.multiply(ym_image(p, g.rhs_y));
    CHECK(li == ri);
    CHECK(static_cast<int>(g.lhs_y.size()) == g.b);
    CHECK(static_cast<int>(g.rhs_y.size()) == g.b);
  }
}

TEST_CASE("rees bidegrees of a squarefree triangle") {
  MonomialBasis tri(3, {m({1, 1, 0}), m({1, 0, 1}), m({0, 1, 1})});
  ReesResult r = rees_bidegrees(build_presentation(tri));
  std::set<std::pair<int, int>> degs;
  for (const ReesGenerator& g : r.gens) degs.insert({g.a, g.b});
  // only linear-in-y relations appear; no pure y relation exists here
  CHECK(degs == std::set<std::pair<int, int>>{{1, 1}});
  CHECK(r.gens.size() == 2);
}

TEST_CASE("rees sweep covers the (1,1) relations completely") {
  // hand enumeration for the squares basis: x^1 y^1 monomials group by
  // image into {x1y2, x2y1} and {x1y3, x2y2} (and x1y1, x2y3 alone), so
  // exactly two (1,1) generators exist
  Presentation p = build_presentation(squares());
  ReesResult r = rees_bidegrees(p);
  int count11 = 0;
  for (const ReesGenerator& g : r.gens)
    if (g.a == 1 && g.b == 1) ++count11;
  CHECK(count11 == 2);
}

TEST_CASE("rees run with a duplicate image keeps the linear generator") {
  MonomialBasis lin(2, {m({1, 0}), m({0, 1})});
  Presentation p = build_presentation(ProductStructure::product(lin, lin));
  ReesResult r = rees_bidegrees(p);
  CHECK(r.has_linear_ydeg);
  std::vector<std::string> texts;
  for (const ReesGenerator& g : r.gens) texts.push_back(g.text);
  CHECK(texts == std::vector<std::string>{"y21 - y12", "y11*y22 - y12^2",
                                          "x1*y12 - x2*y11", "x1*y22 - x2*y12"});
}
