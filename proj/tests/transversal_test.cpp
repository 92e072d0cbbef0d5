#include "doctest.h"

#include <algorithm>
#include <vector>

#include "polytoric/errors.hpp"
#include "polytoric/groebner.hpp"
#include "polytoric/presentation.hpp"
#include "polytoric/transversal.hpp"

using namespace polytoric;

namespace {

TransversalStructure five_cycle() {
  return make_transversal(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// true when one label dominates the other entrywise
bool comparable(const std::vector<int>& a, const std::vector<int>& b) {
  bool le = true, ge = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    le = le && a[k] <= b[k];
    ge = ge && a[k] >= b[k];
  }
  return le || ge;
}

// orient a relation list under ord and sort, for set comparison
std::vector<GBinomial> oriented(const std::vector<Binomial>& rels,
                                const MonomialOrder& ord, int nvars) {
  std::vector<GBinomial> out;
  for (const Binomial& r : rels) {
    Dense l = to_dense(r.lhs, nvars), t = to_dense(r.rhs, nvars);
    if (order_compare(l, t, ord) < 0) std::swap(l, t);
    out.push_back({std::move(l), std::move(t)});
  }
  std::sort(out.begin(), out.end(), [](const GBinomial& a, const GBinomial& b) {
    return a.lead != b.lead ? a.lead < b.lead : a.tail < b.tail;
  });
  return out;
}

std::vector<GBinomial> sorted_basis(std::vector<GBinomial> basis) {
  std::sort(basis.begin(), basis.end(), [](const GBinomial& a, const GBinomial& b) {
    return a.lead != b.lead ? a.lead < b.lead : a.tail < b.tail;
  });
  return basis;
}

}  // namespace

TEST_CASE("make_transversal validates") {
  CHECK_THROWS_AS(make_transversal(3, {}), PreconditionViolation);
  CHECK_THROWS_AS(make_transversal(3, {{0, 3}}), PreconditionViolation);
  CHECK_THROWS_AS(make_transversal(3, {{-1}}), PreconditionViolation);
  CHECK_THROWS_AS(make_transversal(3, {{0, 0}}), PreconditionViolation);
  CHECK_THROWS_AS(make_transversal(3, {{}}), PreconditionViolation);
  CHECK_THROWS_AS(make_transversal(0, {{0}}), PreconditionViolation);
}

TEST_CASE("five-cycle expands to a five-factor product") {
  TransversalStructure t = five_cycle();
  ProductStructure ps = t.to_product();
  CHECK(ps.factor_count() == 5);
  CHECK(ps.label_count() == 32);
  // the two orientations of the cycle give the one duplicate image
  CHECK(ps.flattened().size() == 31);
  CHECK(ps.flattened().degree() == 5);
}

TEST_CASE("lattice relations of the five-cycle") {
  Presentation p = build_presentation(five_cycle().to_product());
  CHECK(p.var_count() == 32);
  std::vector<Binomial> rels = hibi_relations(p);
  // one relation per incomparable label pair: 496 pairs, 211 comparable
  CHECK(rels.size() == 285);

  for (const Binomial& r : rels) {
    CHECK(ym_image(p, r.lhs) == ym_image(p, r.rhs));
    REQUIRE(r.lhs.size() == 2);
    REQUIRE(r.rhs.size() == 2);
  }

  // the worked pair: labels 00011 and 01110 meet in 01111 and 00010
  int a = p.id_of_label({0, 0, 0, 1, 1});
  int b = p.id_of_label({0, 1, 1, 1, 0});
  int top = p.id_of_label({0, 1, 1, 1, 1});
  int bot = p.id_of_label({0, 0, 0, 1, 0});
  YMonomial ab = {std::min(a, b), std::max(a, b)};
  YMonomial tb = {std::min(top, bot), std::max(top, bot)};
  bool found = false;
  for (const Binomial& r : rels) {
    if (r.lhs == ab) {
      found = true;
      CHECK(r.rhs == tb);
    } else if (r.rhs == ab) {
      found = true;
      CHECK(r.lhs == tb);
    }
  }
  CHECK(found);
}

TEST_CASE("incomparable side leads under the lattice order") {
  Presentation p = build_presentation(five_cycle().to_product());
  std::vector<Binomial> rels = hibi_relations(p);
  MonomialOrder ord = hibi_order(p.var_count());
  for (const Binomial& r : rels) {
    const auto& la = p.var(r.lhs[0]).label;
    const auto& lb = p.var(r.lhs[1]).label;
    bool lhs_incomparable = !comparable(la, lb);
    Dense dl = to_dense(r.lhs, p.var_count());
    Dense dr = to_dense(r.rhs, p.var_count());
    int cmp = order_compare(dl, dr, ord);
    CHECK(cmp != 0);
    CHECK((cmp > 0) == lhs_incomparable);
  }
}

TEST_CASE("lattice relations are a quadratic basis already") {
  Presentation p = build_presentation(five_cycle().to_product());
  std::vector<Binomial> rels = hibi_relations(p);
  MonomialOrder ord = hibi_order(p.var_count());
  BuchbergerResult gb = buchberger(rels, ord, p.var_count());
  CHECK(gb.completed);
  CHECK(is_quadratic(gb));
  // every S-pair reduces to zero: nothing added, nothing dropped
  CHECK(sorted_basis(gb.basis) == oriented(rels, ord, p.var_count()));
}

TEST_CASE("substituting away the duplicate variable") {
  TransversalStructure t = five_cycle();
  SubstituteResult sub = substitute_linear(t);
  Presentation p = build_presentation(sub.structure.to_product());

  CHECK(sub.linear.lhs == YMonomial{31});
  CHECK(sub.linear.rhs == YMonomial{0});
  CHECK(binomial_str(p, sub.linear) == "y22222 - y11111");
  CHECK(sub.relations.size() == 285);
  for (const Binomial& r : sub.relations) {
    CHECK(ym_image(p, r.lhs) == ym_image(p, r.rhs));
    for (int v : r.lhs) CHECK(v != 31);
    for (int v : r.rhs) CHECK(v != 31);
  }

  MonomialOrder ord = hibi_order(p.var_count());
  BuchbergerResult gb = buchberger(sub.relations, ord, p.var_count());
  CHECK(gb.completed);
  CHECK(is_quadratic(gb));
  CHECK(sorted_basis(gb.basis) == oriented(sub.relations, ord, p.var_count()));

  // together with the linear form, the relations generate in low degree
  std::vector<Binomial> gens = sub.relations;
  gens.push_back(sub.linear);
  CertifyResult cert = certify_generation(p, gens, ord, 2);
  CHECK(cert.completed);
  CHECK(cert.ok);
}

TEST_CASE("substitution finds the relabeling for shuffled listings") {
  // rotating the subsets keeps the duplicate at the corner labels
  TransversalStructure rot =
      make_transversal(5, {{1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 1}});
  CHECK(substitute_linear(rot).relations.size() == 285);

  // flipping one subset moves the duplicate pair off the corners; the
  // per-factor search must undo the flip
  TransversalStructure flip =
      make_transversal(5, {{1, 0}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  SubstituteResult sub = substitute_linear(flip);
  CHECK(sub.linear.lhs == YMonomial{31});
  CHECK(sub.linear.rhs == YMonomial{0});
  CHECK(sub.relations.size() == 285);
  Presentation p = build_presentation(sub.structure.to_product());
  for (const Binomial& r : sub.relations)
    CHECK(ym_image(p, r.lhs) == ym_image(p, r.rhs));
}

TEST_CASE("substitution demands exactly one duplicate") {
  // a path: all products distinct
  TransversalStructure path = make_transversal(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(substitute_linear(path), PreconditionViolation);
  // two equal factors twice over: more than one duplicate
  TransversalStructure many = make_transversal(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK_THROWS_AS(substitute_linear(many), PreconditionViolation);
}

TEST_CASE("numerator evidence") {
  GorensteinEvidence five = gorenstein_evidence(five_cycle(), 12);
  CHECK(five.dim == 5);
  CHECK(five.h == std::vector<long long>{1, 26, 66, 26, 1});
  CHECK(five.palindromic);

  GorensteinEvidence small =
      gorenstein_evidence(make_transversal(3, {{0, 1}, {0, 1, 2}}), 10);
  CHECK(small.dim == 3);
  CHECK(small.h == std::vector<long long>{1, 2});
  CHECK_FALSE(small.palindromic);
}
