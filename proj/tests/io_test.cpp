#include "doctest.h"

#include <sstream>
#include <vector>

#include "polytoric/errors.hpp"
#include "polytoric/io.hpp"

using namespace polytoric;

namespace {

MonomialBasis parse_basis_str(const std::string& s) {
  std::istringstream in(s);
  return parse_basis(in);
}

ProductStructure parse_product_str(const std::string& s) {
  std::istringstream in(s);
  return parse_product(in);
}

TransversalStructure parse_transversal_str(const std::string& s) {
  std::istringstream in(s);
  return parse_transversal(in);
}

int parse_error_line(const std::string& s) {
  std::istringstream in(s);
  try {
    parse_input(in);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("basis round trip") {
  MonomialBasis b(4, {Monomial({1, 1, 1, 0}), Monomial({0, 0, 2, 1})});
  MonomialBasis back = parse_basis_str(serialize(b));
  CHECK(back == b);
}

TEST_CASE("product round trip") {
  MonomialBasis sq(2, {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})});
  MonomialBasis lin(2, {Monomial({1, 0}), Monomial({0, 1})});
  ProductStructure ps = ProductStructure::product(sq, lin);
  ProductStructure back = parse_product_str(serialize(ps));
  CHECK(back.vars() == ps.vars());
  CHECK(back.factors() == ps.factors());
  CHECK(back.flattened() == ps.flattened());
}

TEST_CASE("transversal round trip") {
  TransversalStructure t = make_transversal(4, {{0, 1}, {1, 2, 3}});
  TransversalStructure back = parse_transversal_str(serialize(t));
  CHECK(back.n == t.n);
  CHECK(back.subsets == t.subsets);
}

TEST_CASE("comments and blank lines") {
  MonomialBasis b = parse_basis_str(
      "# heading\n"
      "\n"
      "2 2   # header n d\n"
      "2 0\n"
      "# a comment between elements\n"
      "\n"
      "0 2\n");
  CHECK(b.size() == 2);

  // inside a product, only fully blank lines separate factors; a
  // comment-only line must not end a block
  ProductStructure ps = parse_product_str(
      "PRODUCT 2\n"
      "2 1\n"
      "1 0\n"
      "# still factor one\n"
      "0 1\n"
      "\n"
      "2 1\n"
      "1 0\n");
  CHECK(ps.factor_count() == 2);
  CHECK(ps.factors()[0].size() == 2);
  CHECK(ps.factors()[1].size() == 1);
}

TEST_CASE("parse errors carry the offending line") {
  CHECK(parse_error_line("4 3\n1 1 1 0\n1 x 0 1\n") == 3);      // non-integer
  CHECK(parse_error_line("4 3\n1 1 1 0\n1 1 1\n") == 3);        // wrong count
  CHECK(parse_error_line("4 3\n1 1 1 0\n2 2 0 0\n") == 3);      // wrong sum
  CHECK(parse_error_line("4 3\n") == 1);                        // no elements
  CHECK(parse_error_line("4\n1 1 1 0\n") == 1);                 // bad header
  CHECK(parse_error_line("PRODUCT nope\n") == 1);
  CHECK(parse_error_line("TRANSVERSAL 2 3\n1 2\n1 9\n") == 3);  // index range
  CHECK(parse_error_line("TRANSVERSAL 2 3\n1 2\n") == 2);       // missing line
}

TEST_CASE("parse_input dispatches on the first token") {
  {
    std::istringstream in("2 2\n2 0\n0 2\n");
    ParsedInput pi = parse_input(in);
    CHECK(pi.kind == InputKind::Basis);
    REQUIRE(pi.basis.has_value());
    ProductStructure st = pi.to_structure();
    CHECK(st.factor_count() == 1);
    CHECK(st.flattened() == *pi.basis);
  }
  {
    std::istringstream in("PRODUCT 1\n2 1\n1 0\n0 1\n");
    ParsedInput pi = parse_input(in);
    CHECK(pi.kind == InputKind::Product);
    REQUIRE(pi.product.has_value());
    CHECK(pi.to_structure().factor_count() == 1);
  }
  {
    std::istringstream in("TRANSVERSAL 2 3\n1 2\n2 3\n");
    ParsedInput pi = parse_input(in);
    CHECK(pi.kind == InputKind::Transversal);
    REQUIRE(pi.transversal.has_value());
    // factor j holds the variables of subset j, in subset order
    ProductStructure st = pi.to_structure();
    CHECK(st.factor_count() == 2);
    CHECK(st.factors()[0][0] == Monomial({1, 0, 0}));
    CHECK(st.factors()[0][1] == Monomial({0, 1, 0}));
  }
}

TEST_CASE("parse_file reports missing files") {
  CHECK_THROWS_AS(parse_file("no/such/file.basis"), Error);
  ParsedInput pi = parse_file("data/example1.basis");
  REQUIRE(pi.basis.has_value());
  CHECK(pi.basis->size() == 6);
  CHECK(pi.basis->vars() == 4);
}
