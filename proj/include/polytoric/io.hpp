#ifndef POLYTORIC_IO_HPP
#define POLYTORIC_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "polytoric/basis.hpp"
#include "polytoric/transversal.hpp"

namespace polytoric {

// Text formats, one token-separated record per line, '#' starting a
// comment anywhere on a line:
//   basis        "n d" header, then one n-entry exponent line per
//                element of common degree d
//   product      "PRODUCT s", then s basis blocks separated by blank
//                lines (comment-only lines never separate)
//   transversal  "TRANSVERSAL s n", then s lines of 1-based variable
//                indices
// parse_input dispatches on the first token.

enum class InputKind { Basis, Product, Transversal };

struct ParsedInput {
  InputKind kind = InputKind::Basis;
  std::optional<MonomialBasis> basis;
  std::optional<ProductStructure> product;
  std::optional<TransversalStructure> transversal;

  // The product structure the toric machinery consumes: a plain basis
  // wraps itself as a single factor, a transversal expands.
  ProductStructure to_structure() const;
};

MonomialBasis parse_basis(std::istream& in);
ProductStructure parse_product(std::istream& in);
TransversalStructure parse_transversal(std::istream& in);
ParsedInput parse_input(std::istream& in);
ParsedInput parse_file(const std::string& path);

std::string serialize(const MonomialBasis& b);
std::string serialize(const ProductStructure& ps);
std::string serialize(const TransversalStructure& t);

}  // namespace polytoric

#endif
