#include "polytoric/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

#include "polytoric/errors.hpp"

namespace polytoric {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;  // empty for a blank separator line
};

// Reads everything, strips comments, splits into tokens.  Lines that
// held only a comment vanish entirely; lines that were blank to begin
// with stay as separators.
std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    number += 1;
    bool had_comment = false;
    auto hash = raw.find('#');
    if (hash != std::string::npos) {
      had_comment = true;
      raw.erase(hash);
    }
    Line line;
    line.number = number;
    std::istringstream split(raw);
    std::string tok;
    while (split >> tok) line.tokens.push_back(std::move(tok));
    if (line.tokens.empty() && had_comment) continue;
    out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t parse_u64(const std::string& tok, int line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("expected a nonnegative integer, got '" + tok + "'", line);
  return value;
}

// Cursor over the token lines, skipping blanks unless asked not to.
struct Cursor {
  const std::vector<Line>& lines;
  std::size_t at = 0;

  const Line* next(bool skip_blank = true) {
    while (at < lines.size()) {
      const Line& line = lines[at];
      at += 1;
      if (line.tokens.empty() && skip_blank) continue;
      return &line;
    }
    return nullptr;
  }

  int last_line() const { return lines.empty() ? 0 : lines.back().number; }
};

MonomialBasis parse_basis_block(Cursor& cur, bool stop_at_blank) {
  const Line* header = cur.next();
  if (!header) throw ParseError("missing basis header 'n d'", cur.last_line());
  if (header->tokens.size() != 2)
    throw ParseError("basis header must be 'n d'", header->number);
  std::uint64_t n64 = parse_u64(header->tokens[0], header->number);
  std::uint64_t d = parse_u64(header->tokens[1], header->number);
  if (n64 == 0 || n64 > 4096)
    throw ParseError("variable count must be between 1 and 4096", header->number);
  const int n = static_cast<int>(n64);
  std::vector<Monomial> elems;
  int last = header->number;
  while (true) {
    const Line* line = cur.next(!stop_at_blank);
    if (!line) break;
    if (line->tokens.empty()) break;  // blank separator inside a product
    if (line->tokens.size() != static_cast<std::size_t>(n))
      throw ParseError("expected " + std::to_string(n) + " exponents, got " +
                           std::to_string(line->tokens.size()),
                       line->number);
    std::vector<std::uint64_t> e(n);
    std::uint64_t sum = 0;
    for (int i = 0; i < n; ++i) {
      e[i] = parse_u64(line->tokens[i], line->number);
      sum += e[i];
    }
    if (sum != d)
      throw ParseError("exponents sum to " + std::to_string(sum) + ", header says " +
                           std::to_string(d),
                       line->number);
    elems.emplace_back(std::move(e));
    last = line->number;
  }
  if (elems.empty()) throw ParseError("basis has no elements", last);
  return MonomialBasis(n, std::move(elems));
}

}  // namespace

ProductStructure ParsedInput::to_structure() const {
  switch (kind) {
    case InputKind::Basis:
      return ProductStructure::single(*basis);
    case InputKind::Product:
      return *product;
    case InputKind::Transversal:
      return transversal->to_product();
  }
  throw InternalInconsistency("unhandled input kind");
}

MonomialBasis parse_basis(std::istream& in) {
  auto lines = read_lines(in);
  Cursor cur{lines};
  return parse_basis_block(cur, false);
}

ProductStructure parse_product(std::istream& in) {
  auto lines = read_lines(in);
  Cursor cur{lines};
  const Line* header = cur.next();
  if (!header || header->tokens.empty() || header->tokens[0] != "PRODUCT")
    throw ParseError("expected 'PRODUCT s' header", header ? header->number : 0);
  if (header->tokens.size() != 2)
    throw ParseError("expected 'PRODUCT s' header", header->number);
  std::uint64_t s = parse_u64(header->tokens[1], header->number);
  if (s == 0 || s > 64) throw ParseError("factor count must be between 1 and 64", header->number);
  std::vector<std::vector<Monomial>> factors;
  int n = -1;
  for (std::uint64_t j = 0; j < s; ++j) {
    MonomialBasis b = parse_basis_block(cur, true);
    if (n < 0) n = b.vars();
    if (b.vars() != n)
      throw ParseError("factor " + std::to_string(j + 1) + " uses " +
                           std::to_string(b.vars()) + " variables, earlier factors " +
                           std::to_string(n),
                       cur.last_line());
    factors.push_back(b.elements());
  }
  if (const Line* extra = cur.next())
    throw ParseError("unexpected content after the last factor", extra->number);
  return ProductStructure::from_ordered_factors(n, std::move(factors));
}

TransversalStructure parse_transversal(std::istream& in) {
  auto lines = read_lines(in);
  Cursor cur{lines};
  const Line* header = cur.next();
  if (!header || header->tokens.empty() || header->tokens[0] != "TRANSVERSAL")
    throw ParseError("expected 'TRANSVERSAL s n' header", header ? header->number : 0);
  if (header->tokens.size() != 3)
    throw ParseError("expected 'TRANSVERSAL s n' header", header->number);
  std::uint64_t s = parse_u64(header->tokens[1], header->number);
  std::uint64_t n = parse_u64(header->tokens[2], header->number);
  if (s == 0 || s > 4096) throw ParseError("subset count must be between 1 and 4096", header->number);
  if (n == 0 || n > 4096)
    throw ParseError("variable count must be between 1 and 4096", header->number);
  std::vector<std::vector<int>> subsets;
  for (std::uint64_t j = 0; j < s; ++j) {
    const Line* line = cur.next();
    if (!line)
      throw ParseError("expected " + std::to_string(s) + " subset lines, got " +
                           std::to_string(j),
                       cur.last_line());
    std::vector<int> sub;
    for (const auto& tok : line->tokens) {
      std::uint64_t idx = parse_u64(tok, line->number);
      if (idx == 0 || idx > n)
        throw ParseError("variable index " + tok + " outside 1.." + std::to_string(n),
                         line->number);
      sub.push_back(static_cast<int>(idx - 1));
    }
    if (sub.empty()) throw ParseError("subset line is empty", line->number);
    subsets.push_back(std::move(sub));
  }
  if (const Line* extra = cur.next())
    throw ParseError("unexpected content after the last subset", extra->number);
  return make_transversal(static_cast<int>(n), std::move(subsets));
}

ParsedInput parse_input(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::string head;
  {
    std::istringstream probe(text);
    auto lines = read_lines(probe);
    Cursor cur{lines};
    if (const Line* first = cur.next()) head = first->tokens[0];
  }
  ParsedInput out;
  std::istringstream body(text);
  if (head == "PRODUCT") {
    out.kind = InputKind::Product;
    out.product = parse_product(body);
  } else if (head == "TRANSVERSAL") {
    out.kind = InputKind::Transversal;
    out.transversal = parse_transversal(body);
  } else {
    out.kind = InputKind::Basis;
    out.basis = parse_basis(body);
  }
  return out;
}

ParsedInput parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_input(in);
}

std::string serialize(const MonomialBasis& b) {
  std::ostringstream out;
  out << b.vars() << ' ' << b.degree() << '\n';
  for (const auto& m : b.elements()) out << m.str() << '\n';
  return out.str();
}

std::string serialize(const ProductStructure& ps) {
  std::ostringstream out;
  out << "PRODUCT " << ps.factor_count() << '\n';
  for (int j = 0; j < ps.factor_count(); ++j) {
    out << '\n';
    const auto& f = ps.factors()[j];
    out << ps.vars() << ' ' << f[0].degree() << '\n';
    for (const auto& m : f) out << m.str() << '\n';
  }
  return out.str();
}

std::string serialize(const TransversalStructure& t) {
  std::ostringstream out;
  out << "TRANSVERSAL " << t.subsets.size() << ' ' << t.n << '\n';
  for (const auto& sub : t.subsets) {
    for (std::size_t k = 0; k < sub.size(); ++k) {
      if (k) out << ' ';
      out << sub[k] + 1;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace polytoric
