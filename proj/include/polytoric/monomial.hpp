#ifndef POLYTORIC_MONOMIAL_HPP
#define POLYTORIC_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polytoric/errors.hpp"

namespace polytoric {

// A monomial in x_1..x_n, stored as its exponent vector.  Exponents are
// 64-bit unsigned; any arithmetic that would wrap throws Overflow.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint64_t> exps) : e_(std::move(exps)) {}
  static Monomial one(int n) { return Monomial(std::vector<std::uint64_t>(n, 0)); }

  int vars() const { return static_cast<int>(e_.size()); }
  std::uint64_t deg(int i) const { return e_[i]; }
  const std::vector<std::uint64_t>& exponents() const { return e_; }

  std::uint64_t degree() const;

  Monomial multiply(const Monomial& other) const;

  // Divide this by x_i and multiply by x_j; degree is preserved.
  // Throws ZeroExponent when deg(i) == 0.  exchange(i, i) is the identity
  // (still requires deg(i) >= 1).
  Monomial exchange(int i, int j) const;

  // Entrywise divisibility test: other | this.
  bool divisible_by(const Monomial& other) const;

  // this / other; precondition divisible_by(other).
  Monomial divide(const Monomial& other) const;

  // Exponents compare lexicographically; with the usual x_1 > x_2 > ...
  // convention a larger vector means an earlier (larger) monomial, so
  // canonical listings sort descending.
  auto operator<=>(const Monomial& other) const = default;

  std::string str() const;  // "1 1 1 0"

 private:
  void check_len(const Monomial& other, const char* op) const;
  std::vector<std::uint64_t> e_;
};

// (x_to / x_from) * m when that is a monomial.  from == to returns m
// unchanged regardless of exponents; otherwise requires deg(from) >= 1.
std::optional<Monomial> try_exchange(const Monomial& m, int from, int to);

std::string pretty(const Monomial& m);  // "x1*x3^2", "1"

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace polytoric

#endif
