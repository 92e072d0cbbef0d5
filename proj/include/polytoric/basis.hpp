#ifndef POLYTORIC_BASIS_HPP
#define POLYTORIC_BASIS_HPP

#include <optional>
#include <unordered_set>
#include <vector>

#include "polytoric/monomial.hpp"

namespace polytoric {

struct Profile {
  std::vector<std::uint64_t> lower;  // entrywise min over the basis
  std::vector<std::uint64_t> upper;  // entrywise max
};

// A nonempty set of monomials of one common degree d in x_1..x_n, kept
// sorted descending (x_1 > x_2 > ... listing order) without duplicates.
class MonomialBasis {
 public:
  // Validates: nonempty, uniform variable count, uniform degree.
  // Deduplicates and sorts.
  MonomialBasis(int n, std::vector<Monomial> elements);

  int vars() const { return n_; }
  std::uint64_t degree() const { return d_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<Monomial>& elements() const { return elems_; }
  const Monomial& element(int k) const { return elems_[k]; }
  bool contains(const Monomial& m) const { return set_.count(m) > 0; }

  bool operator==(const MonomialBasis& other) const {
    return n_ == other.n_ && elems_ == other.elems_;
  }

 private:
  int n_ = 0;
  std::uint64_t d_ = 0;
  std::vector<Monomial> elems_;
  std::unordered_set<Monomial, MonomialHash> set_;
};

// Witness for a failed exchange-type check: the pair (f, g) and the
// index i (and for SEP the index j) where no valid exchange exists.
struct ExchangeWitness {
  Monomial f, g;
  int i = -1;
  int j = -1;  // -1 when the check quantifies j existentially
};

struct CheckResult {
  bool ok = true;
  std::optional<ExchangeWitness> witness;
};

// Exchange axiom: for all f, g in B and every i with deg_i f > deg_i g
// there is a j with deg_j f < deg_j g and (x_j/x_i) f in B.
CheckResult is_polymatroidal(const MonomialBasis& b);

// Symmetric exchange: additionally (x_i/x_j) g in B for the same j.
// Guaranteed on polymatroidal bases; the checker is exhaustive anyway.
CheckResult verify_symmetric_exchange(const MonomialBasis& b);

Profile profile(const MonomialBasis& b);

// All monomials of degree d with lower <= exponents <= upper.  Throws
// EmptyBasis when the box contains no degree-d point.
MonomialBasis veronese_type(int n, std::uint64_t d,
                            const std::vector<std::uint64_t>& lower,
                            const std::vector<std::uint64_t>& upper);

// Number of elements veronese_type would produce, without materializing.
std::uint64_t veronese_count(int n, std::uint64_t d,
                             const std::vector<std::uint64_t>& lower,
                             const std::vector<std::uint64_t>& upper);

// Strong exchange: for all f, g and all i, j with deg_i f > deg_i g and
// deg_j f < deg_j g, (x_j/x_i) f is in B.  Computed directly and by
// comparing B against veronese_type of its profile; the two verdicts
// must agree (InternalInconsistency otherwise).
CheckResult has_sep(const MonomialBasis& b);

// For SEP bases: whenever f, g, (x_i/x_j) f and (x_k/x_l) g all lie in B
// (proper moves, i != j, k != l), some index m has (x_i/x_m) f,
// (x_l/x_m) f and (x_m/x_l) g all in B.  Precondition: has_sep(b).
struct ShortcutResult {
  bool ok = true;
  std::optional<Monomial> f, g;
  int i = -1, l = -1;  // quantifiers the failing instance came from
};
ShortcutResult shortcut_property(const MonomialBasis& b);

// A formal product B_1 ... B_s over a shared variable set, remembering
// the factors (each an ordered element list; the order fixes how product
// variables are labeled) together with the flattened set of products.
class ProductStructure {
 public:
  static ProductStructure from_ordered_factors(
      int n, std::vector<std::vector<Monomial>> factors);
  static ProductStructure single(const MonomialBasis& b);
  static ProductStructure product(const MonomialBasis& a, const MonomialBasis& b);
  static ProductStructure product(const std::vector<MonomialBasis>& factors);
  static ProductStructure power(const MonomialBasis& b, int k);

  int vars() const { return n_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  const std::vector<std::vector<Monomial>>& factors() const { return factors_; }
  const MonomialBasis& flattened() const { return flattened_; }
  MonomialBasis factor_basis(int j) const;
  // Product of the factor element counts (number of product variables).
  std::uint64_t label_count() const;

 private:
  ProductStructure(int n, std::vector<std::vector<Monomial>> factors,
                   MonomialBasis flattened);
  int n_;
  std::vector<std::vector<Monomial>> factors_;
  MonomialBasis flattened_;
};

// Distinct pairwise products of two monomial sets (the degree adds).
std::vector<Monomial> product_set(const std::vector<Monomial>& a,
                                  const std::vector<Monomial>& b);

}  // namespace polytoric

#endif
