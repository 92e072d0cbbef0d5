#ifndef POLYTORIC_PRESENTATION_HPP
#define POLYTORIC_PRESENTATION_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "polytoric/basis.hpp"

namespace polytoric {

// One generator variable y of the toric presentation.  The label picks
// one element per factor (0-based positions); for a plain basis it has
// length one.  The image is the product of the chosen elements.
struct YVar {
  std::vector<int> label;
  Monomial image;
};

// A monomial in the y variables: sorted variable ids with multiplicity.
using YMonomial = std::vector<int>;

struct YMonomialHash {
  std::size_t operator()(const YMonomial& m) const;
};

// Presentation of the toric algebra of a basis or product: the full set
// of y variables in label order (odometer, all-zeros label first), with
// image-equality classes precomputed.
class Presentation {
 public:
  explicit Presentation(const ProductStructure& ps);

  int x_vars() const { return n_; }
  int factor_count() const { return s_; }
  int var_count() const { return static_cast<int>(vars_.size()); }
  const std::vector<YVar>& vars() const { return vars_; }
  const YVar& var(int v) const { return vars_[v]; }
  const std::vector<std::vector<Monomial>>& factors() const { return factors_; }
  std::uint64_t image_degree() const { return image_degree_; }

  // Label arithmetic: id = sum label[j] * stride[j].
  int id_of_label(const std::vector<int>& label) const;

  // Image classes in first-occurrence order; class_of(v) indexes them.
  int class_count() const { return static_cast<int>(classes_.size()); }
  int class_of(int v) const { return class_of_var_[v]; }
  const std::vector<int>& class_members(int c) const { return classes_[c]; }
  // Variables with the given image, empty list if none.
  const std::vector<int>& vars_with_image(const Monomial& m) const;

  std::string var_name(int v) const;  // "y3", "y11122", "y(2,10,1)"

 private:
  int n_, s_;
  std::vector<std::vector<Monomial>> factors_;
  std::vector<int> strides_;
  std::vector<YVar> vars_;
  std::uint64_t image_degree_;
  std::vector<int> class_of_var_;
  std::vector<std::vector<int>> classes_;
  std::unordered_map<Monomial, int, MonomialHash> class_by_image_;
  std::vector<int> empty_;
};

Presentation build_presentation(const MonomialBasis& b);
Presentation build_presentation(const ProductStructure& ps);

// Graded order used for canonical listings: lower degree first; equal
// degree compares variable ids from the largest down (colex), larger id
// making the larger monomial.  y1*y4 > y2*y3, matching printed forms.
int ym_compare(const YMonomial& a, const YMonomial& b);

Monomial ym_image(const Presentation& p, const YMonomial& m);
std::string ym_str(const Presentation& p, const YMonomial& m);  // "y1*y4", "y2^2"

// A pure difference lhs - rhs of two equal-degree y monomials with equal
// image, stored with lhs the canonically larger side.
struct Binomial {
  YMonomial lhs, rhs;
  bool operator==(const Binomial& other) const = default;
};

// Canonical orientation; nullopt when a == b (zero binomial).
std::optional<Binomial> try_binomial(YMonomial a, YMonomial b);
int binomial_compare(const Binomial& a, const Binomial& b);
std::string binomial_str(const Presentation& p, const Binomial& b);

enum class MoveKind { None, Proper, Generalized, SingleColumn };

// A named move set; `moves` is materialized and sorted canonically.
struct MoveSet {
  std::string name;
  std::vector<Binomial> moves;
};

// All y_a - y_b with equal images, a != b.
std::vector<Binomial> linear_relations(const Presentation& p);

// Symmetric exchange relations y_r y_s - y_t y_u: for indices i, j with
// deg_i im(r) > deg_i im(s) and deg_j im(r) < deg_j im(s), the images of
// t and u are (x_j/x_i) im(r) and (x_i/x_j) im(s).  With `generalized`
// the two degree conditions are dropped (any i != j with the quotients
// defined and realized); the result then contains the proper set.
std::vector<Binomial> exchange_relations(const Presentation& p, bool generalized);

// Binomials F - G of degree at most `degree_cap` whose associated
// matrices (rows = labels, up to row permutation) differ in at most one
// column and whose images agree.  With one factor this degenerates to
// every fiber-internal binomial up to the cap.
std::vector<Binomial> single_column_moves(const Presentation& p, int degree_cap = 3);

// Row-permutation column test used by single_column_moves: true when
// deleting some one column makes the two label-row multisets equal.
bool differ_in_at_most_one_column(const Presentation& p, const YMonomial& a,
                                  const YMonomial& b);

}  // namespace polytoric

#endif
