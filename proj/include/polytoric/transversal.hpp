#ifndef POLYTORIC_TRANSVERSAL_HPP
#define POLYTORIC_TRANSVERSAL_HPP

#include <vector>

#include "polytoric/basis.hpp"
#include "polytoric/groebner.hpp"
#include "polytoric/presentation.hpp"

namespace polytoric {

// A system of index subsets of {0..n-1}; its transversal algebra is the
// toric algebra of the product of the factors {x_i : i in subsets[j]}.
// The order inside each subset is kept as given: it fixes the label
// positions, which the lattice structure below reads.
struct TransversalStructure {
  int n = 0;
  std::vector<std::vector<int>> subsets;

  ProductStructure to_product() const;
};

// Validates ranges, nonemptiness and per-subset distinctness.
TransversalStructure make_transversal(int n, std::vector<std::vector<int>> subsets);

// For every componentwise-incomparable label pair a, b, the relation
// y_a y_b - y_top y_bot where top takes the larger position in each
// factor and bot the smaller.  The two sides agree under the algebra
// map because the position multisets match factor by factor.
std::vector<Binomial> hibi_relations(const Presentation& p);

// Order under which the incomparable side of each relation above leads:
// graded reverse lex ranking the last label highest, so the listing
// order is a linear extension of the componentwise label order.
MonomialOrder hibi_order(int nvars);

struct SubstituteResult {
  TransversalStructure structure;               // relabeled input
  std::vector<std::vector<int>> position_map;   // per factor, old position -> new
  Binomial linear;                              // y_last - y_first, the one duplicate
  std::vector<Binomial> relations;              // lattice relations with y_last replaced
};

// For a structure whose presentation carries exactly one duplicate
// image: relabels positions factor by factor with a rotation or
// reflection so the duplicate pair becomes the all-zeros and all-last
// labels, then replaces the last variable by the first throughout the
// lattice relations.  The returned relations generate the ideal of the
// deduplicated algebra whenever relations plus the duplicate generate
// the original.  Throws PreconditionViolation when the duplicate count
// differs from one or no such relabeling exists.
SubstituteResult substitute_linear(const TransversalStructure& t);

struct GorensteinEvidence {
  int dim = 0;
  std::vector<long long> h;
  bool palindromic = false;
};

// Numerator data of the transversal algebra: palindromic h is the
// standard symptom, not a proof.
GorensteinEvidence gorenstein_evidence(const TransversalStructure& t, int d_max);

}  // namespace polytoric

#endif
