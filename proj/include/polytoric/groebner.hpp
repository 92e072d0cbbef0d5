#ifndef POLYTORIC_GROEBNER_HPP
#define POLYTORIC_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polytoric/fiber.hpp"
#include "polytoric/presentation.hpp"

namespace polytoric {

// Dense exponent vector over the y variables.
using Dense = std::vector<std::uint32_t>;

enum class OrderKind { Lex, DegLex, DegRevLex };

// vars_by_rank[0] is the largest variable.  The identity ranking makes
// the first (all-zeros label) variable largest and the last smallest.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::vector<int> vars_by_rank;
};

MonomialOrder default_order(int nvars, OrderKind kind = OrderKind::DegRevLex);

// Negative when a < b in the order, zero when equal.
int order_compare(const Dense& a, const Dense& b, const MonomialOrder& ord);

Dense to_dense(const YMonomial& m, int nvars);
YMonomial from_dense(const Dense& d);
std::uint64_t dense_degree(const Dense& d);

struct GBinomial {
  Dense lead, tail;
  bool operator==(const GBinomial&) const = default;
};

struct BuchbergerResult {
  bool completed = true;
  std::uint64_t steps = 0;  // S-pairs examined
  std::vector<GBinomial> basis;
};

// Buchberger specialized to pure differences of monomials: S-pairs and
// reductions stay pure differences, so the whole run works on monomial
// pairs.  Stops with completed=false once step_cap S-pairs have been
// examined; the returned elements always lie in the ideal, and a
// completed run returns the reduced basis, sorted.
BuchbergerResult buchberger(const std::vector<Binomial>& gens, const MonomialOrder& ord,
                            int nvars, std::uint64_t step_cap = 1'000'000);

// Every basis element has degree at most two.
bool is_quadratic(const BuchbergerResult& gb);

// Rewrites by the first applicable basis element until none divides.
// Against a completed basis the result is the unique normal form.
Dense normal_form(Dense m, const std::vector<GBinomial>& basis);

std::string gb_str(const Presentation& p, const GBinomial& g);

struct CertifyResult {
  bool ok = true;
  bool completed = true;  // the underlying basis computation finished
  int degree_checked = 0;
  std::optional<std::string> counterexample;
};

// Certifies that gens generate every ideal element of degree <= d_max:
// after a finished basis computation, each fiber must contain exactly
// one monomial no leading term divides.
CertifyResult certify_generation(const Presentation& p, const std::vector<Binomial>& gens,
                                 const MonomialOrder& ord, int d_max,
                                 const FiberOptions& opts = {},
                                 std::uint64_t step_cap = 1'000'000);

struct QuadraticSearch {
  bool found = false;
  MonomialOrder order;
  BuchbergerResult gb;
  int attempts = 0;
};

// Looks for an order with a quadratic reduced basis: the three stock
// kinds with the identity ranking first, then seeded random rankings.
// Runs that hit the step cap never count.
QuadraticSearch search_quadratic(const std::vector<Binomial>& gens, int nvars,
                                 int attempts, std::uint64_t seed,
                                 std::uint64_t step_cap = 1'000'000);

}  // namespace polytoric

#endif
