#ifndef POLYTORIC_GENERATOR_HPP
#define POLYTORIC_GENERATOR_HPP

#include "polytoric/basis.hpp"
#include "polytoric/rng.hpp"
#include "polytoric/transversal.hpp"

namespace polytoric {

// Bounds for random instances.  The label bound keeps downstream fiber
// sweeps inside the runtime budget; draws that blow past it are
// rejected and resampled, deterministically given the stream.
struct GeneratorLimits {
  int max_vars = 5;
  std::uint64_t max_degree = 3;
  int max_factors = 3;
  std::uint64_t max_labels = 80;
  int max_rejects = 200;
};

// Box basis with a profile drawn uniformly among feasible ones by
// rejection.  Falls back to a single balanced monomial if every draw
// was rejected.
MonomialBasis random_veronese(SplitMix64& rng, const GeneratorLimits& lim,
                              int force_n = -1);

// Product of box bases over one variable set.
ProductStructure random_sep_product(SplitMix64& rng, const GeneratorLimits& lim);

// Draws from a pool of exchange-closed families: box bases, transversal
// products, and a few fixed sporadic sets that are not box bases.
MonomialBasis random_polymatroidal(SplitMix64& rng, const GeneratorLimits& lim,
                                   int force_n = -1);

TransversalStructure random_transversal(SplitMix64& rng, const GeneratorLimits& lim);

}  // namespace polytoric

#endif
