#include "polytoric/generator.hpp"

#include <algorithm>
#include <utility>

#include "polytoric/errors.hpp"

namespace polytoric {

namespace {

Monomial unit(int n, int i, std::uint64_t d = 1) {
  std::vector<std::uint64_t> e(n, 0);
  e[i] = d;
  return Monomial(std::move(e));
}

MonomialBasis balanced_singleton(int n, std::uint64_t d) {
  std::vector<std::uint64_t> e(n, d / n);
  for (std::uint64_t i = 0; i < d % n; ++i) e[i] += 1;
  return MonomialBasis(n, {Monomial(std::move(e))});
}

MonomialBasis pentagon() {
  auto m = [](std::vector<std::uint64_t> e) { return Monomial(std::move(e)); };
  return MonomialBasis(4, {m({1, 1, 0, 0}), m({1, 0, 1, 0}), m({0, 1, 1, 0}),
                           m({0, 1, 0, 1}), m({0, 0, 1, 1})});
}

// Spanning trees of the complete graph on four nodes, one variable per
// edge: every edge triple except the four triangles.
MonomialBasis k4_trees() {
  const int triangles[4][3] = {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}};
  std::vector<Monomial> elems;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) {
        bool bad = false;
        for (const auto& t : triangles)
          bad = bad || (a == t[0] && b == t[1] && c == t[2]);
        if (bad) continue;
        std::vector<std::uint64_t> e(6, 0);
        e[a] = e[b] = e[c] = 1;
        elems.emplace_back(std::move(e));
      }
    }
  }
  return MonomialBasis(6, std::move(elems));
}

}  // namespace

MonomialBasis random_veronese(SplitMix64& rng, const GeneratorLimits& lim, int force_n) {
  const int top = std::max(2, lim.max_vars);
  const int n = force_n > 0 ? force_n : static_cast<int>(rng.range(2, top));
  const std::uint64_t d = rng.range(1, std::max<std::uint64_t>(1, lim.max_degree));
  // Tiny boxes make every downstream fiber a singleton, so draws are
  // rejected until the box holds at least three points (or as many as
  // the full simplex allows).
  const std::uint64_t full =
      veronese_count(n, d, std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, d));
  const std::uint64_t want = std::min<std::uint64_t>(3, full);
  for (int tries = 0; tries < lim.max_rejects; ++tries) {
    std::vector<std::uint64_t> lower(n), upper(n);
    std::uint64_t lo_sum = 0, up_sum = 0;
    for (int i = 0; i < n; ++i) {
      upper[i] = rng.range(0, d);
      lower[i] = rng.range(0, upper[i]);
      lo_sum += lower[i];
      up_sum += upper[i];
    }
    if (lo_sum > d || up_sum < d) continue;
    const std::uint64_t count = veronese_count(n, d, lower, upper);
    if (count < want || count > lim.max_labels) continue;
    return veronese_type(n, d, lower, upper);
  }
  return balanced_singleton(n, d);
}

ProductStructure random_sep_product(SplitMix64& rng, const GeneratorLimits& lim) {
  const int top = std::max(2, lim.max_vars);
  const int n = static_cast<int>(rng.range(2, top));
  for (int tries = 0; tries < lim.max_rejects; ++tries) {
    const int s = static_cast<int>(rng.range(1, std::max(1, lim.max_factors)));
    std::vector<MonomialBasis> factors;
    std::uint64_t labels = 1;
    int rich = 0;
    for (int j = 0; j < s; ++j) {
      factors.push_back(random_veronese(rng, lim, n));
      labels *= factors.back().size();
      rich += factors.back().size() >= 2 ? 1 : 0;
    }
    if (labels > lim.max_labels) continue;
    // Two nontrivial factors always put a square into some fiber; a
    // lone factor needs at least three points to stand a chance.
    if (rich < 2 && !(s == 1 && factors[0].size() >= 3)) continue;
    return ProductStructure::product(factors);
  }
  std::vector<Monomial> units;
  for (int i = 0; i < n; ++i) units.push_back(unit(n, i));
  MonomialBasis all_units(n, units);
  return ProductStructure::product(all_units, all_units);
}

MonomialBasis random_polymatroidal(SplitMix64& rng, const GeneratorLimits& lim,
                                   int force_n) {
  switch (rng.below(3)) {
    case 0:
      return random_veronese(rng, lim, force_n);
    case 1: {
      if (force_n == 1) return random_veronese(rng, lim, force_n);
      GeneratorLimits lm = lim;
      if (force_n > 0) lm.max_vars = force_n;
      TransversalStructure t = random_transversal(rng, lm);
      if (force_n > 0 && t.n != force_n) t = make_transversal(force_n, t.subsets);
      return t.to_product().flattened();
    }
    default: {
      std::vector<MonomialBasis (*)()> pool;
      if (force_n <= 0 || force_n == 4) pool.push_back(&pentagon);
      if (force_n <= 0 || force_n == 6) pool.push_back(&k4_trees);
      if (pool.empty()) return random_veronese(rng, lim, force_n);
      return pool[rng.below(pool.size())]();
    }
  }
}

TransversalStructure random_transversal(SplitMix64& rng, const GeneratorLimits& lim) {
  const int top = std::max(2, lim.max_vars);
  const int n = static_cast<int>(rng.range(2, top));
  for (int tries = 0; tries < lim.max_rejects; ++tries) {
    const int s = static_cast<int>(rng.range(1, std::max(1, lim.max_factors)));
    std::uint64_t labels = 1;
    int slack = 0;
    std::vector<std::vector<int>> subsets;
    for (int j = 0; j < s; ++j) {
      const int k = static_cast<int>(rng.range(1, std::min(3, n)));
      std::vector<int> sub;
      while (static_cast<int>(sub.size()) < k) {
        int idx = static_cast<int>(rng.below(n));
        if (std::find(sub.begin(), sub.end(), idx) == sub.end()) sub.push_back(idx);
      }
      labels *= sub.size();
      slack += k - 1;
      subsets.push_back(std::move(sub));
    }
    if (labels > lim.max_labels || slack < 2) continue;
    return make_transversal(n, std::move(subsets));
  }
  return make_transversal(n, {{0, 1}, {0, 1}});
}

}  // namespace polytoric
