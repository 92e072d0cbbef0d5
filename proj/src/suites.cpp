#include "polytoric/suites.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polytoric/basis.hpp"
#include "polytoric/errors.hpp"
#include "polytoric/fiber.hpp"
#include "polytoric/generator.hpp"
#include "polytoric/groebner.hpp"
#include "polytoric/io.hpp"
#include "polytoric/presentation.hpp"
#include "polytoric/rng.hpp"

namespace polytoric {

namespace {

// An instance returns a failure note, or nothing on success.
using InstanceFn = std::function<std::optional<std::string>(SplitMix64&)>;

SuiteResult drive(const std::string& name, int instances, std::uint64_t seed,
                  const InstanceFn& fn) {
  SuiteResult res;
  res.name = name;
  res.instances = instances;
  SplitMix64 root(seed);
  for (int i = 0; i < instances; ++i) {
    SplitMix64 rng = root.fork(static_cast<std::uint64_t>(i));
    std::optional<std::string> note;
    try {
      note = fn(rng);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    if (note) {
      res.failures += 1;
      if (res.notes.size() < 3) {
        res.notes.push_back("instance " + std::to_string(i) + " of seed " +
                            std::to_string(seed) + ": " + *note);
      }
    }
  }
  return res;
}

std::string basis_note(const MonomialBasis& b, const std::string& what) {
  return what + "\n" + serialize(b);
}

std::string product_note(const ProductStructure& ps, const std::string& what) {
  return what + "\n" + serialize(ps);
}

std::optional<std::string> inst_sep_veronese(SplitMix64& rng) {
  MonomialBasis b = random_veronese(rng, GeneratorLimits{});
  CheckResult poly = is_polymatroidal(b);
  if (!poly.ok) return basis_note(b, "box basis failed the exchange axiom");
  CheckResult sep = has_sep(b);
  if (!sep.ok) return basis_note(b, "box basis failed the strong exchange check");
  return std::nullopt;
}

std::optional<std::string> inst_power_sep(SplitMix64& rng) {
  GeneratorLimits lim;
  lim.max_vars = 4;
  lim.max_degree = 2;
  lim.max_labels = 20;
  MonomialBasis b = random_veronese(rng, lim);
  int k = static_cast<int>(rng.range(2, 3));
  ProductStructure ps = ProductStructure::power(b, k);
  MonomialBasis flat = ps.flattened();
  if (flat.size() > 600) return std::nullopt;  // keep the check affordable
  CheckResult sep = has_sep(flat);
  if (!sep.ok) {
    return basis_note(b, "power " + std::to_string(k) +
                             " of this box basis failed the strong exchange check");
  }
  return std::nullopt;
}

std::optional<std::string> inst_product_polymatroidal(SplitMix64& rng) {
  GeneratorLimits lim;
  lim.max_vars = 4;
  lim.max_degree = 2;
  lim.max_labels = 30;
  MonomialBasis b1 = random_polymatroidal(rng, lim);
  MonomialBasis b2 = random_polymatroidal(rng, lim, b1.vars());
  ProductStructure ps = ProductStructure::product(b1, b2);
  CheckResult poly = is_polymatroidal(ps.flattened());
  if (!poly.ok) return product_note(ps, "product left the exchange-closed class");
  return std::nullopt;
}

std::optional<std::string> inst_symmetric_exchange(SplitMix64& rng) {
  MonomialBasis b = random_polymatroidal(rng, GeneratorLimits{});
  CheckResult poly = is_polymatroidal(b);
  if (!poly.ok) return basis_note(b, "generator produced a non-exchange-closed basis");
  CheckResult sym = verify_symmetric_exchange(b);
  if (!sym.ok) return basis_note(b, "symmetric exchange failed");
  return std::nullopt;
}

std::optional<std::string> inst_white(SplitMix64& rng, MoveKind kind, int d_max) {
  ProductStructure ps = random_sep_product(rng, GeneratorLimits{});
  Presentation p = build_presentation(ps);
  WhiteReport rep = white_check(p, kind, d_max, FiberOptions{});
  if (!rep.pass) {
    std::string what = "fiber left disconnected under " + rep.moves;
    if (rep.failure) {
      what += " at degree " + std::to_string(rep.failure->degree) + " over " +
              rep.failure->target;
    }
    return product_note(ps, what);
  }
  return std::nullopt;
}

// Draw a product of two exchange-closed bases over the same ground set,
// small enough that degree-2 fibers on raw label multisets stay cheap.
ProductStructure small_poly_product(SplitMix64& rng) {
  GeneratorLimits lim;
  lim.max_vars = 4;
  lim.max_degree = 2;
  lim.max_labels = 30;
  for (int attempt = 0; attempt < 8; ++attempt) {
    MonomialBasis b1 = random_polymatroidal(rng, lim);
    MonomialBasis b2 = random_polymatroidal(rng, lim, b1.vars());
    if (b1.size() * b2.size() <= 80) return ProductStructure::product(b1, b2);
  }
  GeneratorLimits fallback;
  fallback.max_factors = 2;
  fallback.max_labels = 40;
  return random_sep_product(rng, fallback);
}

std::optional<std::string> inst_generalized_vs_proper(SplitMix64& rng) {
  ProductStructure ps = small_poly_product(rng);
  Presentation p = build_presentation(ps);

  std::vector<Binomial> lin = linear_relations(p);
  std::vector<Binomial> prop = exchange_relations(p, false);
  std::vector<Binomial> gen = exchange_relations(p, true);
  std::vector<Binomial> moves_prop = lin;
  moves_prop.insert(moves_prop.end(), prop.begin(), prop.end());
  std::vector<Binomial> moves_gen = lin;
  moves_gen.insert(moves_gen.end(), gen.begin(), gen.end());

  bool all_prop = true;
  auto ladder = target_ladder(p, 2);
  for (const Monomial& target : ladder[1]) {
    std::vector<YMonomial> fib = fiber(p, target, 2, FiberOptions{});
    if (fib.size() < 2) continue;
    Partition cp = fiber_components(fib, moves_prop);
    Partition cg = fiber_components(fib, moves_gen);
    if (cp.components != cg.components) {
      return product_note(ps, "generalized moves changed the component count over " +
                                  pretty(target) + " (" + std::to_string(cp.components) +
                                  " vs " + std::to_string(cg.components) + ")");
    }
    if (cp.components != 1) all_prop = false;
  }

  WhiteReport collapsed = white_check(p, MoveKind::Proper, 2, FiberOptions{});
  if (collapsed.pass != all_prop) {
    return product_note(ps, "collapsed sweep disagreed with raw label fibers");
  }
  return std::nullopt;
}

std::optional<std::string> inst_shortcut(SplitMix64& rng) {
  MonomialBasis b = random_veronese(rng, GeneratorLimits{});
  ShortcutResult sc = shortcut_property(b);
  if (!sc.ok) return basis_note(b, "two-step exchange shortcut failed");
  return std::nullopt;
}

std::optional<std::string> inst_column_permutation(SplitMix64& rng) {
  GeneratorLimits lim;
  lim.max_labels = 40;
  ProductStructure ps = random_sep_product(rng, lim);
  Presentation p1 = build_presentation(ps);

  std::vector<std::vector<Monomial>> shuffled;
  for (std::vector<Monomial> elems : ps.factors()) {
    for (std::size_t t = elems.size(); t > 1; --t) {
      std::size_t pick = static_cast<std::size_t>(rng.below(t));
      std::swap(elems[t - 1], elems[pick]);
    }
    shuffled.push_back(std::move(elems));
  }
  ProductStructure ps2 = ProductStructure::from_ordered_factors(ps.vars(), shuffled);
  Presentation p2 = build_presentation(ps2);

  std::size_t m1 = single_column_moves(p1, 2).size();
  std::size_t m2 = single_column_moves(p2, 2).size();
  if (m1 != m2) {
    return product_note(ps, "one-column move count changed under relabeling (" +
                                std::to_string(m1) + " vs " + std::to_string(m2) + ")");
  }
  bool w1 = white_check(p1, MoveKind::SingleColumn, 2, FiberOptions{}).pass;
  bool w2 = white_check(p2, MoveKind::SingleColumn, 2, FiberOptions{}).pass;
  if (w1 != w2) return product_note(ps, "one-column connectivity changed under relabeling");
  return std::nullopt;
}

std::optional<std::string> inst_gb_fiber_oracle(SplitMix64& rng) {
  GeneratorLimits lim;
  lim.max_vars = 4;
  lim.max_degree = 2;
  lim.max_factors = 2;
  lim.max_labels = 12;
  ProductStructure ps = random_sep_product(rng, lim);
  Presentation p = build_presentation(ps);

  std::vector<Generator> gens = minimal_generators(p, 3, FiberOptions{});
  std::vector<Binomial> bins;
  for (const Generator& g : gens) bins.push_back(g.binomial);

  MonomialOrder ord = default_order(p.var_count(), OrderKind::DegRevLex);
  CertifyResult cert = certify_generation(p, bins, ord, 3, FiberOptions{});
  if (!cert.completed) return product_note(ps, "basis completion hit the step cap");
  if (!cert.ok) {
    return product_note(ps, "generators missed a fiber: " +
                                cert.counterexample.value_or("no counterexample text"));
  }
  return std::nullopt;
}

struct SuiteSpec {
  const char* name;
  int default_instances;
  InstanceFn fn;
};

std::vector<SuiteSpec> specs() {
  std::vector<SuiteSpec> list;
  list.push_back({"sep-veronese", 100, inst_sep_veronese});
  list.push_back({"power-sep", 100, inst_power_sep});
  list.push_back({"product-polymatroidal", 100, inst_product_polymatroidal});
  list.push_back({"symmetric-exchange", 100, inst_symmetric_exchange});
  list.push_back({"white-proper", 100, [](SplitMix64& rng) {
                    return inst_white(rng, MoveKind::Proper, 3);
                  }});
  list.push_back({"white-single-column", 100, [](SplitMix64& rng) {
                    return inst_white(rng, MoveKind::SingleColumn, 3);
                  }});
  list.push_back({"generalized-vs-proper", 100, inst_generalized_vs_proper});
  list.push_back({"shortcut", 100, inst_shortcut});
  list.push_back({"column-permutation", 100, inst_column_permutation});
  list.push_back({"gb-fiber-oracle", 50, inst_gb_fiber_oracle});
  return list;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const SuiteSpec& s : specs()) names.push_back(s.name);
  return names;
}

SuiteResult run_suite(const std::string& name, int instances, std::uint64_t seed) {
  for (const SuiteSpec& s : specs()) {
    if (name == s.name) {
      int count = instances >= 0 ? instances : s.default_instances;
      return drive(s.name, count, seed, s.fn);
    }
  }
  throw PreconditionViolation("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int scale) {
  std::vector<SuiteResult> out;
  for (const SuiteSpec& s : specs()) {
    int count = s.default_instances;
    if (scale >= 0) count = s.default_instances == 50 && scale > 0 ? (scale + 1) / 2 : scale;
    out.push_back(drive(s.name, count, seed, s.fn));
  }
  return out;
}

}  // namespace polytoric
