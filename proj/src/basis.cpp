#include "polytoric/basis.hpp"

#include <algorithm>
#include <functional>

namespace polytoric {

MonomialBasis::MonomialBasis(int n, std::vector<Monomial> elements) : n_(n) {
  if (elements.empty()) throw EmptyBasis("basis has no elements");
  for (const auto& m : elements)
    if (m.vars() != n)
      throw LengthMismatch("basis element has " + std::to_string(m.vars()) +
                           " variables, expected " + std::to_string(n));
  d_ = elements.front().degree();
  for (const auto& m : elements)
    if (m.degree() != d_)
      throw PreconditionViolation("basis elements of unequal degree: " +
                                  std::to_string(m.degree()) + " vs " +
                                  std::to_string(d_));
  std::sort(elements.begin(), elements.end(), std::greater<>());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elems_ = std::move(elements);
  set_.insert(elems_.begin(), elems_.end());
}

CheckResult is_polymatroidal(const MonomialBasis& b) {
  int n = b.vars();
  for (const auto& f : b.elements()) {
    for (const auto& g : b.elements()) {
      for (int i = 0; i < n; ++i) {
        if (f.deg(i) <= g.deg(i)) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (f.deg(j) >= g.deg(j)) continue;
          if (b.contains(f.exchange(i, j))) found = true;
        }
        if (!found) return {false, ExchangeWitness{f, g, i, -1}};
      }
    }
  }
  return {true, std::nullopt};
}

CheckResult verify_symmetric_exchange(const MonomialBasis& b) {
  int n = b.vars();
  for (const auto& f : b.elements()) {
    for (const auto& g : b.elements()) {
      for (int i = 0; i < n; ++i) {
        if (f.deg(i) <= g.deg(i)) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (f.deg(j) >= g.deg(j)) continue;
          if (b.contains(f.exchange(i, j)) && b.contains(g.exchange(j, i)))
            found = true;
        }
        if (!found) return {false, ExchangeWitness{f, g, i, -1}};
      }
    }
  }
  return {true, std::nullopt};
}

Profile profile(const MonomialBasis& b) {
  int n = b.vars();
  Profile p;
  p.lower.assign(n, ~std::uint64_t(0));
  p.upper.assign(n, 0);
  for (const auto& m : b.elements()) {
    for (int i = 0; i < n; ++i) {
      p.lower[i] = std::min(p.lower[i], m.deg(i));
      p.upper[i] = std::max(p.upper[i], m.deg(i));
    }
  }
  return p;
}

namespace {

void check_profile_args(int n, const std::vector<std::uint64_t>& lower,
                        const std::vector<std::uint64_t>& upper) {
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n)
    throw LengthMismatch("profile bounds must have one entry per variable");
}

}  // namespace

MonomialBasis veronese_type(int n, std::uint64_t d,
                            const std::vector<std::uint64_t>& lower,
                            const std::vector<std::uint64_t>& upper) {
  check_profile_args(n, lower, upper);
  std::vector<Monomial> out;
  std::vector<std::uint64_t> cur(n, 0);
  // Backtrack over positions; prune with the remaining lower/upper sums.
  std::vector<std::uint64_t> lower_suffix(n + 1, 0), upper_suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    lower_suffix[i] = lower_suffix[i + 1] + lower[i];
    std::uint64_t u = upper_suffix[i + 1] + upper[i];
    upper_suffix[i] = (u < upper_suffix[i + 1]) ? ~std::uint64_t(0) : u;
  }
  std::function<void(int, std::uint64_t)> rec = [&](int i, std::uint64_t rem) {
    if (i == n) {
      if (rem == 0) out.emplace_back(cur);
      return;
    }
    if (rem < lower_suffix[i] || rem > upper_suffix[i]) return;
    std::uint64_t hi = std::min(upper[i], rem);
    for (std::uint64_t e = lower[i]; e <= hi; ++e) {
      cur[i] = e;
      rec(i + 1, rem - e);
    }
  };
  rec(0, d);
  if (out.empty())
    throw EmptyBasis("no monomials of degree " + std::to_string(d) +
                     " in the given exponent box");
  return MonomialBasis(n, std::move(out));
}

std::uint64_t veronese_count(int n, std::uint64_t d,
                             const std::vector<std::uint64_t>& lower,
                             const std::vector<std::uint64_t>& upper) {
  check_profile_args(n, lower, upper);
  if (d > 10'000'000)
    throw PreconditionViolation("veronese_count: degree too large");
  // DP over variables on the running sum; sums above d are dead.
  std::vector<std::uint64_t> ways(d + 1, 0);
  ways[0] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(d + 1, 0);
    for (std::uint64_t s = 0; s <= d; ++s) {
      if (!ways[s]) continue;
      for (std::uint64_t e = lower[i]; e <= upper[i] && s + e <= d; ++e) {
        std::uint64_t v = next[s + e] + ways[s];
        if (v < next[s + e]) throw Overflow("veronese_count overflows");
        next[s + e] = v;
      }
    }
    ways = std::move(next);
  }
  return ways[d];
}

CheckResult has_sep(const MonomialBasis& b) {
  int n = b.vars();
  CheckResult direct{true, std::nullopt};
  for (const auto& f : b.elements()) {
    for (const auto& g : b.elements()) {
      for (int i = 0; i < n && direct.ok; ++i) {
        if (f.deg(i) <= g.deg(i)) continue;
        for (int j = 0; j < n; ++j) {
          if (f.deg(j) >= g.deg(j)) continue;
          if (!b.contains(f.exchange(i, j))) {
            direct = {false, ExchangeWitness{f, g, i, j}};
            break;
          }
        }
      }
      if (!direct.ok) break;
    }
    if (!direct.ok) break;
  }
  Profile p = profile(b);
  bool via_box = (b == veronese_type(b.vars(), b.degree(), p.lower, p.upper));
  if (via_box != direct.ok)
    throw InternalInconsistency(
        "strong-exchange scan and Veronese reconstruction disagree");
  return direct;
}

ShortcutResult shortcut_property(const MonomialBasis& b) {
  if (!has_sep(b).ok)
    throw PreconditionViolation("shortcut_property requires a basis with the SEP");
  int n = b.vars();
  auto in = [&](const std::optional<Monomial>& m) { return m && b.contains(*m); };
  for (const auto& f : b.elements()) {
    // I(f): indices i reachable by a proper move (x_i/x_j) f into b.
    std::vector<int> incs;
    for (int i = 0; i < n; ++i) {
      bool any = false;
      for (int j = 0; j < n && !any; ++j)
        if (j != i && in(try_exchange(f, j, i))) any = true;
      if (any) incs.push_back(i);
    }
    if (incs.empty()) continue;
    for (const auto& g : b.elements()) {
      for (int l = 0; l < n; ++l) {
        bool hyp = false;
        for (int k = 0; k < n && !hyp; ++k)
          if (k != l && in(try_exchange(g, l, k))) hyp = true;
        if (!hyp) continue;
        for (int i : incs) {
          bool ok = false;
          for (int m = 0; m < n && !ok; ++m) {
            if (in(try_exchange(f, m, i)) && in(try_exchange(f, m, l)) &&
                in(try_exchange(g, l, m)))
              ok = true;
          }
          if (!ok) return {false, f, g, i, l};
        }
      }
    }
  }
  return {};
}

std::vector<Monomial> product_set(const std::vector<Monomial>& a,
                                  const std::vector<Monomial>& b) {
  std::unordered_set<Monomial, MonomialHash> seen;
  seen.reserve(a.size() * 2);
  for (const auto& x : a)
    for (const auto& y : b) seen.insert(x.multiply(y));
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ProductStructure::ProductStructure(int n,
                                   std::vector<std::vector<Monomial>> factors,
                                   MonomialBasis flattened)
    : n_(n), factors_(std::move(factors)), flattened_(std::move(flattened)) {}

ProductStructure ProductStructure::from_ordered_factors(
    int n, std::vector<std::vector<Monomial>> factors) {
  if (factors.empty()) throw PreconditionViolation("product needs at least one factor");
  for (const auto& fac : factors) {
    if (fac.empty()) throw EmptyBasis("product factor has no elements");
    for (const auto& m : fac)
      if (m.vars() != n)
        throw LengthMismatch("product factor element has wrong variable count");
    std::uint64_t d = fac.front().degree();
    for (const auto& m : fac)
      if (m.degree() != d)
        throw PreconditionViolation("product factor of unequal degree");
    for (std::size_t i = 0; i < fac.size(); ++i)
      for (std::size_t j = i + 1; j < fac.size(); ++j)
        if (fac[i] == fac[j])
          throw PreconditionViolation("product factor lists an element twice");
  }
  std::vector<Monomial> flat = factors.front();
  for (std::size_t j = 1; j < factors.size(); ++j)
    flat = product_set(flat, factors[j]);
  return ProductStructure(n, std::move(factors), MonomialBasis(n, std::move(flat)));
}

ProductStructure ProductStructure::single(const MonomialBasis& b) {
  return from_ordered_factors(b.vars(), {b.elements()});
}

ProductStructure ProductStructure::product(const MonomialBasis& a,
                                           const MonomialBasis& b) {
  if (a.vars() != b.vars())
    throw LengthMismatch("product factors live in different variable sets");
  return from_ordered_factors(a.vars(), {a.elements(), b.elements()});
}

ProductStructure ProductStructure::product(const std::vector<MonomialBasis>& factors) {
  if (factors.empty()) throw PreconditionViolation("product needs at least one factor");
  int n = factors.front().vars();
  std::vector<std::vector<Monomial>> lists;
  for (const auto& f : factors) {
    if (f.vars() != n)
      throw LengthMismatch("product factors live in different variable sets");
    lists.push_back(f.elements());
  }
  return from_ordered_factors(n, std::move(lists));
}

ProductStructure ProductStructure::power(const MonomialBasis& b, int k) {
  if (k < 1) throw PreconditionViolation("power exponent must be at least 1");
  std::vector<std::vector<Monomial>> lists(k, b.elements());
  return from_ordered_factors(b.vars(), std::move(lists));
}

MonomialBasis ProductStructure::factor_basis(int j) const {
  return MonomialBasis(n_, factors_[j]);
}

std::uint64_t ProductStructure::label_count() const {
  std::uint64_t c = 1;
  for (const auto& fac : factors_) {
    std::uint64_t next = c * fac.size();
    if (fac.size() != 0 && next / fac.size() != c)
      throw Overflow("product has too many labels");
    c = next;
  }
  return c;
}

}  // namespace polytoric
