#include "polytoric/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "polytoric/errors.hpp"
#include "polytoric/rng.hpp"

namespace polytoric {

namespace {

bool divides(const Dense& a, const Dense& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const Dense& a, const Dense& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Dense lcm(const Dense& a, const Dense& b) {
  Dense out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

// m / lead * tail, entrywise; precondition divides(lead, m).
Dense rewrite(const Dense& m, const Dense& lead, const Dense& tail) {
  Dense out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i] - lead[i] + tail[i];
  return out;
}

}  // namespace

// Full normal form: rewrite by the first applicable element until no
// leading term divides.  Terminates because every step goes down in the
// order and monomial orders are well-orders.
Dense normal_form(Dense m, const std::vector<GBinomial>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : basis) {
      if (divides(g.lead, m)) {
        m = rewrite(m, g.lead, g.tail);
        changed = true;
        break;
      }
    }
  }
  return m;
}

namespace {

void sort_basis(std::vector<GBinomial>& basis, const MonomialOrder& ord) {
  std::sort(basis.begin(), basis.end(), [&](const GBinomial& a, const GBinomial& b) {
    int c = order_compare(a.lead, b.lead, ord);
    if (c != 0) return c < 0;
    return order_compare(a.tail, b.tail, ord) < 0;
  });
}

// Minimalize and tail-reduce a completed run.  Dropping an element whose
// lead another lead divides keeps the basis property; afterwards normal
// forms are unique, so reducing tails in place is safe.
std::vector<GBinomial> reduce_basis(std::vector<GBinomial> basis, const MonomialOrder& ord) {
  sort_basis(basis, ord);
  std::vector<GBinomial> kept;
  for (auto& g : basis) {
    bool drop = false;
    for (const auto& h : kept) {
      if (divides(h.lead, g.lead)) {
        drop = true;
        break;
      }
    }
    if (!drop) kept.push_back(std::move(g));
  }
  for (auto& g : kept) g.tail = normal_form(g.tail, kept);
  sort_basis(kept, ord);
  return kept;
}

}  // namespace

MonomialOrder default_order(int nvars, OrderKind kind) {
  MonomialOrder ord;
  ord.kind = kind;
  ord.vars_by_rank.resize(nvars);
  std::iota(ord.vars_by_rank.begin(), ord.vars_by_rank.end(), 0);
  return ord;
}

int order_compare(const Dense& a, const Dense& b, const MonomialOrder& ord) {
  if (ord.kind != OrderKind::Lex) {
    std::uint64_t da = dense_degree(a);
    std::uint64_t db = dense_degree(b);
    if (da != db) return da < db ? -1 : 1;
  }
  if (ord.kind == OrderKind::DegRevLex) {
    // scan from the lowest-ranked variable up; the first difference
    // decides, smaller exponent meaning larger monomial
    for (int r = static_cast<int>(ord.vars_by_rank.size()) - 1; r >= 0; --r) {
      int v = ord.vars_by_rank[r];
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
  }
  for (int v : ord.vars_by_rank) {
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  }
  return 0;
}

Dense to_dense(const YMonomial& m, int nvars) {
  Dense out(nvars, 0);
  for (int v : m) {
    if (v < 0 || v >= nvars)
      throw PreconditionViolation("variable id " + std::to_string(v) +
                                  " outside the dense range of " + std::to_string(nvars));
    out[v] += 1;
  }
  return out;
}

YMonomial from_dense(const Dense& d) {
  YMonomial out;
  for (std::size_t v = 0; v < d.size(); ++v)
    for (std::uint32_t k = 0; k < d[v]; ++k) out.push_back(static_cast<int>(v));
  return out;
}

std::uint64_t dense_degree(const Dense& d) {
  std::uint64_t sum = 0;
  for (auto x : d) sum += x;
  return sum;
}

BuchbergerResult buchberger(const std::vector<Binomial>& gens, const MonomialOrder& ord,
                            int nvars, std::uint64_t step_cap) {
  if (static_cast<int>(ord.vars_by_rank.size()) != nvars)
    throw PreconditionViolation("order ranks " + std::to_string(ord.vars_by_rank.size()) +
                                " variables, ideal has " + std::to_string(nvars));
  BuchbergerResult res;
  std::vector<GBinomial> basis;
  auto orient_add = [&](Dense u, Dense v) -> bool {
    int c = order_compare(u, v, ord);
    if (c == 0) return false;
    GBinomial g;
    if (c > 0)
      g = {std::move(u), std::move(v)};
    else
      g = {std::move(v), std::move(u)};
    for (const auto& h : basis)
      if (h == g) return false;
    basis.push_back(std::move(g));
    return true;
  };
  for (const Binomial& b : gens) orient_add(to_dense(b.lhs, nvars), to_dense(b.rhs, nvars));

  std::vector<std::pair<int, int>> queue;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(basis.size()); ++j) queue.emplace_back(i, j);
  std::size_t head = 0;
  while (head < queue.size()) {
    if (res.steps >= step_cap) {
      res.completed = false;
      break;
    }
    auto [i, j] = queue[head++];
    res.steps += 1;
    if (coprime(basis[i].lead, basis[j].lead)) continue;
    Dense l = lcm(basis[i].lead, basis[j].lead);
    Dense u = normal_form(rewrite(l, basis[i].lead, basis[i].tail), basis);
    Dense v = normal_form(rewrite(l, basis[j].lead, basis[j].tail), basis);
    if (u == v) continue;
    int before = static_cast<int>(basis.size());
    if (orient_add(std::move(u), std::move(v))) {
      for (int k = 0; k < before; ++k) queue.emplace_back(k, before);
    }
  }
  if (res.completed) {
    res.basis = reduce_basis(std::move(basis), ord);
  } else {
    sort_basis(basis, ord);
    res.basis = std::move(basis);
  }
  return res;
}

bool is_quadratic(const BuchbergerResult& gb) {
  for (const auto& g : gb.basis)
    if (dense_degree(g.lead) > 2) return false;
  return true;
}

std::string gb_str(const Presentation& p, const GBinomial& g) {
  return ym_str(p, from_dense(g.lead)) + " - " + ym_str(p, from_dense(g.tail));
}

CertifyResult certify_generation(const Presentation& p, const std::vector<Binomial>& gens,
                                 const MonomialOrder& ord, int d_max,
                                 const FiberOptions& opts, std::uint64_t step_cap) {
  CertifyResult res;
  res.degree_checked = d_max;
  BuchbergerResult gb = buchberger(gens, ord, p.var_count(), step_cap);
  if (!gb.completed) {
    res.completed = false;
    res.ok = false;
    return res;
  }
  auto ladder = target_ladder(p, d_max);
  for (int e = 1; e <= d_max; ++e) {
    for (const Monomial& target : ladder[e - 1]) {
      auto fib = fiber(p, target, e, opts);
      int irreducible = 0;
      for (const auto& m : fib) {
        Dense dm = to_dense(m, p.var_count());
        bool reducible = false;
        for (const auto& g : gb.basis) {
          if (divides(g.lead, dm)) {
            reducible = true;
            break;
          }
        }
        if (!reducible) ++irreducible;
      }
      if (irreducible != 1) {
        res.ok = false;
        res.counterexample = "degree " + std::to_string(e) + " fiber over " +
                             pretty(target) + " keeps " + std::to_string(irreducible) +
                             " irreducible monomials";
        return res;
      }
    }
  }
  return res;
}

QuadraticSearch search_quadratic(const std::vector<Binomial>& gens, int nvars,
                                 int attempts, std::uint64_t seed,
                                 std::uint64_t step_cap) {
  QuadraticSearch out;
  const OrderKind kinds[] = {OrderKind::DegRevLex, OrderKind::DegLex, OrderKind::Lex};
  SplitMix64 rng(seed);
  for (int t = 0; t < attempts; ++t) {
    MonomialOrder ord = default_order(nvars, kinds[t % 3]);
    if (t >= 3) {
      for (int i = nvars - 1; i >= 1; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(ord.vars_by_rank[i], ord.vars_by_rank[j]);
      }
    }
    out.attempts = t + 1;
    BuchbergerResult gb = buchberger(gens, ord, nvars, step_cap);
    if (gb.completed && is_quadratic(gb)) {
      out.found = true;
      out.order = std::move(ord);
      out.gb = std::move(gb);
      return out;
    }
  }
  return out;
}

}  // namespace polytoric
