#include "polytoric/transversal.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "polytoric/errors.hpp"
#include "polytoric/invariants.hpp"

namespace polytoric {

namespace {

// The unique rotation (p + r) % m, else the unique reflection
// (r - p) % m, sending from0 to 0 and from1 to m - 1.
std::optional<std::vector<int>> dihedral_map(int m, int from0, int from1) {
  {
    int r = (m - from0) % m;
    if ((from1 + r) % m == m - 1) {
      std::vector<int> t(m);
      for (int p = 0; p < m; ++p) t[p] = (p + r) % m;
      return t;
    }
  }
  {
    int r = from0;
    if (((r - from1) % m + m) % m == m - 1) {
      std::vector<int> t(m);
      for (int p = 0; p < m; ++p) t[p] = ((r - p) % m + m) % m;
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace

ProductStructure TransversalStructure::to_product() const {
  std::vector<std::vector<Monomial>> factors;
  factors.reserve(subsets.size());
  for (const auto& sub : subsets) {
    std::vector<Monomial> f;
    f.reserve(sub.size());
    for (int i : sub) {
      std::vector<std::uint64_t> e(n, 0);
      e[i] = 1;
      f.emplace_back(std::move(e));
    }
    factors.push_back(std::move(f));
  }
  return ProductStructure::from_ordered_factors(n, std::move(factors));
}

TransversalStructure make_transversal(int n, std::vector<std::vector<int>> subsets) {
  if (n <= 0) throw PreconditionViolation("transversal needs at least one variable");
  if (subsets.empty()) throw PreconditionViolation("transversal needs at least one subset");
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    const auto& sub = subsets[j];
    if (sub.empty())
      throw PreconditionViolation("subset " + std::to_string(j + 1) + " is empty");
    for (int i : sub) {
      if (i < 0 || i >= n)
        throw PreconditionViolation("subset " + std::to_string(j + 1) +
                                    " indexes variable " + std::to_string(i + 1) +
                                    " outside 1.." + std::to_string(n));
    }
    auto sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionViolation("subset " + std::to_string(j + 1) +
                                  " repeats a variable");
  }
  return TransversalStructure{n, std::move(subsets)};
}

std::vector<Binomial> hibi_relations(const Presentation& p) {
  const int nvars = p.var_count();
  const int s = p.factor_count();
  std::vector<Binomial> out;
  for (int a = 0; a < nvars; ++a) {
    const auto& la = p.var(a).label;
    for (int b = a + 1; b < nvars; ++b) {
      const auto& lb = p.var(b).label;
      bool a_le = true, b_le = true;
      for (int j = 0; j < s; ++j) {
        if (la[j] > lb[j]) a_le = false;
        if (lb[j] > la[j]) b_le = false;
      }
      if (a_le || b_le) continue;
      std::vector<int> top(s), bot(s);
      for (int j = 0; j < s; ++j) {
        top[j] = std::max(la[j], lb[j]);
        bot[j] = std::min(la[j], lb[j]);
      }
      int vt = p.id_of_label(top);
      int vb = p.id_of_label(bot);
      Binomial rel = try_binomial({a, b}, {vt, vb}).value();
      if (ym_image(p, {a, b}) != ym_image(p, {vt, vb}))
        throw InternalInconsistency("lattice relation sides map differently for " +
                                    binomial_str(p, rel));
      out.push_back(std::move(rel));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Binomial& x, const Binomial& y) { return binomial_compare(x, y) < 0; });
  return out;
}

// Reverse ranking: the all-last label is the largest variable and the
// all-zeros label the smallest, a linear extension of the lattice
// order.  Under degrevlex the incomparable side of each lattice
// relation then leads, and stays leading after the bottom variable is
// substituted into the tails.
MonomialOrder hibi_order(int nvars) {
  MonomialOrder ord;
  ord.kind = OrderKind::DegRevLex;
  ord.vars_by_rank.resize(static_cast<std::size_t>(nvars));
  for (int v = 0; v < nvars; ++v)
    ord.vars_by_rank[static_cast<std::size_t>(v)] = nvars - 1 - v;
  return ord;
}

SubstituteResult substitute_linear(const TransversalStructure& t) {
  Presentation p0 = build_presentation(t.to_product());
  auto lin = linear_relations(p0);
  if (lin.size() != 1)
    throw PreconditionViolation("substitution needs exactly one duplicate image, found " +
                                std::to_string(lin.size()));
  const std::vector<int> gamma = p0.var(lin[0].rhs[0]).label;
  const std::vector<int> delta = p0.var(lin[0].lhs[0]).label;

  const int s = static_cast<int>(t.subsets.size());
  std::vector<std::vector<int>> maps;
  bool found = false;
  for (int assign = 0; assign < 2 && !found; ++assign) {
    const auto& first = assign == 0 ? gamma : delta;
    const auto& last = assign == 0 ? delta : gamma;
    maps.clear();
    found = true;
    for (int j = 0; j < s; ++j) {
      auto tm = dihedral_map(static_cast<int>(t.subsets[j].size()), first[j], last[j]);
      if (!tm) {
        found = false;
        break;
      }
      maps.push_back(std::move(*tm));
    }
  }
  if (!found)
    throw PreconditionViolation(
        "no per-factor rotation or reflection lines the duplicate pair up with the "
        "first and last labels");

  SubstituteResult res;
  res.position_map = maps;
  std::vector<std::vector<int>> subsets(s);
  for (int j = 0; j < s; ++j) {
    const auto& old = t.subsets[j];
    subsets[j].assign(old.size(), -1);
    for (std::size_t pos = 0; pos < old.size(); ++pos) subsets[j][maps[j][pos]] = old[pos];
  }
  res.structure = make_transversal(t.n, std::move(subsets));

  Presentation p1 = build_presentation(res.structure.to_product());
  const int last_id = p1.var_count() - 1;
  if (p1.var(0).image != p1.var(last_id).image)
    throw InternalInconsistency("relabeling did not pair the duplicate with the first "
                                "and last labels");
  res.linear = try_binomial({last_id}, {0}).value();

  std::vector<Binomial> rels;
  for (const Binomial& rel : hibi_relations(p1)) {
    YMonomial lhs = rel.lhs;
    YMonomial rhs = rel.rhs;
    for (int& v : lhs)
      if (v == last_id) v = 0;
    for (int& v : rhs)
      if (v == last_id) v = 0;
    auto sub = try_binomial(std::move(lhs), std::move(rhs));
    if (sub) rels.push_back(std::move(*sub));
  }
  std::sort(rels.begin(), rels.end(),
            [](const Binomial& x, const Binomial& y) { return binomial_compare(x, y) < 0; });
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  res.relations = std::move(rels);
  return res;
}

GorensteinEvidence gorenstein_evidence(const TransversalStructure& t, int d_max) {
  HVector hv = h_vector(t.to_product().flattened(), d_max);
  GorensteinEvidence out;
  out.dim = hv.dim;
  out.palindromic = is_palindromic(hv.h);
  out.h = std::move(hv.h);
  return out;
}

}  // namespace polytoric
