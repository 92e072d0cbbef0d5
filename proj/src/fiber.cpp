#include "polytoric/fiber.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "polytoric/errors.hpp"

namespace polytoric {

namespace {

constexpr std::uint64_t kSweepLimit = 2'000'000;

bool ym_less(const YMonomial& a, const YMonomial& b) { return ym_compare(a, b) < 0; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

// Component ids numbered by first appearance, so element 0 is in
// component 0 and samples come out deterministic.
Partition normalize(UnionFind& uf) {
  Partition part;
  const int count = static_cast<int>(uf.parent.size());
  part.comp.assign(count, -1);
  std::unordered_map<int, int> remap;
  for (int i = 0; i < count; ++i) {
    auto [it, fresh] = remap.emplace(uf.find(i), part.components);
    if (fresh) part.components += 1;
    part.comp[i] = it->second;
  }
  return part;
}

// C(count + e - 1, e), saturating well above the sweep limit.
std::uint64_t multiset_count(std::uint64_t count, int e) {
  unsigned __int128 c = 1;
  for (int i = 1; i <= e; ++i) {
    c = c * (count - 1 + i) / i;
    if (c > (unsigned __int128)1 << 62) return std::uint64_t(1) << 62;
  }
  return static_cast<std::uint64_t>(c);
}

void check_sweep(std::uint64_t count, int e) {
  std::uint64_t total = multiset_count(count, e);
  if (total > kSweepLimit) {
    std::string where = "degree-" + std::to_string(e) + " sweep";
    throw FiberTooLarge(where + " would enumerate " + std::to_string(total) +
                            " monomials (limit " + std::to_string(kSweepLimit) + ")",
                        where);
  }
}

// Fibers at one degree, grouped by image; `images` keeps insertion order.
struct GroupMap {
  std::unordered_map<Monomial, int, MonomialHash> index;
  std::vector<Monomial> images;
  std::vector<std::vector<YMonomial>> groups;

  void add(const Monomial& img, const YMonomial& m) {
    auto [it, fresh] = index.emplace(img, static_cast<int>(groups.size()));
    if (fresh) {
      images.push_back(img);
      groups.emplace_back();
    }
    groups[it->second].push_back(m);
  }
};

// All nondecreasing id sequences of length e over 0..count-1 with the
// accumulated image, grouped.
void enumerate_grouped(int count, int e, int n, const std::vector<Monomial>& image_of,
                       GroupMap& gm) {
  YMonomial cur;
  cur.reserve(e);
  auto rec = [&](auto&& self, int start, int left, const Monomial& acc) -> void {
    if (left == 0) {
      gm.add(acc, cur);
      return;
    }
    for (int v = start; v < count; ++v) {
      cur.push_back(v);
      self(self, v, left - 1, acc.multiply(image_of[v]));
      cur.pop_back();
    }
  };
  rec(rec, 0, e, Monomial::one(n));
}

int tri_index(int count, int a, int b) {
  // cell for the unordered pair a <= b among count classes
  return a * count - a * (a - 1) / 2 + (b - a);
}

using PairTable = std::vector<std::vector<std::pair<int, int>>>;

// For every unordered class pair {a, b}, the unordered pairs {c, d}
// reachable by one exchange step on the representative images.  The
// table drives fiber walks on image multisets; which variable carries
// an image never matters to an exchange step, so classes suffice.
PairTable build_pair_table(const Presentation& p, bool generalized) {
  const int nclass = p.class_count();
  const int n = p.x_vars();
  if (nclass > 2000)
    throw PreconditionViolation("exchange sweep limited to 2000 image classes, got " +
                                std::to_string(nclass));
  std::vector<Monomial> rep(nclass);
  for (int c = 0; c < nclass; ++c) rep[c] = p.var(p.class_members(c)[0]).image;
  PairTable table(static_cast<std::size_t>(nclass) * (nclass + 1) / 2);
  for (int a = 0; a < nclass; ++a) {
    for (int b = a; b < nclass; ++b) {
      auto& cell = table[tri_index(nclass, a, b)];
      const Monomial& fa = rep[a];
      const Monomial& fb = rep[b];
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          bool allowed = generalized
                             ? fa.deg(i) > 0 && fb.deg(j) > 0
                             : fa.deg(i) > fb.deg(i) && fa.deg(j) < fb.deg(j);
          if (!allowed) continue;
          const auto& tv = p.vars_with_image(fa.exchange(i, j));
          if (tv.empty()) continue;
          const auto& uv = p.vars_with_image(fb.exchange(j, i));
          if (uv.empty()) continue;
          int c1 = p.class_of(tv[0]);
          int c2 = p.class_of(uv[0]);
          if (c1 > c2) std::swap(c1, c2);
          if (c1 == a && c2 == b) continue;
          cell.emplace_back(c1, c2);
        }
      }
      std::sort(cell.begin(), cell.end());
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
    }
  }
  return table;
}

Partition exchange_components(const std::vector<YMonomial>& fib, const PairTable& table,
                              int nclass) {
  const int count = static_cast<int>(fib.size());
  UnionFind uf(count);
  std::unordered_map<YMonomial, int, YMonomialHash> pos;
  pos.reserve(count * 2);
  for (int i = 0; i < count; ++i) pos.emplace(fib[i], i);
  const int e = static_cast<int>(fib.empty() ? 0 : fib[0].size());
  std::vector<std::pair<int, int>> seen;
  for (int i = 0; i < count; ++i) {
    const YMonomial& m = fib[i];
    seen.clear();
    for (int a = 0; a < e; ++a) {
      for (int b = a + 1; b < e; ++b) {
        std::pair<int, int> pv{m[a], m[b]};
        if (std::find(seen.begin(), seen.end(), pv) != seen.end()) continue;
        seen.push_back(pv);
        for (auto [c, d] : table[tri_index(nclass, pv.first, pv.second)]) {
          YMonomial nb = m;
          nb[a] = c;
          nb[b] = d;
          std::sort(nb.begin(), nb.end());
          auto it = pos.find(nb);
          if (it != pos.end()) uf.unite(i, it->second);
        }
      }
    }
  }
  return normalize(uf);
}

// Image-multiset element rendered through class-representative names.
std::string class_multiset_str(const Presentation& p, const YMonomial& classes) {
  YMonomial vars;
  vars.reserve(classes.size());
  for (int c : classes) vars.push_back(p.class_members(c)[0]);
  std::sort(vars.begin(), vars.end());
  return ym_str(p, vars);
}

void record_fiber(WhiteReport& rep, DegreeStats& st, const Partition& part,
                  const std::vector<YMonomial>& fib, int e, const Monomial& image,
                  const std::function<std::string(const YMonomial&)>& show) {
  if (part.components <= 1) return;
  st.disconnected += 1;
  rep.pass = false;
  if (rep.failure) return;
  WhiteFailure f;
  f.degree = e;
  f.target = pretty(image);
  f.separated.push_back(show(fib[0]));
  for (std::size_t i = 0; i < fib.size(); ++i) {
    if (part.comp[i] == 1) {
      f.separated.push_back(show(fib[i]));
      break;
    }
  }
  rep.failure = f;
}

void white_collapsed(const Presentation& p, MoveKind kind, int d_max,
                     const FiberOptions& opts, WhiteReport& rep) {
  const int nclass = p.class_count();
  std::vector<Monomial> image_of(nclass);
  for (int c = 0; c < nclass; ++c) image_of[c] = p.var(p.class_members(c)[0]).image;
  PairTable table;
  if (kind == MoveKind::None)
    table.assign(static_cast<std::size_t>(nclass) * (nclass + 1) / 2, {});
  else
    table = build_pair_table(p, kind == MoveKind::Generalized);
  auto show = [&](const YMonomial& m) { return class_multiset_str(p, m); };
  for (int e = 1; e <= d_max; ++e) {
    DegreeStats st;
    st.degree = e;
    check_sweep(nclass, e);
    GroupMap gm;
    enumerate_grouped(nclass, e, p.x_vars(), image_of, gm);
    for (std::size_t g = 0; g < gm.groups.size(); ++g) {
      auto& fib = gm.groups[g];
      st.fibers += 1;
      st.largest = std::max<std::uint64_t>(st.largest, fib.size());
      if (fib.size() > opts.cap)
        throw FiberTooLarge("fiber over " + pretty(gm.images[g]) + " exceeds cap " +
                                std::to_string(opts.cap),
                            pretty(gm.images[g]));
      if (fib.size() < 2) continue;
      st.nontrivial += 1;
      std::sort(fib.begin(), fib.end(), ym_less);
      Partition part = exchange_components(fib, table, nclass);
      record_fiber(rep, st, part, fib, e, gm.images[g], show);
    }
    rep.degrees.push_back(st);
  }
}

void white_single_column(const Presentation& p, int d_max, const FiberOptions& opts,
                         WhiteReport& rep) {
  const int nvars = p.var_count();
  const int s = p.factor_count();
  std::vector<Monomial> image_of(nvars);
  for (int v = 0; v < nvars; ++v) image_of[v] = p.var(v).image;

  // strip_id[c][v]: id of v's label with column c deleted.  Elements
  // whose stripped multisets coincide differ in column c only, and any
  // two such are one move apart, so each strip bucket is a clique.
  std::vector<std::vector<int>> strip_id(s, std::vector<int>(nvars));
  for (int c = 0; c < s; ++c) {
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < nvars; ++v) {
      std::vector<int> key = p.var(v).label;
      key.erase(key.begin() + c);
      strip_id[c][v] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
    }
  }

  auto show = [&](const YMonomial& m) { return ym_str(p, m); };
  for (int e = 1; e <= d_max; ++e) {
    DegreeStats st;
    st.degree = e;
    check_sweep(nvars, e);
    GroupMap gm;
    enumerate_grouped(nvars, e, p.x_vars(), image_of, gm);
    for (std::size_t g = 0; g < gm.groups.size(); ++g) {
      auto& fib = gm.groups[g];
      st.fibers += 1;
      st.largest = std::max<std::uint64_t>(st.largest, fib.size());
      if (fib.size() > opts.cap)
        throw FiberTooLarge("fiber over " + pretty(gm.images[g]) + " exceeds cap " +
                                std::to_string(opts.cap),
                            pretty(gm.images[g]));
      if (fib.size() < 2) continue;
      st.nontrivial += 1;
      std::sort(fib.begin(), fib.end(), ym_less);
      const int count = static_cast<int>(fib.size());
      UnionFind uf(count);
      for (int c = 0; c < s; ++c) {
        std::unordered_map<YMonomial, int, YMonomialHash> first;
        first.reserve(count * 2);
        for (int i = 0; i < count; ++i) {
          YMonomial key;
          key.reserve(fib[i].size());
          for (int v : fib[i]) key.push_back(strip_id[c][v]);
          std::sort(key.begin(), key.end());
          auto [it, fresh] = first.emplace(std::move(key), i);
          if (!fresh) uf.unite(it->second, i);
        }
      }
      {
        // replacing one variable by an image-equal one: bucket on the
        // remainder plus the class, encoded negatively to stay disjoint
        // from variable ids
        std::unordered_map<YMonomial, int, YMonomialHash> first;
        for (int i = 0; i < count; ++i) {
          const YMonomial& m = fib[i];
          for (std::size_t q = 0; q < m.size(); ++q) {
            if (q > 0 && m[q] == m[q - 1]) continue;
            YMonomial key = m;
            key.erase(key.begin() + q);
            key.push_back(-(p.class_of(m[q]) + 1));
            auto [it, fresh] = first.emplace(std::move(key), i);
            if (!fresh) uf.unite(it->second, i);
          }
        }
      }
      Partition part = normalize(uf);
      record_fiber(rep, st, part, fib, e, gm.images[g], show);
    }
    rep.degrees.push_back(st);
  }
}

}  // namespace

std::vector<YMonomial> fiber(const Presentation& p, const Monomial& target, int e,
                             const FiberOptions& opts) {
  if (e < 0) throw PreconditionViolation("fiber degree must be nonnegative");
  if (target.vars() != p.x_vars())
    throw LengthMismatch("fiber target has " + std::to_string(target.vars()) +
                         " variables, presentation has " + std::to_string(p.x_vars()));
  std::vector<YMonomial> out;
  if (e == 0) {
    if (target.degree() == 0) out.push_back({});
    return out;
  }
  if (target.degree() != p.image_degree() * static_cast<std::uint64_t>(e)) return out;
  const int nvars = p.var_count();
  YMonomial cur;
  cur.reserve(e);
  auto rec = [&](auto&& self, int start, int left, const Monomial& rem) -> void {
    if (left == 0) {
      out.push_back(cur);
      if (out.size() > opts.cap)
        throw FiberTooLarge("fiber over " + pretty(target) + " exceeds cap " +
                                std::to_string(opts.cap),
                            pretty(target));
      return;
    }
    for (int v = start; v < nvars; ++v) {
      const Monomial& im = p.var(v).image;
      if (!rem.divisible_by(im)) continue;
      cur.push_back(v);
      self(self, v, left - 1, rem.divide(im));
      cur.pop_back();
    }
  };
  rec(rec, 0, e, target);
  std::sort(out.begin(), out.end(), ym_less);
  return out;
}

bool ym_contains(const YMonomial& m, const YMonomial& sub) {
  std::size_t i = 0;
  for (int v : sub) {
    while (i < m.size() && m[i] < v) ++i;
    if (i >= m.size() || m[i] != v) return false;
    ++i;
  }
  return true;
}

YMonomial ym_replace(const YMonomial& m, const YMonomial& out, const YMonomial& in) {
  YMonomial rest;
  rest.reserve(m.size() - out.size() + in.size());
  std::size_t i = 0;
  for (int v : m) {
    if (i < out.size() && out[i] == v) {
      ++i;
      continue;
    }
    rest.push_back(v);
  }
  if (i != out.size())
    throw PreconditionViolation("ym_replace: pattern not contained in monomial");
  YMonomial result;
  result.reserve(rest.size() + in.size());
  std::merge(rest.begin(), rest.end(), in.begin(), in.end(), std::back_inserter(result));
  return result;
}

Partition fiber_components(const std::vector<YMonomial>& fib,
                           const std::vector<Binomial>& moves) {
  const int count = static_cast<int>(fib.size());
  UnionFind uf(count);
  std::unordered_map<YMonomial, int, YMonomialHash> pos;
  pos.reserve(count * 2);
  for (int i = 0; i < count; ++i) pos.emplace(fib[i], i);
  for (int i = 0; i < count; ++i) {
    for (const Binomial& mv : moves) {
      if (mv.lhs.size() > fib[i].size()) continue;
      if (ym_contains(fib[i], mv.lhs)) {
        auto it = pos.find(ym_replace(fib[i], mv.lhs, mv.rhs));
        if (it != pos.end()) uf.unite(i, it->second);
      }
      if (ym_contains(fib[i], mv.rhs)) {
        auto it = pos.find(ym_replace(fib[i], mv.rhs, mv.lhs));
        if (it != pos.end()) uf.unite(i, it->second);
      }
    }
  }
  return normalize(uf);
}

bool fiber_connected(const std::vector<YMonomial>& fib,
                     const std::vector<Binomial>& moves) {
  return fiber_components(fib, moves).components <= 1;
}

WhiteReport white_check(const Presentation& p, MoveKind kind, int d_max,
                        const FiberOptions& opts) {
  if (d_max < 0) throw PreconditionViolation("white check needs a nonnegative degree bound");
  WhiteReport rep;
  rep.d_max = d_max;
  switch (kind) {
    case MoveKind::None:
      rep.moves = "linear-only";
      break;
    case MoveKind::Proper:
      rep.moves = "proper+linear";
      break;
    case MoveKind::Generalized:
      rep.moves = "generalized+linear";
      break;
    case MoveKind::SingleColumn:
      rep.moves = "single-column+linear";
      break;
  }
  if (kind == MoveKind::SingleColumn) {
    rep.fiber_domain = "label-multisets";
    white_single_column(p, d_max, opts, rep);
  } else {
    rep.fiber_domain = "image-multisets";
    white_collapsed(p, kind, d_max, opts, rep);
  }
  return rep;
}

std::vector<Generator> minimal_generators(const Presentation& p, int d_max,
                                          const FiberOptions& opts) {
  if (d_max < 0)
    throw PreconditionViolation("generator extraction needs a nonnegative degree bound");
  std::vector<Generator> out;
  std::vector<Binomial> moves;
  if (d_max >= 1) {
    for (int c = 0; c < p.class_count(); ++c) {
      const auto& mem = p.class_members(c);
      for (std::size_t k = 1; k < mem.size(); ++k) {
        Binomial b = try_binomial({mem[0]}, {mem[k]}).value();
        out.push_back({b, 1});
        moves.push_back(b);
      }
    }
  }
  const int nvars = p.var_count();
  std::vector<Monomial> image_of(nvars);
  for (int v = 0; v < nvars; ++v) image_of[v] = p.var(v).image;
  for (int e = 2; e <= d_max; ++e) {
    check_sweep(nvars, e);
    GroupMap gm;
    enumerate_grouped(nvars, e, p.x_vars(), image_of, gm);
    for (auto& fib : gm.groups) std::sort(fib.begin(), fib.end(), ym_less);
    std::vector<int> order(gm.groups.size());
    for (std::size_t g = 0; g < order.size(); ++g) order[g] = static_cast<int>(g);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return ym_compare(gm.groups[a][0], gm.groups[b][0]) < 0;
    });
    for (int g : order) {
      const auto& fib = gm.groups[g];
      if (fib.size() > opts.cap)
        throw FiberTooLarge("fiber over " + pretty(gm.images[g]) + " exceeds cap " +
                                std::to_string(opts.cap),
                            pretty(gm.images[g]));
      if (fib.size() < 2) continue;
      Partition part = fiber_components(fib, moves);
      while (part.components > 1) {
        std::optional<Binomial> best;
        int bi = -1, bj = -1;
        for (std::size_t i = 0; i < fib.size(); ++i) {
          for (std::size_t j = i + 1; j < fib.size(); ++j) {
            if (part.comp[i] == part.comp[j]) continue;
            Binomial b = try_binomial(fib[i], fib[j]).value();
            if (!best || binomial_compare(b, *best) < 0) {
              best = b;
              bi = static_cast<int>(i);
              bj = static_cast<int>(j);
            }
          }
        }
        out.push_back({*best, e});
        moves.push_back(*best);
        // a degree-e move touches degree-e elements whole, so it joins
        // exactly these two components
        int keep = part.comp[bi];
        int drop = part.comp[bj];
        for (auto& cm : part.comp)
          if (cm == drop) cm = keep;
        part.components -= 1;
      }
    }
  }
  return out;
}

std::vector<std::vector<Monomial>> target_ladder(const Presentation& p, int d_max) {
  std::vector<std::vector<Monomial>> out;
  if (d_max <= 0) return out;
  std::vector<Monomial> base;
  base.reserve(p.class_count());
  for (int c = 0; c < p.class_count(); ++c) base.push_back(p.var(p.class_members(c)[0]).image);
  std::sort(base.begin(), base.end(), std::greater<>());
  out.push_back(base);
  for (int e = 2; e <= d_max; ++e) out.push_back(product_set(out.back(), base));
  return out;
}

}  // namespace polytoric
