#include "polytoric/invariants.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "polytoric/errors.hpp"
#include "polytoric/fiber.hpp"

namespace polytoric {

namespace {

constexpr std::uint64_t kSweepLimit = 2'000'000;

std::uint64_t multiset_count(std::uint64_t count, int e) {
  unsigned __int128 c = 1;
  for (int i = 1; i <= e; ++i) {
    c = c * (count - 1 + i) / i;
    if (c > (unsigned __int128)1 << 62) return std::uint64_t(1) << 62;
  }
  return static_cast<std::uint64_t>(c);
}

// One monomial x^alpha y_U; the Rees sweep works on these.
struct XY {
  Monomial x;
  YMonomial y;
  bool operator==(const XY&) const = default;
};

struct XYHash {
  std::size_t operator()(const XY& e) const {
    std::uint64_t h = MonomialHash{}(e.x);
    std::uint64_t z = h ^ (YMonomialHash{}(e.y) + 0x9e3779b97f4a7c15ULL + (h << 6));
    return static_cast<std::size_t>(z);
  }
};

int xy_compare(const XY& a, const XY& b) {
  int c = ym_compare(a.y, b.y);
  if (c != 0) return c;
  if (a.x < b.x) return -1;
  if (b.x < a.x) return 1;
  return 0;
}

struct XYBinomial {
  XY lhs, rhs;  // lhs the larger side
};

int xyb_compare(const XYBinomial& a, const XYBinomial& b) {
  int c = xy_compare(a.lhs, b.lhs);
  if (c != 0) return c;
  return xy_compare(a.rhs, b.rhs);
}

std::string xy_str(const Presentation& p, const XY& e) {
  bool has_x = e.x.degree() > 0;
  bool has_y = !e.y.empty();
  if (has_x && has_y) return pretty(e.x) + "*" + ym_str(p, e.y);
  if (has_x) return pretty(e.x);
  if (has_y) return ym_str(p, e.y);
  return "1";
}

void enumerate_exponents(int n, int total, std::vector<std::uint64_t>& cur, int at,
                         const std::function<void(const Monomial&)>& leaf) {
  if (at == n - 1) {
    cur[at] = total;
    leaf(Monomial(cur));
    return;
  }
  for (int take = 0; take <= total; ++take) {
    cur[at] = take;
    enumerate_exponents(n, total - take, cur, at + 1, leaf);
  }
}

}  // namespace

std::vector<std::uint64_t> hilbert_function(const MonomialBasis& b, int d_max) {
  if (d_max < 0) throw PreconditionViolation("degree bound must be nonnegative");
  std::vector<std::uint64_t> out;
  out.reserve(d_max + 1);
  out.push_back(1);
  std::vector<Monomial> cur;
  for (int e = 1; e <= d_max; ++e) {
    cur = cur.empty() ? b.elements() : product_set(cur, b.elements());
    out.push_back(cur.size());
  }
  return out;
}

int krull_dim(const MonomialBasis& b) {
  const int rows = b.size();
  const int cols = b.vars();
  std::vector<std::vector<__int128>> m(rows, std::vector<__int128>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = static_cast<__int128>(b.element(r).deg(c));
  // Bareiss elimination: every division is exact, entries stay minors.
  int rank = 0;
  __int128 prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    rank += 1;
  }
  return rank;
}

HVector h_vector(const MonomialBasis& b, int d_max) {
  HVector out;
  out.dim = krull_dim(b);
  const auto hf = hilbert_function(b, d_max);
  const int window = std::max(2, out.dim);
  if (d_max < window)
    throw NotStabilized("degree bound " + std::to_string(d_max) +
                        " below the settling window of " + std::to_string(window));
  std::vector<long long> binom(out.dim + 1);
  binom[0] = 1;
  for (int j = 1; j <= out.dim; ++j)
    binom[j] = binom[j - 1] * (out.dim - j + 1) / j;
  std::vector<long long> h(d_max + 1);
  for (int k = 0; k <= d_max; ++k) {
    long long acc = 0;
    for (int j = 0; j <= std::min(k, out.dim); ++j) {
      long long term = binom[j] * static_cast<long long>(hf[k - j]);
      acc += (j % 2 == 0) ? term : -term;
    }
    h[k] = acc;
  }
  for (int k = d_max - window + 1; k <= d_max; ++k) {
    if (h[k] != 0)
      throw NotStabilized("alternating differences still nonzero at degree " +
                          std::to_string(k) + "; raise the degree bound");
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  out.h = std::move(h);
  return out;
}

bool is_palindromic(const std::vector<long long>& h) {
  for (std::size_t i = 0, j = h.size(); i < j; ++i, --j)
    if (h[i] != h[j - 1]) return false;
  return true;
}

ReesResult rees_bidegrees(const Presentation& p, const ReesOptions& opts) {
  if (opts.cap_x < 0 || opts.cap_y < 0)
    throw PreconditionViolation("bidegree caps must be nonnegative");
  ReesResult res;
  res.cap_x = opts.cap_x;
  res.cap_y = opts.cap_y;
  const int n = p.x_vars();
  const int nvars = p.var_count();
  std::vector<Monomial> image_of(nvars);
  for (int v = 0; v < nvars; ++v) image_of[v] = p.var(v).image;

  std::vector<XYBinomial> moves;

  for (int total = 1; total <= opts.cap_x + opts.cap_y; ++total) {
    for (int a = std::max(0, total - opts.cap_y); a <= std::min(opts.cap_x, total); ++a) {
      const int bdeg = total - a;
      if (bdeg == 0) continue;  // the x variables alone never relate

      std::uint64_t sweep = multiset_count(n, a);
      std::uint64_t ycount = multiset_count(nvars, bdeg);
      if (sweep > kSweepLimit / std::max<std::uint64_t>(ycount, 1) || ycount > kSweepLimit) {
        std::string where =
            "bidegree (" + std::to_string(a) + "," + std::to_string(bdeg) + ") sweep";
        throw FiberTooLarge(where + " too large", where);
      }

      // group every x^alpha y_U of this bidegree by its total image
      std::unordered_map<Monomial, int, MonomialHash> index;
      std::vector<Monomial> images;
      std::vector<std::vector<XY>> groups;
      std::vector<std::uint64_t> alpha(n, 0);
      enumerate_exponents(n, a, alpha, 0, [&](const Monomial& xpart) {
        YMonomial cur;
        cur.reserve(bdeg);
        auto rec = [&](auto&& self, int start, int left, const Monomial& acc) -> void {
          if (left == 0) {
            auto [it, fresh] = index.emplace(acc, static_cast<int>(groups.size()));
            if (fresh) {
              images.push_back(acc);
              groups.emplace_back();
            }
            groups[it->second].push_back(XY{xpart, cur});
            return;
          }
          for (int v = start; v < nvars; ++v) {
            cur.push_back(v);
            self(self, v, left - 1, acc.multiply(image_of[v]));
            cur.pop_back();
          }
        };
        rec(rec, 0, bdeg, xpart);
      });

      std::vector<int> order(groups.size());
      for (std::size_t g = 0; g < order.size(); ++g) order[g] = static_cast<int>(g);
      for (auto& grp : groups)
        std::sort(grp.begin(), grp.end(),
                  [](const XY& u, const XY& v) { return xy_compare(u, v) < 0; });
      std::sort(order.begin(), order.end(), [&](int ga, int gb) {
        return xy_compare(groups[ga][0], groups[gb][0]) < 0;
      });

      for (int g : order) {
        const auto& grp = groups[g];
        if (grp.size() > opts.fiber_cap)
          throw FiberTooLarge("bidegree (" + std::to_string(a) + "," +
                                  std::to_string(bdeg) + ") fiber over " +
                                  pretty(images[g]) + " exceeds cap",
                              pretty(images[g]));
        if (grp.size() < 2) continue;

        // components under the output so far
        const int count = static_cast<int>(grp.size());
        std::unordered_map<XY, int, XYHash> pos;
        pos.reserve(count * 2);
        for (int i = 0; i < count; ++i) pos.emplace(grp[i], i);
        std::vector<int> comp(count);
        for (int i = 0; i < count; ++i) comp[i] = i;
        auto join = [&](int u, int v) {
          int cu = comp[u], cv = comp[v];
          if (cu == cv) return;
          if (cu > cv) std::swap(cu, cv);
          for (auto& c : comp)
            if (c == cv) c = cu;
        };
        auto apply = [&](const XY& e, const XY& from, const XY& to) -> std::optional<XY> {
          if (from.y.size() > e.y.size()) return std::nullopt;
          if (!e.x.divisible_by(from.x)) return std::nullopt;
          if (!ym_contains(e.y, from.y)) return std::nullopt;
          return XY{e.x.divide(from.x).multiply(to.x), ym_replace(e.y, from.y, to.y)};
        };
        for (int i = 0; i < count; ++i) {
          for (const auto& mv : moves) {
            if (auto img = apply(grp[i], mv.lhs, mv.rhs)) {
              auto it = pos.find(*img);
              if (it != pos.end()) join(i, it->second);
            }
            if (auto img = apply(grp[i], mv.rhs, mv.lhs)) {
              auto it = pos.find(*img);
              if (it != pos.end()) join(i, it->second);
            }
          }
        }
        // canonical merges until connected; a same-bidegree move only
        // ever applies whole, so each merge joins exactly two components
        while (true) {
          bool connected = true;
          for (int i = 1; i < count && connected; ++i) connected = comp[i] == comp[0];
          if (connected) break;
          std::optional<XYBinomial> best;
          int bi = -1, bj = -1;
          for (int i = 0; i < count; ++i) {
            for (int j = i + 1; j < count; ++j) {
              if (comp[i] == comp[j]) continue;
              XYBinomial cand;
              if (xy_compare(grp[i], grp[j]) >= 0)
                cand = {grp[i], grp[j]};
              else
                cand = {grp[j], grp[i]};
              if (!best || xyb_compare(cand, *best) < 0) {
                best = cand;
                bi = i;
                bj = j;
              }
            }
          }
          moves.push_back(*best);
          ReesGenerator gen;
          gen.a = a;
          gen.b = bdeg;
          gen.lhs_x = best->lhs.x;
          gen.rhs_x = best->rhs.x;
          gen.lhs_y = best->lhs.y;
          gen.rhs_y = best->rhs.y;
          gen.text = xy_str(p, best->lhs) + " - " + xy_str(p, best->rhs);
          res.gens.push_back(std::move(gen));
          if (a == 0 && bdeg == 1) res.has_linear_ydeg = true;
          join(bi, bj);
        }
      }
    }
  }
  return res;
}

}  // namespace polytoric
