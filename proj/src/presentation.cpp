#include "polytoric/presentation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace polytoric {

Presentation::Presentation(const ProductStructure& ps)
    : n_(ps.vars()), s_(ps.factor_count()), factors_(ps.factors()) {
  std::uint64_t count = ps.label_count();
  if (count > 200'000)
    throw PreconditionViolation("presentation would need " + std::to_string(count) +
                                " variables; refusing to materialize");
  strides_.assign(s_, 1);
  for (int j = s_ - 2; j >= 0; --j)
    strides_[j] = strides_[j + 1] * static_cast<int>(factors_[j + 1].size());
  vars_.reserve(count);
  std::vector<int> label(s_, 0);
  for (std::uint64_t id = 0; id < count; ++id) {
    Monomial image = factors_[0][label[0]];
    for (int j = 1; j < s_; ++j) image = image.multiply(factors_[j][label[j]]);
    vars_.push_back(YVar{label, std::move(image)});
    for (int j = s_ - 1; j >= 0; --j) {
      if (++label[j] < static_cast<int>(factors_[j].size())) break;
      label[j] = 0;
    }
  }
  image_degree_ = vars_.front().image.degree();
  class_of_var_.resize(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    auto [it, fresh] = class_by_image_.try_emplace(
        vars_[v].image, static_cast<int>(classes_.size()));
    if (fresh) classes_.emplace_back();
    class_of_var_[v] = it->second;
    classes_[it->second].push_back(static_cast<int>(v));
  }
}

int Presentation::id_of_label(const std::vector<int>& label) const {
  int id = 0;
  for (int j = 0; j < s_; ++j) id += label[j] * strides_[j];
  return id;
}

const std::vector<int>& Presentation::vars_with_image(const Monomial& m) const {
  auto it = class_by_image_.find(m);
  return it == class_by_image_.end() ? empty_ : classes_[it->second];
}

std::string Presentation::var_name(int v) const {
  const auto& label = vars_[v].label;
  if (s_ == 1) return "y" + std::to_string(label[0] + 1);
  bool compact = true;
  for (const auto& fac : factors_)
    if (fac.size() > 9) compact = false;
  std::string out = "y";
  if (compact) {
    for (int j = 0; j < s_; ++j) out += std::to_string(label[j] + 1);
    return out;
  }
  out += "(";
  for (int j = 0; j < s_; ++j) {
    if (j) out += ",";
    out += std::to_string(label[j] + 1);
  }
  return out + ")";
}

Presentation build_presentation(const MonomialBasis& b) {
  return Presentation(ProductStructure::single(b));
}

Presentation build_presentation(const ProductStructure& ps) { return Presentation(ps); }

std::size_t YMonomialHash::operator()(const YMonomial& m) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL * (m.size() + 1);
  for (int v : m) {
    std::uint64_t z = h + static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

int ym_compare(const YMonomial& a, const YMonomial& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

Monomial ym_image(const Presentation& p, const YMonomial& m) {
  Monomial r = Monomial::one(p.x_vars());
  for (int v : m) r = r.multiply(p.var(v).image);
  return r;
}

std::string ym_str(const Presentation& p, const YMonomial& m) {
  if (m.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < m.size();) {
    std::size_t run = k;
    while (run < m.size() && m[run] == m[k]) ++run;
    if (k) out << '*';
    out << p.var_name(m[k]);
    if (run - k > 1) out << '^' << (run - k);
    k = run;
  }
  return out.str();
}

std::optional<Binomial> try_binomial(YMonomial a, YMonomial b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  int c = ym_compare(a, b);
  if (c == 0) return std::nullopt;
  if (c < 0) a.swap(b);
  return Binomial{std::move(a), std::move(b)};
}

int binomial_compare(const Binomial& a, const Binomial& b) {
  int c = ym_compare(a.lhs, b.lhs);
  return c ? c : ym_compare(a.rhs, b.rhs);
}

std::string binomial_str(const Presentation& p, const Binomial& b) {
  return ym_str(p, b.lhs) + " - " + ym_str(p, b.rhs);
}

std::vector<Binomial> linear_relations(const Presentation& p) {
  std::vector<Binomial> out;
  for (int c = 0; c < p.class_count(); ++c) {
    const auto& members = p.class_members(c);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        out.push_back(*try_binomial({members[i]}, {members[j]}));
  }
  std::sort(out.begin(), out.end(),
            [](const Binomial& a, const Binomial& b) { return binomial_compare(a, b) < 0; });
  return out;
}

std::vector<Binomial> exchange_relations(const Presentation& p, bool generalized) {
  int V = p.var_count();
  if (V > 2000)
    throw PreconditionViolation("exchange_relations: too many variables to scan pairs");
  int n = p.x_vars();
  auto cmp = [](const Binomial& a, const Binomial& b) { return binomial_compare(a, b) < 0; };
  std::set<Binomial, decltype(cmp)> found(cmp);
  for (int a = 0; a < V; ++a) {
    const Monomial& fa = p.var(a).image;
    for (int b = a; b < V; ++b) {
      const Monomial& fb = p.var(b).image;
      for (int i = 0; i < n; ++i) {
        if (fa.deg(i) == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (i == j || fb.deg(j) == 0) continue;
          if (!generalized && !(fa.deg(i) > fb.deg(i) && fa.deg(j) < fb.deg(j)))
            continue;
          const auto& ts = p.vars_with_image(fa.exchange(i, j));
          if (ts.empty()) continue;
          const auto& us = p.vars_with_image(fb.exchange(j, i));
          for (int t : ts)
            for (int u : us)
              if (auto bin = try_binomial({a, b}, {t, u})) found.insert(std::move(*bin));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

bool differ_in_at_most_one_column(const Presentation& p, const YMonomial& a,
                                  const YMonomial& b) {
  int s = p.factor_count();
  if (s == 1) return true;
  auto stripped = [&](const YMonomial& m, int col) {
    std::vector<std::vector<int>> rows;
    rows.reserve(m.size());
    for (int v : m) {
      std::vector<int> row = p.var(v).label;
      row.erase(row.begin() + col);
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  for (int c = 0; c < s; ++c)
    if (stripped(a, c) == stripped(b, c)) return true;
  return false;
}

namespace {

std::uint64_t multiset_count(std::uint64_t v, int e) {
  // C(v + e - 1, e), saturating well above any practical guard.
  std::uint64_t r = 1;
  for (int k = 1; k <= e; ++k) {
    r = r * (v + e - k) / k;
    if (r > 100'000'000) return r;
  }
  return r;
}

}  // namespace

std::vector<Binomial> single_column_moves(const Presentation& p, int degree_cap) {
  if (degree_cap < 1) throw PreconditionViolation("single_column_moves: cap below 1");
  auto cmp = [](const Binomial& a, const Binomial& b) { return binomial_compare(a, b) < 0; };
  std::set<Binomial, decltype(cmp)> found(cmp);
  int V = p.var_count();
  for (int e = 1; e <= degree_cap; ++e) {
    if (multiset_count(V, e) > 2'000'000)
      throw PreconditionViolation(
          "single_column_moves: too many degree-" + std::to_string(e) + " monomials");
    std::unordered_map<Monomial, std::vector<YMonomial>, MonomialHash> groups;
    YMonomial cur;
    std::function<void(int, Monomial)> rec = [&](int from, Monomial img) {
      if (static_cast<int>(cur.size()) == e) {
        groups[img].push_back(cur);
        return;
      }
      for (int v = from; v < V; ++v) {
        cur.push_back(v);
        rec(v, img.multiply(p.var(v).image));
        cur.pop_back();
      }
    };
    rec(0, Monomial::one(p.x_vars()));
    for (const auto& [img, fib] : groups) {
      for (std::size_t i = 0; i < fib.size(); ++i)
        for (std::size_t j = i + 1; j < fib.size(); ++j)
          if (differ_in_at_most_one_column(p, fib[i], fib[j]))
            found.insert(*try_binomial(fib[i], fib[j]));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace polytoric
