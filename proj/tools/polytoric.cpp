// polytoric: command-line front end.  Machine-readable JSON goes to
// stdout (or --output); human notes and timings go to stderr, so stdout
// is byte-identical across reruns of the same config.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polytoric/basis.hpp"
#include "polytoric/errors.hpp"
#include "polytoric/fiber.hpp"
#include "polytoric/generator.hpp"
#include "polytoric/groebner.hpp"
#include "polytoric/invariants.hpp"
#include "polytoric/io.hpp"
#include "polytoric/monomial.hpp"
#include "polytoric/presentation.hpp"
#include "polytoric/rng.hpp"
#include "polytoric/suites.hpp"
#include "polytoric/transversal.hpp"

using nlohmann::json;
using namespace polytoric;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr std::size_t kListCap = 400;  // longest list a report materializes

struct Opts {
  std::string output;
  int d_max = 3;
  std::uint64_t fiber_cap = 1'000'000;
  std::uint64_t step_cap = 1'000'000;
  std::uint64_t seed = 1;
  int jobs = 1;
};

json base_report(const std::string& command, const Opts& o) {
  json rep;
  rep["tool"] = "polytoric";
  rep["version"] = kVersion;
  rep["command"] = command;
  json cfg;
  cfg["d_max"] = o.d_max;
  cfg["fiber_cap"] = o.fiber_cap;
  cfg["step_cap"] = o.step_cap;
  cfg["seed"] = o.seed;
  rep["config"] = cfg;
  return rep;
}

void emit(const json& rep, const Opts& o) {
  std::string text = rep.dump(2);
  text.push_back('\n');
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    if (!out) throw Error("cannot open output file '" + o.output + "'");
    out << text;
  }
}

json verdict_json(const CheckResult& r) {
  json j;
  j["ok"] = r.ok;
  if (r.witness) {
    json w;
    w["f"] = pretty(r.witness->f);
    w["g"] = pretty(r.witness->g);
    if (r.witness->i >= 0) w["i"] = r.witness->i + 1;
    if (r.witness->j >= 0) w["j"] = r.witness->j + 1;
    j["witness"] = w;
  }
  return j;
}

json order_json(const MonomialOrder& ord) {
  json j;
  switch (ord.kind) {
    case OrderKind::Lex: j["kind"] = "lex"; break;
    case OrderKind::DegLex: j["kind"] = "deglex"; break;
    case OrderKind::DegRevLex: j["kind"] = "degrevlex"; break;
  }
  json ranking = json::array();
  for (int v : ord.vars_by_rank) ranking.push_back(v + 1);
  j["ranking"] = ranking;
  return j;
}

// Listing helper: full list up to the cap, count always exact.
template <typename Seq, typename Fn>
json listing(const Seq& items, Fn&& render) {
  json j;
  j["count"] = items.size();
  json arr = json::array();
  std::size_t shown = 0;
  for (const auto& it : items) {
    if (shown == kListCap) break;
    arr.push_back(render(it));
    ++shown;
  }
  j["items"] = arr;
  j["truncated"] = items.size() > kListCap;
  return j;
}

MonomialOrder make_order(const std::string& kind_name, const std::vector<int>& ranking,
                         int nvars) {
  OrderKind kind;
  if (kind_name == "lex") kind = OrderKind::Lex;
  else if (kind_name == "deglex") kind = OrderKind::DegLex;
  else if (kind_name == "degrevlex") kind = OrderKind::DegRevLex;
  else throw PreconditionViolation("unknown order '" + kind_name + "'");
  if (ranking.empty()) return default_order(nvars, kind);
  if (static_cast<int>(ranking.size()) != nvars)
    throw PreconditionViolation("ranking must list all " + std::to_string(nvars) +
                                " variables");
  std::vector<bool> seen(nvars, false);
  MonomialOrder ord;
  ord.kind = kind;
  for (int v : ranking) {
    if (v < 1 || v > nvars || seen[v - 1])
      throw PreconditionViolation("ranking must be a permutation of 1.." +
                                  std::to_string(nvars));
    seen[v - 1] = true;
    ord.vars_by_rank.push_back(v - 1);
  }
  return ord;
}

MoveKind parse_moves(const std::string& name) {
  if (name == "none" || name == "linear") return MoveKind::None;
  if (name == "proper") return MoveKind::Proper;
  if (name == "generalized") return MoveKind::Generalized;
  if (name == "single-column") return MoveKind::SingleColumn;
  throw PreconditionViolation("unknown move set '" + name + "'");
}

// Set equality between a finished run and an input list, both oriented
// and sorted under the order: true exactly when the run added nothing
// and dropped nothing.
bool gb_equals_input(const BuchbergerResult& gb, const std::vector<Binomial>& rel,
                     const MonomialOrder& ord, int nvars) {
  if (!gb.completed || gb.basis.size() != rel.size()) return false;
  std::vector<GBinomial> want;
  want.reserve(rel.size());
  for (const Binomial& b : rel) {
    Dense l = to_dense(b.lhs, nvars);
    Dense r = to_dense(b.rhs, nvars);
    if (order_compare(l, r, ord) >= 0) want.push_back({std::move(l), std::move(r)});
    else want.push_back({std::move(r), std::move(l)});
  }
  auto less = [&](const GBinomial& a, const GBinomial& b) {
    int c = order_compare(a.lead, b.lead, ord);
    if (c != 0) return c < 0;
    return order_compare(a.tail, b.tail, ord) < 0;
  };
  std::vector<GBinomial> got = gb.basis;
  std::sort(want.begin(), want.end(), less);
  std::sort(got.begin(), got.end(), less);
  return want == got;
}

TransversalStructure need_transversal(const ParsedInput& in, const std::string& cmd) {
  if (in.kind != InputKind::Transversal || !in.transversal)
    throw PreconditionViolation(cmd + " needs a TRANSVERSAL input file");
  return *in.transversal;
}

int run_check(const std::string& path, const Opts& o) {
  ParsedInput in = parse_file(path);
  MonomialBasis b = in.to_structure().flattened();
  CheckResult poly = is_polymatroidal(b);
  CheckResult sym = verify_symmetric_exchange(b);
  CheckResult sep = has_sep(b);
  Profile pr = profile(b);

  json rep = base_report("check", o);
  rep["input"] = path;
  json bj;
  bj["vars"] = b.vars();
  bj["degree"] = b.degree();
  bj["size"] = b.size();
  rep["basis"] = bj;
  rep["polymatroidal"] = verdict_json(poly);
  rep["symmetric_exchange"] = verdict_json(sym);
  rep["sep"] = verdict_json(sep);
  json pj;
  pj["lower"] = pr.lower;
  pj["upper"] = pr.upper;
  rep["profile"] = pj;
  emit(rep, o);
  std::cerr << "polymatroidal=" << (poly.ok ? "true" : "false")
            << " symmetric=" << (sym.ok ? "true" : "false")
            << " sep=" << (sep.ok ? "true" : "false") << "\n";
  return poly.ok ? 0 : 1;
}

int run_exchange(const std::string& path, const Opts& o) {
  ParsedInput in = parse_file(path);
  ProductStructure ps = in.to_structure();
  CheckResult sym = verify_symmetric_exchange(ps.flattened());
  Presentation p = build_presentation(ps);
  std::vector<Binomial> rel = exchange_relations(p, false);

  json rep = base_report("exchange", o);
  rep["input"] = path;
  rep["symmetric_exchange"] = verdict_json(sym);
  rep["relations"] =
      listing(rel, [&](const Binomial& b) { return binomial_str(p, b); });
  emit(rep, o);
  return sym.ok ? 0 : 1;
}

int run_veronese(int n, std::uint64_t d, std::vector<std::uint64_t> lower,
                 std::vector<std::uint64_t> upper, const Opts& o) {
  if (n <= 0) throw PreconditionViolation("--n must be positive");
  if (lower.empty()) lower.assign(static_cast<std::size_t>(n), 0);
  if (upper.empty()) upper.assign(static_cast<std::size_t>(n), d);
  if (lower.size() != static_cast<std::size_t>(n) ||
      upper.size() != static_cast<std::size_t>(n))
    throw PreconditionViolation("--lower/--upper must list exactly n entries");
  MonomialBasis b = veronese_type(n, d, lower, upper);
  std::string text = serialize(b);
  if (o.output.empty()) std::cout << text;
  else {
    std::ofstream out(o.output);
    if (!out) throw Error("cannot open output file '" + o.output + "'");
    out << text;
  }
  std::cerr << "box basis with " << b.size() << " elements\n";
  return 0;
}

int run_product(const std::vector<std::string>& paths, const Opts& o) {
  int n = -1;
  std::vector<std::vector<Monomial>> factors;
  for (const std::string& path : paths) {
    ProductStructure ps = parse_file(path).to_structure();
    if (n < 0) n = ps.vars();
    else if (n != ps.vars())
      throw PreconditionViolation("factor files disagree on the variable count");
    for (const auto& f : ps.factors()) factors.push_back(f);
  }
  ProductStructure out = ProductStructure::from_ordered_factors(n, std::move(factors));
  std::string text = serialize(out);
  if (o.output.empty()) std::cout << text;
  else {
    std::ofstream f(o.output);
    if (!f) throw Error("cannot open output file '" + o.output + "'");
    f << text;
  }
  std::cerr << out.factor_count() << " factors, " << out.label_count()
            << " product variables\n";
  return 0;
}

int run_power(const std::string& path, int k, const Opts& o) {
  if (k < 1) throw PreconditionViolation("--k must be at least 1");
  MonomialBasis b = parse_file(path).to_structure().flattened();
  ProductStructure out = ProductStructure::power(b, k);
  std::string text = serialize(out);
  if (o.output.empty()) std::cout << text;
  else {
    std::ofstream f(o.output);
    if (!f) throw Error("cannot open output file '" + o.output + "'");
    f << text;
  }
  std::cerr << "power " << k << " with " << out.label_count() << " product variables\n";
  return 0;
}

int run_toric(const std::string& path, const Opts& o) {
  ParsedInput in = parse_file(path);
  ProductStructure ps = in.to_structure();
  Presentation p = build_presentation(ps);
  FiberOptions fo{o.fiber_cap};
  std::vector<Binomial> lin = linear_relations(p);
  std::vector<Binomial> prop = exchange_relations(p, false);
  std::vector<Generator> gens = minimal_generators(p, o.d_max, fo);

  json rep = base_report("toric", o);
  rep["input"] = path;
  rep["x_vars"] = p.x_vars();
  rep["factor_count"] = p.factor_count();
  rep["var_count"] = p.var_count();
  rep["class_count"] = p.class_count();
  rep["image_degree"] = p.image_degree();
  std::vector<int> ids(static_cast<std::size_t>(p.var_count()));
  for (int v = 0; v < p.var_count(); ++v) ids[static_cast<std::size_t>(v)] = v;
  rep["variables"] = listing(ids, [&](int v) {
    json j;
    j["name"] = p.var_name(v);
    j["image"] = pretty(p.var(v).image);
    return j;
  });
  rep["linear_relations"] =
      listing(lin, [&](const Binomial& b) { return binomial_str(p, b); });
  rep["exchange_relation_count"] = prop.size();
  rep["generators"] = listing(gens, [&](const Generator& g) {
    json j;
    j["degree"] = g.degree;
    j["text"] = binomial_str(p, g.binomial);
    return j;
  });
  emit(rep, o);
  std::cerr << p.var_count() << " variables, " << gens.size()
            << " generators up to degree " << o.d_max << "\n";
  return 0;
}

int run_white(const std::string& path, const std::string& moves, const Opts& o) {
  ParsedInput in = parse_file(path);
  Presentation p = build_presentation(in.to_structure());
  WhiteReport wr = white_check(p, parse_moves(moves), o.d_max, FiberOptions{o.fiber_cap});

  json rep = base_report("white", o);
  rep["input"] = path;
  rep["pass"] = wr.pass;
  rep["moves"] = wr.moves;
  rep["fiber_domain"] = wr.fiber_domain;
  rep["d_max"] = wr.d_max;
  json degrees = json::array();
  for (const DegreeStats& ds : wr.degrees) {
    json j;
    j["degree"] = ds.degree;
    j["fibers"] = ds.fibers;
    j["nontrivial"] = ds.nontrivial;
    j["largest"] = ds.largest;
    j["disconnected"] = ds.disconnected;
    degrees.push_back(j);
  }
  rep["degrees"] = degrees;
  if (wr.failure) {
    json f;
    f["degree"] = wr.failure->degree;
    f["target"] = wr.failure->target;
    f["separated"] = wr.failure->separated;
    rep["failure"] = f;
  }
  emit(rep, o);
  std::cerr << (wr.pass ? "pass" : "FAIL") << " under " << wr.moves << " up to degree "
            << wr.d_max << "\n";
  return wr.pass ? 0 : 1;
}

int run_groebner(const std::string& path, const std::string& order_name,
                 const std::vector<int>& ranking, bool search, int attempts,
                 const Opts& o) {
  ParsedInput in = parse_file(path);
  Presentation p = build_presentation(in.to_structure());
  FiberOptions fo{o.fiber_cap};
  std::vector<Generator> mg = minimal_generators(p, o.d_max, fo);
  std::vector<Binomial> gens;
  gens.reserve(mg.size());
  for (const Generator& g : mg) gens.push_back(g.binomial);

  json rep = base_report("groebner", o);
  rep["input"] = path;
  rep["generators"] = listing(mg, [&](const Generator& g) {
    json j;
    j["degree"] = g.degree;
    j["text"] = binomial_str(p, g.binomial);
    return j;
  });

  if (search) {
    QuadraticSearch qs =
        search_quadratic(gens, p.var_count(), attempts, o.seed, o.step_cap);
    json sj;
    sj["found"] = qs.found;
    sj["attempts"] = qs.attempts;
    if (qs.found) {
      sj["order"] = order_json(qs.order);
      sj["basis"] =
          listing(qs.gb.basis, [&](const GBinomial& g) { return gb_str(p, g); });
      sj["quadratic"] = true;
    }
    rep["search"] = sj;
    emit(rep, o);
    std::cerr << (qs.found ? "quadratic order found" : "no quadratic order found")
              << " after " << qs.attempts << " attempts\n";
    return qs.found ? 0 : 1;
  }

  MonomialOrder ord = make_order(order_name, ranking, p.var_count());
  BuchbergerResult gb = buchberger(gens, ord, p.var_count(), o.step_cap);
  rep["order"] = order_json(ord);
  json gj;
  gj["completed"] = gb.completed;
  gj["steps"] = gb.steps;
  gj["quadratic"] = is_quadratic(gb);
  gj["basis"] = listing(gb.basis, [&](const GBinomial& g) { return gb_str(p, g); });
  rep["groebner"] = gj;
  if (!gb.completed) {
    emit(rep, o);
    std::cerr << "basis computation hit the step cap\n";
    return 3;
  }
  CertifyResult cert = certify_generation(p, gens, ord, o.d_max, fo, o.step_cap);
  json cj;
  cj["ok"] = cert.ok;
  cj["degree_checked"] = cert.degree_checked;
  if (cert.counterexample) cj["counterexample"] = *cert.counterexample;
  rep["certify"] = cj;
  if (!cert.completed) {
    emit(rep, o);
    return 3;
  }
  if (!cert.ok)
    throw InternalInconsistency("degree-bounded generators failed certification: " +
                                cert.counterexample.value_or("no counterexample text"));
  emit(rep, o);
  std::cerr << "basis of " << gb.basis.size() << " elements, certified to degree "
            << cert.degree_checked << "\n";
  return 0;
}

int run_hibi(const std::string& path, const Opts& o) {
  TransversalStructure t = need_transversal(parse_file(path), "hibi");
  Presentation p = build_presentation(t.to_product());
  std::vector<Binomial> rel = hibi_relations(p);
  MonomialOrder ord = hibi_order(p.var_count());
  BuchbergerResult gb = buchberger(rel, ord, p.var_count(), o.step_cap);
  bool closed = gb_equals_input(gb, rel, ord, p.var_count());

  json rep = base_report("hibi", o);
  rep["input"] = path;
  rep["var_count"] = p.var_count();
  rep["relations"] =
      listing(rel, [&](const Binomial& b) { return binomial_str(p, b); });
  json gj;
  gj["completed"] = gb.completed;
  gj["steps"] = gb.steps;
  gj["size"] = gb.basis.size();
  rep["groebner"] = gj;
  rep["closed"] = closed;
  emit(rep, o);
  std::cerr << rel.size() << " lattice relations, "
            << (closed ? "closed under S-pairs" : "NOT closed") << "\n";
  if (!gb.completed) return 3;
  return closed ? 0 : 1;
}

int run_trans_gb(const std::string& path, const Opts& o) {
  TransversalStructure t = need_transversal(parse_file(path), "trans-gb");
  SubstituteResult sub = substitute_linear(t);
  Presentation p = build_presentation(sub.structure.to_product());
  MonomialOrder ord = hibi_order(p.var_count());
  BuchbergerResult gb = buchberger(sub.relations, ord, p.var_count(), o.step_cap);
  bool closed = gb_equals_input(gb, sub.relations, ord, p.var_count());
  bool quad = is_quadratic(gb);

  std::vector<Binomial> full = sub.relations;
  full.push_back(sub.linear);
  int cert_d = std::min(o.d_max, 3);
  CertifyResult cert =
      certify_generation(p, full, ord, cert_d, FiberOptions{o.fiber_cap}, o.step_cap);

  json rep = base_report("trans-gb", o);
  rep["input"] = path;
  rep["structure"] = serialize(sub.structure);
  rep["position_map"] = sub.position_map;
  rep["linear"] = binomial_str(p, sub.linear);
  rep["relations"] =
      listing(sub.relations, [&](const Binomial& b) { return binomial_str(p, b); });
  json gj;
  gj["completed"] = gb.completed;
  gj["steps"] = gb.steps;
  gj["size"] = gb.basis.size();
  gj["quadratic"] = quad;
  rep["groebner"] = gj;
  rep["closed"] = closed;
  json cj;
  cj["ok"] = cert.ok;
  cj["degree_checked"] = cert.degree_checked;
  if (cert.counterexample) cj["counterexample"] = *cert.counterexample;
  rep["certify"] = cj;
  emit(rep, o);
  std::cerr << "substituted relations: " << sub.relations.size() << ", "
            << (closed ? "closed" : "NOT closed") << ", "
            << (quad ? "quadratic" : "not quadratic") << "\n";
  if (!gb.completed || !cert.completed) return 3;
  return (closed && quad && cert.ok) ? 0 : 1;
}

int run_hilbert(const std::string& path, int max_degree, const Opts& o) {
  MonomialBasis b = parse_file(path).to_structure().flattened();
  std::vector<std::uint64_t> hf = hilbert_function(b, max_degree);
  int dim = krull_dim(b);
  HVector hv = h_vector(b, max_degree);

  json rep = base_report("hilbert", o);
  rep["input"] = path;
  rep["max_degree"] = max_degree;
  rep["values"] = hf;
  rep["dim"] = dim;
  rep["h"] = hv.h;
  rep["palindromic"] = is_palindromic(hv.h);
  emit(rep, o);
  std::cerr << "dim " << dim << ", h-vector of length " << hv.h.size() << "\n";
  return 0;
}

int run_rees(const std::string& path, int cap_x, int cap_y, const Opts& o) {
  Presentation p = build_presentation(parse_file(path).to_structure());
  ReesOptions ro;
  ro.cap_x = cap_x;
  ro.cap_y = cap_y;
  ro.fiber_cap = o.fiber_cap;
  ReesResult rr = rees_bidegrees(p, ro);

  json rep = base_report("rees", o);
  rep["input"] = path;
  rep["cap_x"] = rr.cap_x;
  rep["cap_y"] = rr.cap_y;
  rep["has_linear_ydeg"] = rr.has_linear_ydeg;
  json bid = json::array();
  for (const ReesGenerator& g : rr.gens) bid.push_back({g.a, g.b});
  rep["bidegrees"] = bid;
  rep["generators"] = listing(rr.gens, [&](const ReesGenerator& g) {
    json j;
    j["a"] = g.a;
    j["b"] = g.b;
    j["text"] = g.text;
    return j;
  });
  emit(rep, o);
  std::cerr << rr.gens.size() << " generators within caps (" << cap_x << ", " << cap_y
            << ")\n";
  return 0;
}

int run_gorenstein(const std::string& path, int max_degree, const Opts& o) {
  TransversalStructure t = need_transversal(parse_file(path), "gorenstein");
  GorensteinEvidence ev = gorenstein_evidence(t, max_degree);

  json rep = base_report("gorenstein", o);
  rep["input"] = path;
  rep["max_degree"] = max_degree;
  rep["dim"] = ev.dim;
  rep["h"] = ev.h;
  rep["palindromic"] = ev.palindromic;
  emit(rep, o);
  std::cerr << (ev.palindromic ? "palindromic h-vector" : "h-vector NOT palindromic")
            << "\n";
  return ev.palindromic ? 0 : 1;
}

int run_random(const std::string& kind, int count, int n, int d, int s,
               const std::string& dir, const std::string& prefix, const Opts& o) {
  if (count < 0) throw PreconditionViolation("--count must be nonnegative");
  GeneratorLimits lim;
  if (n > 0) lim.max_vars = n;
  if (d > 0) lim.max_degree = static_cast<std::uint64_t>(d);
  if (s > 0) lim.max_factors = s;
  SplitMix64 root(o.seed);

  json files = json::array();
  for (int i = 0; i < count; ++i) {
    SplitMix64 rng = root.fork(static_cast<std::uint64_t>(i));
    std::string text, ext;
    if (kind == "veronese") {
      text = serialize(random_veronese(rng, lim, n > 0 ? n : -1));
      ext = ".basis";
    } else if (kind == "product") {
      text = serialize(random_sep_product(rng, lim));
      ext = ".product";
    } else if (kind == "polymatroidal") {
      text = serialize(random_polymatroidal(rng, lim, n > 0 ? n : -1));
      ext = ".basis";
    } else if (kind == "transversal") {
      text = serialize(random_transversal(rng, lim));
      ext = ".trans";
    } else {
      throw PreconditionViolation("unknown kind '" + kind + "'");
    }
    std::string path = dir + "/" + prefix + std::to_string(i) + ext;
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "'");
    out << text;
    files.push_back(path);
  }

  json rep = base_report("random", o);
  rep["kind"] = kind;
  rep["count"] = count;
  rep["files"] = files;
  emit(rep, o);
  std::cerr << "wrote " << count << " instance files\n";
  return 0;
}

int run_corpus(const std::string& suite, int instances, const Opts& o) {
  std::vector<SuiteResult> results;
  if (suite == "all") results = run_all_suites(o.seed, instances);
  else results.push_back(run_suite(suite, instances, o.seed));

  bool all_pass = true;
  std::uint64_t total_failures = 0;
  json arr = json::array();
  std::optional<std::string> reproducer;
  for (const SuiteResult& r : results) {
    json j;
    j["name"] = r.name;
    j["instances"] = r.instances;
    j["failures"] = r.failures;
    j["pass"] = r.pass();
    j["notes"] = r.notes;
    arr.push_back(j);
    all_pass = all_pass && r.pass();
    total_failures += static_cast<std::uint64_t>(r.failures);
    if (!r.pass() && !reproducer && !r.notes.empty()) {
      std::string path = r.name + "-reproducer.txt";
      std::ofstream out(path);
      if (out) {
        for (const std::string& note : r.notes) out << note << "\n";
        reproducer = path;
      }
    }
    std::cerr << r.name << ": " << (r.instances - r.failures) << "/" << r.instances
              << " pass\n";
  }

  json rep = base_report("corpus", o);
  rep["suite"] = suite;
  rep["suites"] = arr;
  rep["pass"] = all_pass;
  rep["total_failures"] = total_failures;
  if (reproducer) rep["reproducer"] = *reproducer;
  emit(rep, o);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for monomial exchange bases and their toric presentations"};
  app.require_subcommand(1);

  Opts o;
  app.add_option("--seed", o.seed, "PRNG seed; fixes every random draw")
      ->capture_default_str();
  app.add_option("--output", o.output, "write the JSON report to this file");
  app.add_option("--d-max", o.d_max, "degree bound for fiber sweeps")
      ->capture_default_str();
  app.add_option("--fiber-cap", o.fiber_cap, "largest fiber enumerated")
      ->capture_default_str();
  app.add_option("--step-cap", o.step_cap, "S-pair budget for basis completion")
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "worker bound (runs are sequential either way)")
      ->capture_default_str();

  std::string in_path;
  auto* c_check = app.add_subcommand("check", "exchange-property verdicts for an input");
  c_check->add_option("input", in_path, "basis/product/transversal file")->required();
  c_check->fallthrough();

  auto* c_exchange =
      app.add_subcommand("exchange", "symmetric exchange verdict and degree-2 relations");
  c_exchange->add_option("input", in_path)->required();
  c_exchange->fallthrough();

  int v_n = 0;
  std::uint64_t v_d = 1;
  std::vector<std::uint64_t> v_lower, v_upper;
  auto* c_veronese = app.add_subcommand("veronese", "construct a box basis file");
  c_veronese->add_option("--n", v_n, "variable count")->required();
  c_veronese->add_option("--d", v_d, "common degree")->required();
  c_veronese->add_option("--lower", v_lower, "entrywise lower bounds (default all 0)")
      ->delimiter(',');
  c_veronese->add_option("--upper", v_upper, "entrywise upper bounds (default all d)")
      ->delimiter(',');
  c_veronese->fallthrough();

  std::vector<std::string> prod_paths;
  auto* c_product = app.add_subcommand("product", "combine factor files into a product");
  c_product->add_option("inputs", prod_paths, "factor files")->required()->expected(-1);
  c_product->fallthrough();

  int pow_k = 2;
  auto* c_power = app.add_subcommand("power", "k-fold product of one basis");
  c_power->add_option("input", in_path)->required();
  c_power->add_option("--k", pow_k, "exponent")->capture_default_str();
  c_power->fallthrough();

  auto* c_toric =
      app.add_subcommand("toric", "presentation summary and degree-bounded generators");
  c_toric->add_option("input", in_path)->required();
  c_toric->fallthrough();

  std::string moves = "proper";
  auto* c_white = app.add_subcommand("white", "fiber connectivity under a move set");
  c_white->add_option("input", in_path)->required();
  c_white->add_option("--moves", moves, "none|linear|proper|generalized|single-column")
      ->capture_default_str();
  c_white->fallthrough();

  std::string order_name = "degrevlex";
  std::vector<int> ranking;
  bool search_flag = false;
  int attempts = 24;
  auto* c_groebner = app.add_subcommand("groebner", "binomial basis completion");
  c_groebner->add_option("input", in_path)->required();
  c_groebner->add_option("--order", order_name, "lex|deglex|degrevlex")
      ->capture_default_str();
  c_groebner->add_option("--ranking", ranking, "variable permutation, largest first")
      ->delimiter(',');
  c_groebner->add_flag("--search-quadratic", search_flag,
                       "look for an order with a quadratic reduced basis");
  c_groebner->add_option("--attempts", attempts, "orders tried by the search")
      ->capture_default_str();
  c_groebner->fallthrough();

  auto* c_hibi = app.add_subcommand("hibi", "lattice relations of a transversal input");
  c_hibi->add_option("input", in_path)->required();
  c_hibi->fallthrough();

  auto* c_trans = app.add_subcommand("trans-gb",
                                     "deduplicate one linear relation, then complete");
  c_trans->add_option("input", in_path)->required();
  c_trans->fallthrough();

  int max_degree = 12;
  auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert function, dimension, h-vector");
  c_hilbert->add_option("input", in_path)->required();
  c_hilbert->add_option("--max-degree", max_degree, "values computed up to this degree")
      ->capture_default_str();
  c_hilbert->fallthrough();

  int cap_x = 2, cap_y = 3;
  auto* c_rees = app.add_subcommand("rees", "bidegrees of the blowup relations");
  c_rees->add_option("input", in_path)->required();
  c_rees->add_option("--cap-x", cap_x, "largest x-degree swept")->capture_default_str();
  c_rees->add_option("--cap-y", cap_y, "largest y-degree swept")->capture_default_str();
  c_rees->fallthrough();

  auto* c_goren = app.add_subcommand("gorenstein", "palindrome evidence for a transversal");
  c_goren->add_option("input", in_path)->required();
  c_goren->add_option("--max-degree", max_degree)->capture_default_str();
  c_goren->fallthrough();

  std::string rand_kind = "product", rand_dir = ".", rand_prefix = "instance-";
  int rand_count = 1, rand_n = 0, rand_d = 0, rand_s = 0;
  auto* c_random = app.add_subcommand("random", "write seeded instance files");
  c_random->add_option("--kind", rand_kind, "veronese|product|polymatroidal|transversal")
      ->capture_default_str();
  c_random->add_option("--count", rand_count)->capture_default_str();
  c_random->add_option("--n", rand_n, "variable count (0 = free)");
  c_random->add_option("--d", rand_d, "degree bound (0 = default)");
  c_random->add_option("--s", rand_s, "factor bound (0 = default)");
  c_random->add_option("--dir", rand_dir)->capture_default_str();
  c_random->add_option("--prefix", rand_prefix)->capture_default_str();
  c_random->fallthrough();

  std::string suite = "all";
  int instances = -1;
  auto* c_corpus = app.add_subcommand("corpus", "randomized property suites");
  c_corpus->add_option("--suite", suite, "all or one suite name")->capture_default_str();
  c_corpus->add_option("--instances", instances,
                       "instances per suite (-1 = suite default, 0 = none)")
      ->capture_default_str();
  c_corpus->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (o.jobs != 1)
    std::cerr << "note: --jobs accepted; instances run sequentially and merge by index\n";

  auto t0 = std::chrono::steady_clock::now();
  try {
    int code = 4;
    if (app.got_subcommand(c_check)) code = run_check(in_path, o);
    else if (app.got_subcommand(c_exchange)) code = run_exchange(in_path, o);
    else if (app.got_subcommand(c_veronese))
      code = run_veronese(v_n, v_d, v_lower, v_upper, o);
    else if (app.got_subcommand(c_product)) code = run_product(prod_paths, o);
    else if (app.got_subcommand(c_power)) code = run_power(in_path, pow_k, o);
    else if (app.got_subcommand(c_toric)) code = run_toric(in_path, o);
    else if (app.got_subcommand(c_white)) code = run_white(in_path, moves, o);
    else if (app.got_subcommand(c_groebner))
      code = run_groebner(in_path, order_name, ranking, search_flag, attempts, o);
    else if (app.got_subcommand(c_hibi)) code = run_hibi(in_path, o);
    else if (app.got_subcommand(c_trans)) code = run_trans_gb(in_path, o);
    else if (app.got_subcommand(c_hilbert)) code = run_hilbert(in_path, max_degree, o);
    else if (app.got_subcommand(c_rees)) code = run_rees(in_path, cap_x, cap_y, o);
    else if (app.got_subcommand(c_goren)) code = run_gorenstein(in_path, max_degree, o);
    else if (app.got_subcommand(c_random))
      code = run_random(rand_kind, rand_count, rand_n, rand_d, rand_s, rand_dir,
                        rand_prefix, o);
    else if (app.got_subcommand(c_corpus)) code = run_corpus(suite, instances, o);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "[polytoric] finished in " << ms << " ms\n";
    return code;
  } catch (const polytoric::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const FiberTooLarge& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const Timeout& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const NotStabilized& e) {
    std::cerr << "resource cap: " << e.what() << " (try a larger --max-degree)\n";
    return 3;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 4;
  }
}
