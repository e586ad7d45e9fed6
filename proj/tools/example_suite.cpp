#include "example_suite.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <functional>
#include <iomanip>
#include <sstream>

#include "asc/checker.hpp"
#include "asc/endo.hpp"
#include "asc/error.hpp"
#include "asc/homology.hpp"

namespace asc {

namespace {

using Names = std::vector<std::string>;

std::string join(const Names& v, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// Optional members only, for compact subset descriptions.
std::string describe(const Names& members) {
  Names extra;
  for (const auto& m : members)
    if (m.size() < 2 || m[0] != 'P' || m.find('/') != std::string::npos) extra.push_back(m);
  return extra.empty() ? "{proj}" : "{proj+" + join(extra, "+") + "}";
}

std::string describe_all(const std::vector<Names>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? " " : "") + describe(sets[i]);
  return out.empty() ? "none" : out;
}

Names with_proj(Names extra) {
  Names out{"P1", "P2", "P3", "P4"};
  out.insert(out.end(), extra.begin(), extra.end());
  std::sort(out.begin(), out.end());
  return out;
}

AddCategory by_names(const SubcatContext& ctx, const Names& names) {
  std::vector<Module> parts;
  for (const auto& n : names) {
    auto it = std::find(ctx.names.begin(), ctx.names.end(), n);
    if (it == ctx.names.end()) throw ContractViolation("context has no member " + n);
    parts.push_back(ctx.indecomposables[static_cast<std::size_t>(it - ctx.names.begin())]);
  }
  return AddCategory(parts);
}

std::vector<std::pair<int, int>> arrow_pattern(const AlgebraPtr& a) {
  std::vector<std::pair<int, int>> out;
  for (const auto& ar : a->arrows()) out.emplace_back(ar.source, ar.target);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> cartan(const AlgebraPtr& a) {
  std::vector<std::size_t> out;
  const int k = static_cast<int>(a->vertex_count());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.push_back(hom_dim(projective(a, i), projective(a, j)));
  return out;
}

struct Setup {
  AlgebraPtr lambda = compile(preprojective(3));
  SubcatContext ctx = ambient_context(lambda);
  Module q = cokernel(socle(projective(lambda, 1)).inclusion).module;
  AddCategory m{std::vector<Module>{projective(lambda, 0), projective(lambda, 1), projective(lambda, 2), q}};
  EndoPackage pkg = endomorphism_algebra(m.parts());
};

struct GammaSetup {
  AlgebraPtr gamma;
  SubcatContext gp;
};

BoundQuiverAlgebra gamma_presentation(bool corrupt) {
  BoundQuiverAlgebra b = gamma_bound_quiver();
  if (corrupt) b.relations.pop_back();
  return b;
}

GammaSetup make_gamma(bool corrupt) {
  GammaSetup g;
  g.gamma = compile(gamma_presentation(corrupt));
  std::vector<Module> seeds;
  for (int i = 0; i < static_cast<int>(g.gamma->vertex_count()); ++i) {
    seeds.push_back(simple(g.gamma, i));
    seeds.push_back(radical(projective(g.gamma, i)).module);
  }
  g.gp = gorenstein_projective_context(g.gamma, seeds);
  return g;
}

class Detail {
 public:
  // Records a named check; the criterion passes iff every check passes.
  void check(bool ok, const std::string& what) {
    all_ &= ok;
    parts_.push_back((ok ? "" : "FAILED ") + what);
  }
  void note(const std::string& what) { parts_.push_back(what); }
  bool ok() const { return all_; }
  std::string str() const { return join(parts_, "; "); }

 private:
  bool all_ = true;
  Names parts_;
};

CriterionResult c1() {
  // Oracle: dim e_j Pi(A_n) e_i = min(i, j, n+1-i, n+1-j), 1-based.
  const int n = 3;
  std::vector<std::size_t> oracle;
  for (int i = 1; i <= n; ++i) {
    std::size_t d = 0;
    for (int j = 1; j <= n; ++j) d += static_cast<std::size_t>(std::min({i, j, n + 1 - i, n + 1 - j}));
    oracle.push_back(d);
  }
  Detail d;
  auto a = compile(preprojective(n));
  d.check(a->dim() == 10, "dim " + std::to_string(a->dim()));
  d.check(is_selfinjective(a), "selfinjective");
  auto dec = decompose(regular(a));
  std::vector<std::size_t> dims;
  bool proj = true;
  for (const auto& p : dec.parts) {
    for (std::size_t k = 0; k < p.multiplicity; ++k) dims.push_back(p.module.dim());
    proj = proj && is_projective(p.module);
  }
  std::vector<std::size_t> by_vertex;
  for (int i = 0; i < n; ++i) by_vertex.push_back(projective(a, i).dim());
  std::sort(dims.begin(), dims.end());
  std::vector<std::size_t> expected{3, 3, 4};
  d.check(dims == expected && proj, "regular module splits into projectives of dims 3, 4, 3");
  d.check(by_vertex == oracle && by_vertex == std::vector<std::size_t>{3, 4, 3},
          "projective dims by vertex agree with the path count");
  return {1, "Pi(A3) build", d.ok(), d.str()};
}

CriterionResult c2(const Setup& s) {
  Detail d;
  auto r = is_precluster_IS(s.m, 2);
  for (const char* c : {"(i)", "(ii)", "(iii)", "(iv)"}) {
    const Condition* cond = r.find(c);
    d.check(cond && cond->verdict == Verdict::Pass, std::string(c) + " " + (cond ? to_string(cond->verdict) : "?"));
  }
  d.check(r.passed(), "M = Lambda + P2/soc is 2-precluster tilting: " + to_string(r.verdict));
  return {2, "2-precluster example", d.ok(), d.str()};
}

CriterionResult c3(const Setup& s) {
  Detail d;
  Module s2 = simple(s.lambda, 1);
  Module msum = s.m.sum();
  std::size_t e_ms = ext(msum, s2, 1), e_sm = ext(s2, msum, 1);
  d.check(e_ms == 0, "dim Ext^1(M, S2) = " + std::to_string(e_ms));
  d.check(e_sm == 0, "dim Ext^1(S2, M) = " + std::to_string(e_sm));
  d.check(!s.m.contains(s2), "S2 not in add M");
  auto r = is_cluster_tilting(s.m, s.ctx, 2);
  std::string w = r.conditions.empty() ? "" : r.conditions[0].witness;
  d.check(r.verdict == Verdict::Fail && w.rfind("S2 ", 0) == 0,
          "not 2-cluster tilting: " + to_string(r.verdict) + ", witness: " + w);
  return {3, "non-cluster witness", d.ok(), d.str()};
}

CriterionResult c4(const Setup& s, const std::function<AlgebraPtr()>& gamma) {
  Detail d;
  const AlgebraPtr& e = s.pkg.endo;
  auto mag = is_min_AG_algebra(e, 2);
  auto id = injective_dimension(regular(e));
  auto dom = dominant_dimension(e);
  d.check(mag.passed(), "End(M) 2-minimal Auslander-Gorenstein: " + to_string(mag.verdict));
  d.check(id.at_most(3) == true && !id.certificate.empty(), "id " + id.to_string());
  d.check(dom.at_least(3) == true, "domdim " + dom.to_string());
  d.check(e->vertex_count() == 4, std::to_string(e->vertex_count()) + " simples");
  std::size_t e1 = 0, e2 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto x = ext_range(simple(e, i), simple(e, j), 2);
      e1 += x[1];
      e2 += x[2];
    }
  d.check(e1 == 5, "sum dim Ext^1(Si,Sj) = " + std::to_string(e1));
  d.check(e2 == 4, "sum dim Ext^2(Si,Sj) = " + std::to_string(e2));
  d.check(is_isomorphic(syzygy(simple(e, 0), 2), simple(e, 0)), "Omega^2 S1 = S1");
  auto gl = global_dimension(e);
  d.check(gl.status == DimensionVerdict::Status::Infinite, "gldim " + gl.to_string());
  // The presentation by quiver and relations must match End(M).
  try {
    AlgebraPtr g = gamma();
    bool same = g->dim() == e->dim() && arrow_pattern(g) == arrow_pattern(e) && cartan(g) == cartan(e);
    d.check(same, "presentation matches End(M) (dim " + std::to_string(g->dim()) + ", quiver, Cartan matrix)");
  } catch (const Error& err) {
    d.check(false, std::string("presentation does not compile: ") + err.what());
  }
  return {4, "endomorphism algebra", d.ok(), d.str()};
}

CriterionResult c5(const GammaSetup& g) {
  Detail d;
  const auto& a = g.gamma;
  std::vector<std::pair<std::string, Module>> pool;
  for (int i = 0; i < 4; ++i) {
    const std::string v = std::to_string(i + 1);
    pool.emplace_back("P" + v, projective(a, i));
    pool.emplace_back("S" + v, simple(a, i));
    pool.emplace_back("JP" + v, radical(projective(a, i)).module);
  }
  Names passing, undecided;
  for (const auto& [name, x] : pool) {
    auto v = is_gorenstein_projective(x);
    if (!v) undecided.push_back(name);
    else if (*v) passing.push_back(name);
  }
  std::sort(passing.begin(), passing.end());
  Names expected{"JP1", "JP3", "P1", "P2", "P3", "P4", "S1", "S3"};
  d.check(undecided.empty(), "undecided: " + (undecided.empty() ? "none" : join(undecided)));
  d.check(passing == expected, "Gorenstein projective: " + join(passing));
  return {5, "Gorenstein projectives", d.ok(), d.str()};
}

CriterionResult c6(const GammaSetup& g) {
  Detail d;
  auto names = [](const std::vector<CheckReport>& rs) {
    std::vector<Names> out;
    for (const auto& r : rs) out.push_back(r.members);
    return out;
  };
  auto diff = [](const std::vector<Names>& a, const std::vector<Names>& b) {
    std::vector<Names> out;
    for (const auto& x : a)
      if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
    return out;
  };
  std::vector<Names> listed1{with_proj({"JP1", "S1"}), with_proj({"JP3", "S3"})};
  std::vector<Names> listed2{with_proj({"S1"}),       with_proj({"JP1"}), with_proj({"S1", "S3"}),
                             with_proj({"S3"}),       with_proj({"JP3"}), with_proj({"JP1", "JP3"})};
  auto r1 = names(enumerate_precluster(g.gp, 1));
  auto r2 = names(enumerate_precluster(g.gp, 2));
  auto check_list = [&](std::size_t n, const std::vector<Names>& got, const std::vector<Names>& listed) {
    auto extra = diff(got, listed), missing = diff(listed, got);
    d.check(extra.empty() && missing.empty(), "n=" + std::to_string(n) + ": " + std::to_string(got.size()) +
                                                  " subsets, missing " + describe_all(missing) + ", extra " +
                                                  describe_all(extra));
  };
  check_list(1, r1, listed1);
  check_list(2, r2, listed2);
  std::vector<Names> ct;
  for (const auto& l : listed2)
    if (is_cluster_tilting(by_names(g.gp, l), g.gp, 2).passed()) ct.push_back(l);
  d.check(ct.size() == 2, "2-cluster tilting among the six: " + describe_all(ct));
  std::vector<Names> ct_all;
  for (const auto& l : r2)
    if (is_cluster_tilting(by_names(g.gp, l), g.gp, 2).passed()) ct_all.push_back(l);
  d.note("2-cluster tilting among all results: " + describe_all(ct_all));
  return {6, "precluster tables", d.ok(), d.str()};
}

CriterionResult c7(const Setup& s, const GammaSetup& g) {
  Detail d;
  const auto& ctx = s.ctx;
  // a. Hom(M,-)-exact and Hom(-,tau M)-exact sequences coincide.
  {
    AddCategory taum = AddCategory::of(tau(s.m.sum()));
    std::size_t seqs = 0, agree = 0;
    for (const auto& x : ctx.indecomposables)
      for (const auto& y : ctx.indecomposables)
        for (const auto& e : ext1_basis(x, y)) {
          ++seqs;
          agree += is_hom_exact_from(s.m, e.left(), e.middle(), e.right()) ==
                   is_hom_exact_to(taum, e.left(), e.middle(), e.right());
        }
    d.check(seqs > 0 && agree == seqs,
            "a: F_M = F^{tau M} on " + std::to_string(agree) + "/" + std::to_string(seqs) + " extensions");
  }
  // b. Hom and Ext up to degree 4 transfer along Hom(M,-).
  {
    std::vector<Module> img;
    for (const auto& x : ctx.indecomposables) img.push_back(hom_functor(s.pkg, x));
    std::size_t pairs = 0, agree = 0;
    for (std::size_t a = 0; a < ctx.size(); ++a)
      for (std::size_t b = 0; b < ctx.size(); ++b) {
        ++pairs;
        agree += ext_range(img[a], img[b], 4) == rel_ext_range(ctx.indecomposables[a], ctx.indecomposables[b], s.m, 4);
      }
    d.check(agree == pairs, "b: Hom/Ext^{<=4} transfer on " + std::to_string(agree) + "/" + std::to_string(pairs) +
                                " pairs");
  }
  // c. Perp symmetry plus (a)-(d) is equivalent to precluster for n = 2.
  {
    struct Survey {
      std::size_t total = 0, agree = 0, pass = 0;
      std::string str() const {
        return std::to_string(agree) + "/" + std::to_string(total) + " subsets (" + std::to_string(pass) +
               " precluster)";
      }
    };
    auto survey = [&](const SubcatContext& c) {
      std::vector<std::size_t> forced = c.projective_members;
      forced.insert(forced.end(), c.injective_members.begin(), c.injective_members.end());
      std::sort(forced.begin(), forced.end());
      forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
      std::vector<std::size_t> pool;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!std::binary_search(forced.begin(), forced.end(), k)) pool.push_back(k);
      Survey sv;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
        std::vector<Module> parts;
        for (std::size_t k : forced) parts.push_back(c.indecomposables[k]);
        for (std::size_t b = 0; b < pool.size(); ++b)
          if (mask >> b & 1) parts.push_back(c.indecomposables[pool[b]]);
        AddCategory m(parts);
        auto sub = is_precluster_subcat(m, c, 2, false, kDefaultCap, true);
        Verdict sym = symmetric_orthogonality(m, c, 2).verdict;
        for (const char* k : {"(a)", "(b)", "(c)", "(d)"}) sym = combine(sym, sub.find(k)->verdict);
        ++sv.total;
        sv.agree += sym == sub.verdict;
        sv.pass += sub.passed();
      }
      return sv;
    };
    Survey amb = survey(ctx), gp = survey(g.gp);
    d.check(amb.agree == amb.total && gp.agree == gp.total,
            "c: perp symmetry <=> precluster, ambient " + amb.str() + ", GP " + gp.str());
  }
  // d. Inside the left relative perpendicular of M, relative projectives and
  // relative injectives are exactly add M.
  {
    std::vector<std::size_t> perp;
    for (std::size_t k = 0; k < ctx.size(); ++k) {
      bool in = true;
      for (const auto& p : s.m.parts()) in = in && rel_ext(ctx.indecomposables[k], p, s.m, 1) == 0;
      if (in) perp.push_back(k);
    }
    Names proj, inj, addm;
    for (std::size_t x : perp) {
      bool p = true, i = true;
      for (std::size_t y : perp) {
        p = p && rel_ext(ctx.indecomposables[x], ctx.indecomposables[y], s.m, 1) == 0;
        i = i && rel_ext(ctx.indecomposables[y], ctx.indecomposables[x], s.m, 1) == 0;
      }
      if (p) proj.push_back(ctx.names[x]);
      if (i) inj.push_back(ctx.names[x]);
      if (s.m.contains(ctx.indecomposables[x])) addm.push_back(ctx.names[x]);
    }
    std::sort(proj.begin(), proj.end());
    std::sort(inj.begin(), inj.end());
    std::sort(addm.begin(), addm.end());
    d.check(proj == addm && inj == addm && addm.size() == s.m.size(),
            "d: relative projectives " + join(proj) + ", injectives " + join(inj));
  }
  // e. Hom(M,-) keeps injectives injective and End(M) has domdim >= 2, for
  // several generator-cogenerators.
  {
    auto lin = compile(linear_quiver(3));
    auto dn = dual_numbers();
    std::vector<std::pair<std::string, Module>> cases{
        {"Pi(A3): Lambda + P2/soc", s.m.sum()},
        {"Pi(A3): Lambda", regular(s.lambda)},
        {"k[x]/(x^2): Lambda + S", direct_sum(regular(dn), simple(dn, 0))},
        {"A3: Lambda + D Lambda", direct_sum(regular(lin), cogenerator(lin))},
    };
    Names bad;
    for (const auto& [name, m] : cases) {
      auto pkg = endomorphism_algebra(m);
      bool ok = dominant_dimension(pkg.endo).at_least(2) == true;
      const AlgebraPtr& a = m.algebra();
      for (int i = 0; i < static_cast<int>(a->vertex_count()); ++i)
        ok = ok && is_injective(hom_functor(pkg, injective(a, i)));
      if (!ok) bad.push_back(name);
    }
    d.check(bad.empty(), "e: injectivity transfer and domdim >= 2 on " + std::to_string(cases.size()) +
                             " generator-cogenerators" + (bad.empty() ? "" : ", failing " + join(bad, ", ")));
  }
  return {7, "property suite", d.ok(), d.str()};
}

CriterionResult c8() {
  Detail d;
  auto dn = dual_numbers();
  auto dctx = ambient_context(dn);
  AddCategory m(std::vector<Module>{regular(dn), simple(dn, 0)});
  d.check(is_isomorphic(tau(simple(dn, 0)), simple(dn, 0)), "tau S = S");
  auto is = is_precluster_IS(m, 1);
  auto sub = is_precluster_subcat(m, dctx, 1);
  auto direct = rel_cotilting(m, dctx);
  d.check(is.passed() && sub.passed() && direct.verdict == Verdict::Pass,
          "k[x]/(x^2), Lambda + S, n=1: tau-closure " + to_string(is.verdict) + ", subcategory " +
              to_string(sub.verdict) + ", direct cotilting " + to_string(direct.verdict));
  d.check(is_min_AG_algebra(endomorphism_algebra(m.parts()).endo, 1).passed(), "End(Lambda + S) 1-minimal AG");
  for (const auto& a : {dn, compile(preprojective(3))}) {
    AddCategory reg = AddCategory::of(regular(a));
    auto ctx = ambient_context(a);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto r1 = is_precluster_IS(reg, n), r2 = is_precluster_subcat(reg, ctx, n);
      d.check(r1.passed() && r2.passed() && verify_correspondence(reg, n).passed(),
              "selfinjective (dim " + std::to_string(a->dim()) + "), M = Lambda, n=" + std::to_string(n));
    }
  }
  return {8, "degenerate cases", d.ok(), d.str()};
}

CriterionResult c9(const Setup& s) {
  Detail d;
  auto r = check_tensor_precluster(s.lambda, {regular(s.lambda)}, s.m, dual_numbers(), 2, s.ctx);
  for (const auto& c : r.conditions)
    d.check(c.verdict == Verdict::Pass, c.label + (c.witness.empty() ? "" : " (" + c.witness + ")"));
  for (const auto& c : r.certificates) d.note(c);
  return {9, "tensor pipeline", d.ok(), d.str()};
}

template <class F>
CriterionResult guarded(int id, const std::string& title, F f) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r = {id, title, false, std::string("error: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_example_suite(const SuiteOptions& opts) {
  auto wanted = [&](int id) {
    return opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), id) != opts.only.end();
  };
  std::optional<Setup> setup;
  auto need_setup = [&]() -> const Setup& {
    if (!setup) setup.emplace();
    return *setup;
  };
  std::optional<GammaSetup> g;
  auto need_gamma = [&]() -> const GammaSetup& {
    if (!g) g = make_gamma(opts.corrupt_gamma);
    return *g;
  };
  std::vector<CriterionResult> out;
  auto run = [&](int id, const std::string& title, auto f) {
    if (wanted(id)) out.push_back(guarded(id, title, f));
  };
  run(1, "Pi(A3) build", [] { return c1(); });
  run(2, "2-precluster example", [&] { return c2(need_setup()); });
  run(3, "non-cluster witness", [&] { return c3(need_setup()); });
  run(4, "endomorphism algebra", [&] {
    return c4(need_setup(), [&] { return compile(gamma_presentation(opts.corrupt_gamma)); });
  });
  run(5, "Gorenstein projectives", [&] { return c5(need_gamma()); });
  run(6, "precluster tables", [&] { return c6(need_gamma()); });
  run(7, "property suite", [&] { return c7(need_setup(), need_gamma()); });
  run(8, "degenerate cases", [] { return c8(); });
  run(9, "tensor pipeline", [&] { return c9(need_setup()); });
  return out;
}

std::string format_results(const std::vector<CriterionResult>& rs) {
  std::ostringstream out;
  for (const auto& r : rs)
    out << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.title << ": " << r.detail
        << " (" << std::fixed << std::setprecision(1) << r.seconds << "s)\n";
  return out.str();
}

nlohmann::json results_to_json(const std::vector<CriterionResult>& rs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rs)
    out.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                   {"seconds", r.seconds}});
  return out;
}

}  // namespace asc
