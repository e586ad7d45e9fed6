#include "asc/homology.hpp"

#include "asc/error.hpp"

namespace asc {

ModuleMap ProjResolution::differential(std::size_t k) const {
  if (k == 0 || k >= covers.size()) throw ContractViolation("differential index out of range");
  return syzygies[k].inclusion * covers[k].map;
}

bool ProjResolution::is_minimal() const {
  for (std::size_t k = 1; k < covers.size(); ++k) {
    ModuleMap d = differential(k);
    Quot t = top(d.target());
    if (!(t.projection * d).is_zero()) return false;
  }
  return true;
}

ProjResolution min_proj_resolution(const Module& x, std::size_t length) {
  ProjResolution r;
  r.x = x;
  r.syzygies.push_back({x, ModuleMap::identity(x)});
  for (std::size_t k = 0; k <= length; ++k) {
    const Module& cur = r.syzygies[k].module;
    if (cur.is_zero()) {
      r.terminated = true;
      break;
    }
    r.covers.push_back(minimal_projective_cover(cur));
    r.syzygies.push_back(kernel(r.covers.back().map));
  }
  if (!r.terminated && r.syzygies.back().module.is_zero()) r.terminated = true;
  return r;
}

std::vector<std::size_t> ext_range(const Module& x, const Module& y, std::size_t max_i) {
  std::vector<std::size_t> out{hom_dim(x, y)};
  if (max_i == 0) return out;
  ProjResolution r = min_proj_resolution(x, max_i - 1);
  std::vector<std::size_t> hom_syz{out[0]};
  for (std::size_t i = 1; i <= max_i; ++i) {
    if (i >= r.syzygies.size() || r.syzygies[i - 1].module.is_zero()) {
      out.push_back(0);
      hom_syz.push_back(0);
      continue;
    }
    // 0 -> Omega^i -> P_{i-1} -> Omega^{i-1} -> 0 and Ext^1(P, y) = 0.
    std::size_t hp = 0;
    for (int v : r.covers[i - 1].vertices) hp += y.dim_at(v);
    std::size_t h = hom_dim(r.syzygies[i].module, y);
    hom_syz.push_back(h);
    out.push_back(h + hom_syz[i - 1] - hp);
  }
  return out;
}

std::size_t ext(const Module& x, const Module& y, std::size_t i) { return ext_range(x, y, i)[i]; }

bool ShortExact::is_exact() const {
  return f.is_intertwiner() && g.is_intertwiner() && (g * f).is_zero() && f.is_injective() &&
         g.is_surjective() && middle().dim() == left().dim() + right().dim();
}

namespace {

Vector flatten(const ModuleMap& f) {
  Vector v;
  for (const auto& b : f.blocks()) v.insert(v.end(), b.data().begin(), b.data().end());
  return v;
}

}  // namespace

std::vector<ShortExact> ext1_basis(const Module& x, const Module& y) {
  const auto& a = x.algebra();
  ModuleMap pi = projective_cover(x);
  Sub om = kernel(pi);
  std::size_t len = 0;
  for (std::size_t i = 0; i < a->vertex_count(); ++i) len += y.dim_at(i) * om.module.dim_at(i);
  Span restricted(len);
  for (const auto& phi : hom_basis(pi.source(), y)) restricted.add(flatten(phi * om.inclusion));
  std::vector<ShortExact> out;
  for (const auto& h : hom_basis(om.module, y)) {
    if (!restricted.add(flatten(h))) continue;
    DirectSum s = direct_sum(a, {y, pi.source()});
    ModuleMap emb = column_map(s, {h * Scalar(-1), om.inclusion}, om.module);
    Quot e = cokernel(emb);
    ModuleMap f = e.projection * s.injections[0];
    ModuleMap down = row_map(s, {ModuleMap::zero(y, x), pi}, x);
    std::vector<Matrix> gb;
    for (std::size_t i = 0; i < a->vertex_count(); ++i) {
      auto rinv = solve(e.projection.block(i), Matrix::identity(e.module.dim_at(i)));
      gb.push_back(down.block(i) * *rinv);
    }
    out.push_back({f, ModuleMap(e.module, x, std::move(gb))});
  }
  return out;
}

Module syzygy(const Module& x, std::size_t i) {
  if (i == 0) return drop_projective_summands(x);
  Module k = x;
  for (std::size_t s = 0; s < i && !k.is_zero(); ++s) k = kernel(projective_cover(k)).module;
  return k;
}

Module cosyzygy(const Module& x, std::size_t i) { return dual(syzygy(dual(x), i)); }

Module transpose(const Module& x) {
  const AlgebraPtr& a = x.algebra();
  AlgebraPtr op = a->opposite();
  if (x.is_zero()) return Module::zero(op);
  ProjectiveCover c0 = minimal_projective_cover(x);
  Sub om = kernel(c0.map);
  if (om.module.is_zero()) return Module::zero(op);
  ProjectiveCover c1 = minimal_projective_cover(om.module);
  ModuleMap d1 = om.inclusion * c1.map;

  // Hom(P_i, A) = e_i A = A^op e_i; precomposition with x -> x u becomes
  // v -> u v on e_i A, i.e. right multiplication by u in A^op.
  std::vector<Module> h0, h1;
  for (int i : c0.vertices) h0.push_back(projective(op, i));
  for (int j : c1.vertices) h1.push_back(projective(op, j));
  DirectSum s0 = direct_sum(op, h0), s1 = direct_sum(op, h1);
  ModuleMap dstar = ModuleMap::zero(s0.module, s1.module);
  for (std::size_t b = 0; b < c1.vertices.size(); ++b) {
    const int j = c1.vertices[b];
    for (std::size_t t = 0; t < c0.vertices.size(); ++t) {
      const int i = c0.vertices[t];
      ModuleMap comp = c0.sum.projections[t] * d1 * c1.sum.injections[b];
      Vector gen = comp.block(j).col(0);
      if (is_zero(gen)) continue;
      Vector u = projective_element(a, i, j, gen);
      dstar += s1.injections[b] * projective_map(op, i, j, u) * s0.projections[t];
    }
  }
  return cokernel(dstar).module;
}

Module tau(const Module& x) { return dual(transpose(x)); }

Module tau_minus(const Module& x) { return transpose(dual(x)); }

Module tau_n(const Module& x, std::size_t n) {
  if (n < 1) throw ContractViolation("tau_n requires n >= 1");
  return tau(syzygy(x, n - 1));
}

Module tau_n_minus(const Module& x, std::size_t n) {
  if (n < 1) throw ContractViolation("tau_n_minus requires n >= 1");
  return tau_minus(cosyzygy(x, n - 1));
}

// ---------------------------------------------------------------------------
// Dimensions

std::optional<bool> DimensionVerdict::at_most(std::size_t n) const {
  switch (status) {
    case Status::Finite: return value <= n;
    case Status::Infinite: return false;
    case Status::Inconclusive: if (n < value) return false; return std::nullopt;
  }
  return std::nullopt;
}

std::optional<bool> DimensionVerdict::at_least(std::size_t n) const {
  switch (status) {
    case Status::Finite: return value >= n;
    case Status::Infinite: return true;
    case Status::Inconclusive: if (n <= value) return true; return std::nullopt;
  }
  return std::nullopt;
}

std::string DimensionVerdict::to_string() const {
  switch (status) {
    case Status::Finite: return std::to_string(value);
    case Status::Infinite: return "infinite";
    case Status::Inconclusive: return ">= " + std::to_string(value) + " (inconclusive)";
  }
  return "";
}

namespace {

DimensionVerdict make(DimensionVerdict::Kind k, DimensionVerdict::Status s, std::size_t v,
                      std::string cert) {
  DimensionVerdict d;
  d.kind = k;
  d.status = s;
  d.value = v;
  d.certificate = std::move(cert);
  return d;
}

std::optional<std::size_t> earlier_isomorphic(const std::vector<Module>& seen, const Module& m) {
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i].is_zero() && seen[i].dims() == m.dims() && is_isomorphic(seen[i], m)) return i;
  return std::nullopt;
}

}  // namespace

DimensionVerdict projective_dimension(const Module& x, std::size_t cap) {
  using S = DimensionVerdict::Status;
  const auto kind = DimensionVerdict::Kind::Projective;
  if (cap < 1) throw ContractViolation("cap must be >= 1");
  if (x.is_zero()) return make(kind, S::Finite, 0, "zero module");
  std::vector<Module> seen{x};
  Module k = x;
  for (std::size_t s = 1; s <= cap; ++s) {
    k = kernel(projective_cover(k)).module;
    if (k.is_zero())
      return make(kind, S::Finite, s - 1, "Omega^" + std::to_string(s) + " = 0");
    if (auto i = earlier_isomorphic(seen, k))
      return make(kind, S::Infinite, 0,
                  "Omega^" + std::to_string(*i) + " ~= Omega^" + std::to_string(s));
    seen.push_back(k);
  }
  return make(kind, S::Inconclusive, cap,
              "Omega^" + std::to_string(cap) + " != 0 and no period found");
}

DimensionVerdict injective_dimension(const Module& x, std::size_t cap) {
  DimensionVerdict v = projective_dimension(dual(x), cap);
  v.kind = DimensionVerdict::Kind::Injective;
  if (!v.certificate.empty() && v.certificate.rfind("Omega", 0) == 0)
    v.certificate = "over the opposite, for the dual: " + v.certificate;
  return v;
}

DimensionVerdict global_dimension(const AlgebraPtr& a, std::size_t cap) {
  using S = DimensionVerdict::Status;
  const auto kind = DimensionVerdict::Kind::Global;
  std::size_t best = 0, lower = 0;
  std::string cert = "all simples have finite projective dimension";
  bool inconclusive = false;
  for (std::size_t i = 0; i < a->vertex_count(); ++i) {
    DimensionVerdict v = projective_dimension(simple(a, static_cast<int>(i)), cap);
    const std::string who = "S" + a->vertex_labels()[i] + ": ";
    if (v.status == S::Infinite) return make(kind, S::Infinite, 0, who + v.certificate);
    if (v.status == S::Inconclusive) {
      inconclusive = true;
      lower = std::max(lower, v.value);
      cert = who + v.certificate;
    } else {
      best = std::max(best, v.value);
    }
  }
  if (inconclusive) return make(kind, S::Inconclusive, std::max(best, lower), cert);
  return make(kind, S::Finite, best, cert);
}

DimensionVerdict dominant_dimension(const AlgebraPtr& a, std::size_t cap) {
  using S = DimensionVerdict::Status;
  const auto kind = DimensionVerdict::Kind::Dominant;
  const std::size_t n = a->vertex_count();
  std::vector<bool> proj_inj(n);
  for (std::size_t v = 0; v < n; ++v) proj_inj[v] = is_projective(injective(a, static_cast<int>(v)));
  Module c = regular(a);
  std::vector<Module> seen;
  for (std::size_t k = 0; k < cap; ++k) {
    if (c.is_zero())
      return make(kind, S::Infinite, 0,
                  "injective coresolution of A ends after " + std::to_string(k) +
                      " projective-injective terms");
    Module soc = socle(c).module;
    for (std::size_t v = 0; v < n; ++v)
      if (soc.dim_at(static_cast<int>(v)) > 0 && !proj_inj[v])
        return make(kind, S::Finite, k,
                    "I^" + std::to_string(k) + " contains the non-projective injective I" +
                        a->vertex_labels()[v]);
    if (auto i = earlier_isomorphic(seen, c))
      return make(kind, S::Infinite, 0,
                  "cosyzygy " + std::to_string(*i) + " ~= cosyzygy " + std::to_string(k) +
                      " with projective-injective terms in between");
    seen.push_back(c);
    c = cokernel(injective_envelope(c)).module;
  }
  return make(kind, S::Inconclusive, cap, "first " + std::to_string(cap) +
                                              " terms are projective-injective");
}

bool is_selfinjective(const AlgebraPtr& a) {
  for (std::size_t i = 0; i < a->vertex_count(); ++i)
    if (!is_injective(projective(a, static_cast<int>(i)))) return false;
  return true;
}

std::pair<DimensionVerdict, DimensionVerdict> gorenstein_dimensions(const AlgebraPtr& a,
                                                                    std::size_t cap) {
  return {injective_dimension(regular(a), cap), injective_dimension(regular(a->opposite()), cap)};
}

std::optional<bool> is_gorenstein_projective(const Module& x, std::size_t cap) {
  auto [left, right] = gorenstein_dimensions(x.algebra(), cap);
  if (!left.is_finite() || !right.is_finite()) return std::nullopt;
  const std::size_t d = std::max(left.value, right.value);
  if (d == 0) return true;
  auto e = ext_range(x, regular(x.algebra()), d);
  for (std::size_t i = 1; i <= d; ++i)
    if (e[i] != 0) return false;
  return true;
}

}  // namespace asc
