#include "asc/modrep.hpp"

#include <algorithm>
#include <sstream>

#include "asc/error.hpp"

namespace asc {

namespace {

Matrix compute_word_action(const Module& m, const BasedAlgebra::Word& w) {
  Matrix r = Matrix::identity(m.dim_at(w.source));
  for (int a : w.arrows) r = m.arrow(a) * r;
  return r;
}

}  // namespace

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims,
               std::vector<Matrix> arrows, bool check) {
  if (!algebra) throw ContractViolation("module without algebra");
  const auto& qa = algebra->arrows();
  if (dims.size() != algebra->vertex_count())
    throw ContractViolation("dimension vector length differs from vertex count");
  if (arrows.size() != qa.size())
    throw ContractViolation("arrow matrix count differs from arrow count");
  for (std::size_t a = 0; a < qa.size(); ++a)
    if (arrows[a].rows() != dims[qa[a].target] || arrows[a].cols() != dims[qa[a].source])
      throw ContractViolation("arrow matrix for '" + qa[a].label + "' has wrong shape");
  auto d = std::make_shared<Data>();
  d->algebra = std::move(algebra);
  d->dims = std::move(dims);
  d->arrows = std::move(arrows);
  for (auto n : d->dims) {
    d->offsets.push_back(d->total);
    d->total += n;
  }
  d_ = std::move(d);
  if (!check) return;
  const auto& alg = *d_->algebra;
  const auto& words = alg.words();
  std::vector<Matrix> wa;
  for (const auto& w : words) wa.push_back(compute_word_action(*this, w));
  for (std::size_t a = 0; a < qa.size(); ++a)
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w].target != qa[a].source) continue;
      Matrix lhs = d_->arrows[a] * wa[w];
      Vector c = alg.word_coordinates(alg.multiply(qa[a].element, words[w].element));
      Matrix rhs(lhs.rows(), lhs.cols());
      for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) rhs += wa[k] * c[k];
      if (!(lhs == rhs))
        throw ContractViolation("representation violates the relations at arrow '" +
                                qa[a].label + "'");
    }
}

Module Module::zero(AlgebraPtr algebra) {
  const std::size_t n = algebra->vertex_count();
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < algebra->arrows().size(); ++a) arrows.emplace_back(0, 0);
  return Module(std::move(algebra), std::vector<std::size_t>(n, 0), std::move(arrows), false);
}

Matrix Module::word_action(const BasedAlgebra::Word& w) const {
  return compute_word_action(*this, w);
}

Matrix Module::block_action(const Vector& element, int from, int to) const {
  const auto& alg = *algebra();
  Vector c = alg.word_coordinates(element);
  Matrix r(dim_at(to), dim_at(from));
  const auto& words = alg.words();
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (sgn(c[k]) == 0 || words[k].source != from || words[k].target != to) continue;
    r += word_action(words[k]) * c[k];
  }
  return r;
}

Matrix Module::action(const Vector& element) const {
  const auto& alg = *algebra();
  Vector c = alg.word_coordinates(element);
  Matrix r(dim(), dim());
  const auto& words = alg.words();
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    const auto& w = words[k];
    Matrix blk = r.block(offset(w.target), offset(w.source), dim_at(w.target), dim_at(w.source));
    blk += word_action(w) * c[k];
    r.set_block(offset(w.target), offset(w.source), blk);
  }
  return r;
}

std::string Module::dimension_vector() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dims().size(); ++i) os << (i ? "," : "") << dims()[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// ModuleMap

ModuleMap::ModuleMap(Module source, Module target, std::vector<Matrix> blocks, bool check)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  const std::size_t n = source_.algebra()->vertex_count();
  if (!target_.algebra()->same_as(*source_.algebra()))
    throw ContractViolation("map between modules over different algebras");
  if (blocks_.size() != n) throw ContractViolation("map has wrong block count");
  for (std::size_t i = 0; i < n; ++i)
    if (blocks_[i].rows() != target_.dim_at(i) || blocks_[i].cols() != source_.dim_at(i))
      throw ContractViolation("map block has wrong shape");
  if (check && !is_intertwiner())
    throw ContractViolation("matrix does not intertwine the actions");
}

ModuleMap ModuleMap::zero(const Module& source, const Module& target) {
  std::vector<Matrix> b;
  for (std::size_t i = 0; i < source.dims().size(); ++i)
    b.emplace_back(target.dim_at(i), source.dim_at(i));
  return ModuleMap(source, target, std::move(b));
}

ModuleMap ModuleMap::identity(const Module& m) {
  std::vector<Matrix> b;
  for (auto d : m.dims()) b.push_back(Matrix::identity(d));
  return ModuleMap(m, m, std::move(b));
}

Matrix ModuleMap::matrix() const { return block_diagonal(blocks_); }

std::size_t ModuleMap::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks_) r += asc::rank(b);
  return r;
}

bool ModuleMap::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& b) { return b.is_zero(); });
}

bool ModuleMap::is_intertwiner() const {
  const auto& qa = source_.algebra()->arrows();
  for (std::size_t a = 0; a < qa.size(); ++a)
    if (!(target_.arrow(a) * blocks_[qa[a].source] == blocks_[qa[a].target] * source_.arrow(a)))
      return false;
  return true;
}

ModuleMap& ModuleMap::operator+=(const ModuleMap& o) {
  if (o.blocks_.size() != blocks_.size()) throw ContractViolation("map sum shape mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += o.blocks_[i];
  return *this;
}

ModuleMap& ModuleMap::operator*=(const Scalar& s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

ModuleMap operator*(const ModuleMap& g, const ModuleMap& f) {
  if (g.source_.dims() != f.target_.dims())
    throw ContractViolation("maps do not compose");
  std::vector<Matrix> b;
  for (std::size_t i = 0; i < f.blocks_.size(); ++i) b.push_back(g.blocks_[i] * f.blocks_[i]);
  return ModuleMap(f.source_, g.target_, std::move(b));
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

// Words of `a` starting at vertex i, with their index inside the target
// vertex's block of the projective module.
struct ProjectiveLayout {
  std::vector<std::size_t> dims;
  std::vector<int> local;  // per word; -1 if the word does not start at i
};

ProjectiveLayout projective_layout(const BasedAlgebra& a, int i) {
  ProjectiveLayout l;
  l.dims.assign(a.vertex_count(), 0);
  for (const auto& w : a.words()) {
    if (w.source != i) {
      l.local.push_back(-1);
      continue;
    }
    l.local.push_back(static_cast<int>(l.dims[w.target]++));
  }
  return l;
}

void check_vertex(const AlgebraPtr& a, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= a->vertex_count())
    throw ContractViolation("vertex index " + std::to_string(i) + " out of range");
}

}  // namespace

Module simple(const AlgebraPtr& a, int i) {
  check_vertex(a, i);
  std::vector<std::size_t> dims(a->vertex_count(), 0);
  dims[i] = 1;
  std::vector<Matrix> arrows;
  for (const auto& ar : a->arrows()) arrows.emplace_back(dims[ar.target], dims[ar.source]);
  return Module(a, dims, std::move(arrows), false);
}

Module projective(const AlgebraPtr& a, int i) {
  check_vertex(a, i);
  ProjectiveLayout l = projective_layout(*a, i);
  const auto& words = a->words();
  std::vector<Matrix> arrows;
  for (const auto& ar : a->arrows()) {
    Matrix m(l.dims[ar.target], l.dims[ar.source]);
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (l.local[w] < 0 || words[w].target != ar.source) continue;
      Vector c = a->word_coordinates(a->multiply(ar.element, words[w].element));
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        if (l.local[k] < 0 || words[k].target != ar.target)
          throw ContractViolation("word basis is not adapted to the idempotents");
        m(l.local[k], l.local[w]) = c[k];
      }
    }
    arrows.push_back(std::move(m));
  }
  return Module(a, l.dims, std::move(arrows), false);
}

Module injective(const AlgebraPtr& a, int i) {
  check_vertex(a, i);
  return dual(projective(a->opposite(), i));
}

Module regular(const AlgebraPtr& a) {
  std::vector<Module> parts;
  for (std::size_t i = 0; i < a->vertex_count(); ++i) parts.push_back(projective(a, i));
  return direct_sum(a, parts).module;
}

Module cogenerator(const AlgebraPtr& a) {
  std::vector<Module> parts;
  for (std::size_t i = 0; i < a->vertex_count(); ++i) parts.push_back(injective(a, i));
  return direct_sum(a, parts).module;
}

Module module_from_action(const AlgebraPtr& a, const std::vector<Matrix>& actions, bool check) {
  if (actions.size() != a->dim())
    throw ContractViolation("need one action matrix per basis element");
  const std::size_t n = actions.empty() ? 0 : actions[0].rows();
  for (const auto& m : actions)
    if (m.rows() != n || m.cols() != n) throw ContractViolation("action matrices must be square");
  auto act = [&](const Vector& x) {
    Matrix r(n, n);
    for (std::size_t k = 0; k < x.size(); ++k)
      if (sgn(x[k]) != 0) r += actions[k] * x[k];
    return r;
  };
  if (check) {
    if (!(act(a->unit()) == Matrix::identity(n)))
      throw ContractViolation("unit does not act as the identity");
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j) {
        Vector p(a->dim());
        for (const auto& [k, c] : a->product(i, j)) p[k] = c;
        if (!(actions[i] * actions[j] == act(p)))
          throw ContractViolation("action is not multiplicative on (" + a->labels()[i] + ", " +
                                  a->labels()[j] + ")");
      }
  }
  std::vector<Matrix> bases;
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  for (const auto& e : a->idempotents()) {
    bases.push_back(column_space(act(e)));
    dims.push_back(bases.back().cols());
    total += dims.back();
  }
  if (total != n) throw ContractViolation("idempotent actions do not split the module");
  std::vector<Matrix> arrows;
  for (const auto& ar : a->arrows()) {
    Matrix img = act(ar.element) * bases[ar.source];
    auto x = solve(bases[ar.target], img);
    if (!x) throw ContractViolation("arrow action leaves its target block");
    arrows.push_back(std::move(*x));
  }
  return Module(a, std::move(dims), std::move(arrows), false);
}

Module restrict_scalars(const Module& x, const AlgebraPtr& b, const std::vector<Vector>& images) {
  if (images.size() != b->dim()) throw ContractViolation("need one image per basis element");
  std::vector<Matrix> actions;
  for (const auto& im : images) actions.push_back(x.action(im));
  return module_from_action(b, actions, false);
}

// ---------------------------------------------------------------------------
// Hom

std::vector<ModuleMap> hom_basis(const Module& x, const Module& y) {
  if (!x.algebra()->same_as(*y.algebra()))
    throw ContractViolation("hom between modules over different algebras");
  const auto& alg = *x.algebra();
  const std::size_t n = alg.vertex_count();
  std::vector<std::size_t> var(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) var[i + 1] = var[i] + y.dim_at(i) * x.dim_at(i);
  const std::size_t nvars = var[n];
  std::size_t neq = 0;
  for (const auto& a : alg.arrows()) neq += y.dim_at(a.target) * x.dim_at(a.source);
  Matrix eq(neq, nvars);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < alg.arrows().size(); ++ai) {
    const auto& a = alg.arrows()[ai];
    const int i = a.source, j = a.target;
    const Matrix& ya = y.arrow(ai);  // dy_j x dy_i
    const Matrix& xa = x.arrow(ai);  // dx_j x dx_i
    const std::size_t dxi = x.dim_at(i), dxj = x.dim_at(j), dyi = y.dim_at(i);
    for (std::size_t r = 0; r < y.dim_at(j); ++r)
      for (std::size_t c = 0; c < dxi; ++c, ++row) {
        // (Y_a f_i)[r,c] - (f_j X_a)[r,c]
        for (std::size_t k = 0; k < dyi; ++k)
          if (sgn(ya(r, k)) != 0) eq(row, var[i] + k * dxi + c) += ya(r, k);
        for (std::size_t k = 0; k < dxj; ++k)
          if (sgn(xa(k, c)) != 0) eq(row, var[j] + r * dxj + k) -= xa(k, c);
      }
  }
  Matrix ker = kernel_basis(eq);
  std::vector<ModuleMap> out;
  for (std::size_t col = 0; col < ker.cols(); ++col) {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix b(y.dim_at(i), x.dim_at(i));
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = ker(var[i] + r * b.cols() + c, col);
      blocks.push_back(std::move(b));
    }
    out.emplace_back(x, y, std::move(blocks));
  }
  return out;
}

std::size_t hom_dim(const Module& x, const Module& y) { return hom_basis(x, y).size(); }

// ---------------------------------------------------------------------------
// Sub- and quotient modules

Sub submodule(const Module& x, const std::vector<Matrix>& subspace) {
  const auto& alg = x.algebra();
  const std::size_t n = alg->vertex_count();
  if (subspace.size() != n) throw ContractViolation("subspace needs one block per vertex");
  std::vector<Matrix> s;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < n; ++i) {
    if (subspace[i].rows() != x.dim_at(i)) throw ContractViolation("subspace block has wrong rows");
    s.push_back(column_space(subspace[i]));
    dims.push_back(s.back().cols());
  }
  std::vector<Matrix> arrows;
  for (std::size_t ai = 0; ai < alg->arrows().size(); ++ai) {
    const auto& a = alg->arrows()[ai];
    auto b = solve(s[a.target], x.arrow(ai) * s[a.source]);
    if (!b) throw ContractViolation("subspace is not closed under the action");
    arrows.push_back(std::move(*b));
  }
  Module m(alg, dims, std::move(arrows), false);
  return {m, ModuleMap(m, x, std::move(s))};
}

Quot quotient(const Module& x, const std::vector<Matrix>& subspace) {
  const auto& alg = x.algebra();
  const std::size_t n = alg->vertex_count();
  if (subspace.size() != n) throw ContractViolation("subspace needs one block per vertex");
  std::vector<Matrix> q, rinv;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < n; ++i) {
    if (subspace[i].rows() != x.dim_at(i)) throw ContractViolation("subspace block has wrong rows");
    Matrix qi = kernel_basis(subspace[i].transpose()).transpose();
    auto ri = solve(qi, Matrix::identity(qi.rows()));
    if (!ri) throw ContractViolation("quotient projection is not surjective");
    dims.push_back(qi.rows());
    q.push_back(std::move(qi));
    rinv.push_back(std::move(*ri));
  }
  std::vector<Matrix> arrows;
  for (std::size_t ai = 0; ai < alg->arrows().size(); ++ai) {
    const auto& a = alg->arrows()[ai];
    if (!(q[a.target] * x.arrow(ai) * subspace[a.source]).is_zero())
      throw ContractViolation("subspace is not closed under the action");
    arrows.push_back(q[a.target] * x.arrow(ai) * rinv[a.source]);
  }
  Module m(alg, dims, std::move(arrows), false);
  return {m, ModuleMap(x, m, std::move(q))};
}

Sub kernel(const ModuleMap& f) {
  std::vector<Matrix> s;
  for (const auto& b : f.blocks()) s.push_back(kernel_basis(b));
  return submodule(f.source(), s);
}

Sub image(const ModuleMap& f) {
  std::vector<Matrix> s;
  for (const auto& b : f.blocks()) s.push_back(column_space(b));
  return submodule(f.target(), s);
}

Quot cokernel(const ModuleMap& f) {
  std::vector<Matrix> s;
  for (const auto& b : f.blocks()) s.push_back(column_space(b));
  return quotient(f.target(), s);
}

namespace {

std::vector<Matrix> radical_subspace(const Module& x) {
  const auto& alg = *x.algebra();
  std::vector<Matrix> s;
  for (std::size_t j = 0; j < alg.vertex_count(); ++j) {
    std::vector<Matrix> ims;
    for (std::size_t ai = 0; ai < alg.arrows().size(); ++ai)
      if (alg.arrows()[ai].target == static_cast<int>(j)) ims.push_back(x.arrow(ai));
    s.push_back(column_space(hstack(ims, x.dim_at(j))));
  }
  return s;
}

}  // namespace

Sub radical(const Module& x) { return submodule(x, radical_subspace(x)); }

Quot top(const Module& x) { return quotient(x, radical_subspace(x)); }

Sub socle(const Module& x) {
  const auto& alg = *x.algebra();
  std::vector<Matrix> s;
  for (std::size_t i = 0; i < alg.vertex_count(); ++i) {
    std::vector<Matrix> outs;
    for (std::size_t ai = 0; ai < alg.arrows().size(); ++ai)
      if (alg.arrows()[ai].source == static_cast<int>(i)) outs.push_back(x.arrow(ai));
    s.push_back(kernel_basis(vstack(outs, x.dim_at(i))));
  }
  return submodule(x, s);
}

std::vector<std::size_t> top_multiplicities(const Module& x) {
  auto rad = radical_subspace(x);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rad.size(); ++i) out.push_back(x.dim_at(i) - rad[i].cols());
  return out;
}

// ---------------------------------------------------------------------------
// Duality and sums

Module dual(const Module& x) {
  AlgebraPtr op = x.algebra()->opposite();
  std::vector<Matrix> arrows;
  for (const auto& a : op->arrows())
    arrows.push_back(x.block_action(a.element, a.target, a.source).transpose());
  return Module(op, x.dims(), std::move(arrows), false);
}

ModuleMap dual(const ModuleMap& f) {
  std::vector<Matrix> b;
  for (const auto& m : f.blocks()) b.push_back(m.transpose());
  return ModuleMap(dual(f.target()), dual(f.source()), std::move(b));
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts) {
  const std::size_t n = a->vertex_count();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts) {
    if (!p.algebra()->same_as(*a)) throw ContractViolation("direct sum over different algebras");
    for (std::size_t i = 0; i < n; ++i) dims[i] += p.dim_at(i);
  }
  std::vector<Matrix> arrows;
  for (std::size_t ai = 0; ai < a->arrows().size(); ++ai) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.arrow(ai));
    arrows.push_back(block_diagonal(blocks));
  }
  DirectSum s{Module(a, dims, std::move(arrows), false), {}, {}};
  std::vector<std::size_t> off(n, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inj, proj;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix in(dims[i], p.dim_at(i));
      for (std::size_t k = 0; k < p.dim_at(i); ++k) in(off[i] + k, k) = 1;
      proj.push_back(in.transpose());
      inj.push_back(std::move(in));
      off[i] += p.dim_at(i);
    }
    s.injections.emplace_back(p, s.module, std::move(inj));
    s.projections.emplace_back(s.module, p, std::move(proj));
  }
  return s;
}

Module direct_sum(const Module& x, const Module& y) {
  return direct_sum(x.algebra(), {x, y}).module;
}

Module power(const Module& x, std::size_t n) {
  return direct_sum(x.algebra(), std::vector<Module>(n, x)).module;
}

ModuleMap row_map(const DirectSum& sum, const std::vector<ModuleMap>& maps, const Module& target) {
  ModuleMap r = ModuleMap::zero(sum.module, target);
  if (maps.size() != sum.projections.size()) throw ContractViolation("row map arity mismatch");
  for (std::size_t k = 0; k < maps.size(); ++k) r += maps[k] * sum.projections[k];
  return r;
}

ModuleMap column_map(const DirectSum& sum, const std::vector<ModuleMap>& maps,
                     const Module& source) {
  ModuleMap r = ModuleMap::zero(source, sum.module);
  if (maps.size() != sum.injections.size()) throw ContractViolation("column map arity mismatch");
  for (std::size_t k = 0; k < maps.size(); ++k) r += sum.injections[k] * maps[k];
  return r;
}

ProjectiveCover minimal_projective_cover(const Module& x) {
  const auto& a = x.algebra();
  const std::size_t n = a->vertex_count();
  Quot t = top(x);
  std::vector<Module> parts;
  std::vector<ModuleMap> maps;
  std::vector<int> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.module.dim_at(i) == 0) continue;
    auto lift = solve(t.projection.block(i), Matrix::identity(t.module.dim_at(i)));
    if (!lift) throw ContractViolation("top projection is not surjective");
    Module p = projective(a, static_cast<int>(i));
    ProjectiveLayout l = projective_layout(*a, static_cast<int>(i));
    for (std::size_t c = 0; c < lift->cols(); ++c) {
      Matrix v = lift->block(0, c, lift->rows(), 1);
      std::vector<Matrix> blocks;
      for (std::size_t t2 = 0; t2 < n; ++t2) blocks.emplace_back(x.dim_at(t2), p.dim_at(t2));
      for (std::size_t w = 0; w < a->words().size(); ++w) {
        if (l.local[w] < 0) continue;
        const auto& word = a->words()[w];
        blocks[word.target].set_block(0, l.local[w], x.word_action(word) * v);
      }
      parts.push_back(p);
      vertices.push_back(static_cast<int>(i));
      maps.emplace_back(p, x, std::move(blocks));
    }
  }
  DirectSum s = direct_sum(a, parts);
  ModuleMap m = row_map(s, maps, x);
  return {std::move(m), std::move(vertices), std::move(s)};
}

ModuleMap projective_cover(const Module& x) { return minimal_projective_cover(x).map; }

ModuleMap projective_map(const AlgebraPtr& a, int i, int j, const Vector& u) {
  Module pi = projective(a, i), pj = projective(a, j);
  ProjectiveLayout li = projective_layout(*a, i), lj = projective_layout(*a, j);
  const auto& words = a->words();
  std::vector<Matrix> blocks;
  for (std::size_t t = 0; t < a->vertex_count(); ++t) blocks.emplace_back(pj.dim_at(t), pi.dim_at(t));
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (li.local[w] < 0) continue;
    Vector c = a->word_coordinates(a->multiply(words[w].element, u));
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (sgn(c[k]) == 0) continue;
      if (lj.local[k] < 0 || words[k].target != words[w].target)
        throw ContractViolation("projective_map: u is not in e_i A e_j");
      blocks[words[w].target](lj.local[k], li.local[w]) = c[k];
    }
  }
  return ModuleMap(pi, pj, std::move(blocks));
}

Vector projective_element(const AlgebraPtr& a, int i, int t, const Vector& coords) {
  ProjectiveLayout l = projective_layout(*a, i);
  Vector out(a->dim());
  const auto& words = a->words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (l.local[w] < 0 || words[w].target != t) continue;
    const Scalar& c = coords.at(l.local[w]);
    if (sgn(c) == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * words[w].element[k];
  }
  return out;
}

ModuleMap injective_envelope(const Module& x) {
  ModuleMap d = dual(projective_cover(dual(x)));
  return ModuleMap(x, d.target(), d.blocks());
}

// ---------------------------------------------------------------------------
// Decomposition

std::size_t Decomposition::summand_count() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.multiplicity;
  return n;
}

std::vector<Module> Decomposition::modules() const {
  std::vector<Module> out;
  for (const auto& p : parts) out.push_back(p.module);
  return out;
}

namespace {

// tr(g o f) without forming the composite.
Scalar trace_pairing(const ModuleMap& g, const ModuleMap& f) {
  Scalar t = 0;
  for (std::size_t i = 0; i < f.blocks().size(); ++i) {
    const Matrix& gb = g.block(i);
    const Matrix& fb = f.block(i);
    for (std::size_t r = 0; r < gb.rows(); ++r)
      for (std::size_t k = 0; k < gb.cols(); ++k)
        if (sgn(gb(r, k)) != 0 && sgn(fb(k, r)) != 0) t += gb(r, k) * fb(k, r);
  }
  return t;
}

std::size_t gram_rank(const std::vector<ModuleMap>& e) {
  Matrix g(e.size(), e.size());
  for (std::size_t k = 0; k < e.size(); ++k)
    for (std::size_t l = k; l < e.size(); ++l) g(k, l) = g(l, k) = trace_pairing(e[k], e[l]);
  return rank(g);
}

bool simple_top_or_socle(const Module& x) {
  auto tm = top_multiplicities(x);
  std::size_t t = 0;
  for (auto v : tm) t += v;
  if (t == 1) return true;
  return socle(x).module.dim() == 1;
}

struct Piece {
  Module module;
  ModuleMap inclusion;
  ModuleMap projection;
};

ModuleMap shifted_power(const ModuleMap& f, const Scalar& r, std::size_t e) {
  std::vector<Matrix> b;
  for (const auto& m : f.blocks()) b.push_back(power(m - Matrix::identity(m.rows()) * r, e));
  return ModuleMap(f.source(), f.target(), std::move(b));
}

// Fitting decomposition along f - r for some rational eigenvalue r of f.
std::optional<std::pair<Sub, Sub>> fitting_split(const Module& m, const ModuleMap& f) {
  std::size_t e = 1;
  for (auto d : m.dims()) e = std::max(e, d);
  std::vector<Scalar> roots;
  for (const auto& b : f.blocks()) {
    if (b.rows() == 0) continue;
    for (const auto& r : rational_roots(characteristic_polynomial(b)))
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  for (const auto& r : roots) {
    ModuleMap g = shifted_power(f, r, e);
    std::size_t rk = g.rank();
    if (rk == 0 || rk == m.dim()) continue;
    return std::make_pair(kernel(g), image(g));
  }
  return std::nullopt;
}

std::vector<ModuleMap> splitting_candidates(const std::vector<ModuleMap>& e, std::size_t round) {
  std::vector<ModuleMap> out;
  if (round == 0) return e;
  const long coeffs[] = {1, -1, 2, 3};
  if (round > 4) return out;
  for (std::size_t k = 0; k < e.size(); ++k)
    for (std::size_t l = k + 1; l < e.size(); ++l) out.push_back(e[k] + e[l] * Scalar(coeffs[round - 1]));
  return out;
}

void split(const Piece& piece, std::vector<Piece>& out) {
  const Module& m = piece.module;
  if (m.is_zero()) return;
  if (simple_top_or_socle(m)) {
    out.push_back(piece);
    return;
  }
  std::vector<ModuleMap> e = hom_basis(m, m);
  if (e.size() == 1 || gram_rank(e) == 1) {
    out.push_back(piece);
    return;
  }
  for (std::size_t round = 0; round <= 4; ++round)
    for (const auto& f : splitting_candidates(e, round)) {
      auto s = fitting_split(m, f);
      if (!s) continue;
      auto& [k, im] = *s;
      // m = K (+) I: invert [incK | incI] vertexwise for the projections.
      std::vector<Matrix> pk, pi;
      for (std::size_t i = 0; i < m.dims().size(); ++i) {
        Matrix both = hstack(k.inclusion.block(i), im.inclusion.block(i));
        auto inv = inverse(both);
        if (!inv) throw ContractViolation("Fitting decomposition is not direct");
        const std::size_t dk = k.module.dim_at(i);
        pk.push_back(inv->block(0, 0, dk, m.dim_at(i)));
        pi.push_back(inv->block(dk, 0, inv->rows() - dk, m.dim_at(i)));
      }
      ModuleMap projk(m, k.module, std::move(pk)), proji(m, im.module, std::move(pi));
      split({k.module, piece.inclusion * k.inclusion, projk * piece.projection}, out);
      split({im.module, piece.inclusion * im.inclusion, proji * piece.projection}, out);
      return;
    }
  throw UncertifiedIndecomposable("no rational Fitting splitting found for a summand of "
                                  "dimension vector " + m.dimension_vector() +
                                  " although End/rad End has dimension > 1");
}

ModuleMap inverse_map(const ModuleMap& f) {
  std::vector<Matrix> b;
  for (const auto& m : f.blocks()) {
    auto inv = inverse(m);
    if (!inv) throw ContractViolation("map is not invertible");
    b.push_back(std::move(*inv));
  }
  return ModuleMap(f.target(), f.source(), std::move(b));
}

}  // namespace

std::size_t semisimple_endo_rank(const Module& x) {
  if (x.is_zero()) return 0;
  return gram_rank(hom_basis(x, x));
}

bool is_local(const Module& x) {
  if (x.is_zero()) return false;
  if (simple_top_or_socle(x)) return true;
  auto e = hom_basis(x, x);
  return e.size() == 1 || gram_rank(e) == 1;
}

Decomposition decompose(const Module& x) {
  std::vector<Piece> pieces;
  split({x, ModuleMap::identity(x), ModuleMap::identity(x)}, pieces);
  Decomposition d;
  for (auto& p : pieces) {
    bool placed = false;
    for (auto& part : d.parts) {
      auto phi = find_isomorphism_local(part.module, p.module);
      if (!phi) continue;
      part.inclusions.push_back(p.inclusion * *phi);
      part.projections.push_back(inverse_map(*phi) * p.projection);
      ++part.multiplicity;
      placed = true;
      break;
    }
    if (!placed) d.parts.push_back({p.module, 1, {p.inclusion}, {p.projection}});
  }
  return d;
}

std::optional<ModuleMap> find_isomorphism_local(const Module& x, const Module& y) {
  if (x.dims() != y.dims()) return std::nullopt;
  if (x.is_zero()) return ModuleMap::zero(x, y);
  auto h = hom_basis(x, y);
  if (h.empty()) return std::nullopt;
  auto k = hom_basis(y, x);
  for (const auto& f : h)
    for (const auto& g : k)
      if (sgn(trace_pairing(g, f)) != 0) return f;
  return std::nullopt;
}

bool is_isomorphic(const Module& x, const Module& y) {
  if (!x.algebra()->same_as(*y.algebra()))
    throw ContractViolation("comparing modules over different algebras");
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  if (is_local(x)) return find_isomorphism_local(x, y).has_value();
  Decomposition dx = decompose(x), dy = decompose(y);
  if (dx.parts.size() != dy.parts.size()) return false;
  std::vector<bool> used(dy.parts.size(), false);
  for (const auto& px : dx.parts) {
    bool found = false;
    for (std::size_t j = 0; j < dy.parts.size() && !found; ++j) {
      if (used[j] || dy.parts[j].multiplicity != px.multiplicity) continue;
      if (find_isomorphism_local(px.module, dy.parts[j].module)) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::optional<std::size_t> find_isomorphic(const Module& x, const std::vector<Module>& inds) {
  for (std::size_t i = 0; i < inds.size(); ++i)
    if (inds[i].dims() == x.dims() && find_isomorphism_local(x, inds[i])) return i;
  return std::nullopt;
}

bool in_add(const Module& x, const std::vector<Module>& indecomposables) {
  if (x.is_zero()) return true;
  for (const auto& p : decompose(x).parts)
    if (!find_isomorphic(p.module, indecomposables)) return false;
  return true;
}

bool in_add(const Module& x, const Decomposition& m) { return in_add(x, m.modules()); }

Sub reject(const Module& x, const Module& p) {
  auto h = hom_basis(x, p);
  std::vector<Matrix> s;
  for (std::size_t i = 0; i < x.dims().size(); ++i) {
    std::vector<Matrix> rows;
    for (const auto& f : h) rows.push_back(f.block(i));
    s.push_back(kernel_basis(vstack(rows, x.dim_at(i))));
  }
  return submodule(x, s);
}

bool is_projective(const Module& x) {
  const auto& a = *x.algebra();
  auto tm = top_multiplicities(x);
  std::vector<std::size_t> pdim(a.vertex_count(), 0);
  for (const auto& w : a.words()) ++pdim[w.source];
  std::size_t cover = 0;
  for (std::size_t i = 0; i < tm.size(); ++i) cover += tm[i] * pdim[i];
  return cover == x.dim();
}

bool is_injective(const Module& x) { return is_projective(dual(x)); }

namespace {

Module keep_parts(const Module& x, bool (*drop)(const Module&)) {
  std::vector<Module> keep;
  for (const auto& p : decompose(x).parts)
    if (!drop(p.module))
      for (std::size_t c = 0; c < p.multiplicity; ++c) keep.push_back(p.module);
  return direct_sum(x.algebra(), keep).module;
}

}  // namespace

Module drop_projective_summands(const Module& x) {
  if (x.is_zero()) return x;
  return keep_parts(x, is_projective);
}

Module drop_injective_summands(const Module& x) {
  if (x.is_zero()) return x;
  return keep_parts(x, is_injective);
}

}  // namespace asc
