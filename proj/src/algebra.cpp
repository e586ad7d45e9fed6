#include "asc/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "asc/error.hpp"

namespace asc {

int Quiver::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return static_cast<int>(i);
  return -1;
}

int Quiver::add_vertex(const std::string& label) {
  if (vertex_index(label) >= 0 || arrow_index(label) >= 0)
    throw ContractViolation("duplicate quiver label '" + label + "'");
  vertices.push_back(label);
  return static_cast<int>(vertices.size()) - 1;
}

int Quiver::add_arrow(const std::string& label, int source, int target) {
  if (vertex_index(label) >= 0 || arrow_index(label) >= 0)
    throw ContractViolation("duplicate quiver label '" + label + "'");
  const int n = static_cast<int>(vertices.size());
  if (source < 0 || source >= n || target < 0 || target >= n)
    throw ContractViolation("arrow '" + label + "' has an undeclared endpoint");
  arrows.push_back({label, source, target});
  return static_cast<int>(arrows.size()) - 1;
}

std::string path_label(const Quiver& q, const Path& p, CompositionOrder order) {
  if (p.arrows.empty()) return "e" + q.vertices[p.vertex];
  std::vector<int> seq = p.arrows;
  if (order == CompositionOrder::Functional) std::reverse(seq.begin(), seq.end());
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ".";
    out += q.arrows[seq[i]].label;
  }
  return out;
}

Path parse_path(const Quiver& q, const std::vector<std::string>& arrow_labels,
                CompositionOrder order) {
  if (arrow_labels.empty()) throw MalformedRelation("empty path");
  Path p;
  for (const auto& l : arrow_labels) {
    int a = q.arrow_index(l);
    if (a < 0) throw MalformedRelation("unknown arrow '" + l + "'");
    p.arrows.push_back(a);
  }
  if (order == CompositionOrder::Functional)
    std::reverse(p.arrows.begin(), p.arrows.end());
  for (std::size_t i = 1; i < p.arrows.size(); ++i)
    if (q.arrows[p.arrows[i - 1]].target != q.arrows[p.arrows[i]].source)
      throw MalformedRelation("arrows do not compose in the given order: " +
                              path_label(q, p, order));
  p.vertex = q.arrows[p.arrows.front()].source;
  return p;
}

// ---------------------------------------------------------------------------
// BasedAlgebra

AlgebraPtr BasedAlgebra::create(std::vector<std::string> labels,
                                std::vector<SparseVector> table, Vector unit,
                                std::vector<Vector> idempotents,
                                std::vector<std::string> vertex_labels) {
  const std::size_t d = labels.size();
  if (table.size() != d * d)
    throw ContractViolation("structure constant table has wrong size");
  if (unit.size() != d) throw ContractViolation("unit has wrong length");
  for (const auto& e : idempotents)
    if (e.size() != d) throw ContractViolation("idempotent has wrong length");
  if (vertex_labels.size() != idempotents.size())
    throw ContractViolation("vertex label count differs from idempotent count");
  for (const auto& sv : table)
    for (const auto& [k, c] : sv)
      if (k >= d) throw ContractViolation("structure constant index out of range");
  std::shared_ptr<BasedAlgebra> a(new BasedAlgebra());
  a->labels_ = std::move(labels);
  a->table_ = std::move(table);
  for (auto& sv : a->table_) {
    std::sort(sv.begin(), sv.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::erase_if(sv, [](const auto& t) { return sgn(t.second) == 0; });
  }
  a->unit_ = std::move(unit);
  a->idempotents_ = std::move(idempotents);
  a->vertex_labels_ = std::move(vertex_labels);
  a->derive_quiver();
  return a;
}

int BasedAlgebra::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertex_labels_.size(); ++i)
    if (vertex_labels_[i] == label) return static_cast<int>(i);
  return -1;
}

Vector BasedAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t d = dim();
  Vector out(d);
  Scalar xy, t;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& p = table_[i * d + j];
      if (p.empty()) continue;
      xy = x[i] * y[j];
      for (const auto& [k, c] : p) {
        t = xy * c;
        out[k] += t;
      }
    }
  }
  return out;
}

Vector BasedAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

Matrix BasedAlgebra::left_multiplication(const Vector& x) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vector col = multiply(x, basis_vector(j));
    for (std::size_t k = 0; k < d; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix BasedAlgebra::right_multiplication(const Vector& x) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vector col = multiply(basis_vector(j), x);
    for (std::size_t k = 0; k < d; ++k) m(k, j) = col[k];
  }
  return m;
}

void BasedAlgebra::derive_quiver() {
  const std::size_t d = dim();
  const std::size_t n = idempotents_.size();
  if (n == 0 && d > 0) throw ContractViolation("algebra without idempotents");

  Vector sum(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) sum[k] += idempotents_[i][k];
    for (std::size_t j = 0; j < n; ++j) {
      Vector p = multiply(idempotents_[i], idempotents_[j]);
      if (i == j ? p != idempotents_[i] : !is_zero(p))
        throw ContractViolation("idempotents are not orthogonal idempotents");
    }
  }
  if (sum != unit_) throw ContractViolation("idempotents do not sum to the unit");

  // Dickson: rad A is the kernel of (x, y) -> tr(L_{xy}) in characteristic 0.
  Vector tr(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [m, c] : table_[k * d + j])
        if (m == j) tr[k] += c;
  Matrix form(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      for (const auto& [m, c] : table_[k * d + l]) form(k, l) += c * tr[m];
  radical_ = kernel_basis(form);
  if (d - radical_.cols() != n)
    throw ContractViolation(
        "algebra is not split basic: dim A/rad A = " +
        std::to_string(d - radical_.cols()) + " but there are " +
        std::to_string(n) + " idempotents");

  std::vector<Vector> rad;
  for (std::size_t c = 0; c < radical_.cols(); ++c) rad.push_back(radical_.col(c));
  Span rad_span(d);
  for (const auto& r : rad) rad_span.add(r);

  // Loewy length and rad^2.
  Span rad2(d);
  std::vector<Vector> power = rad;
  loewy_length_ = d == 0 ? 0 : 1;
  for (std::size_t level = 1; !power.empty(); ++level) {
    Span next(d);
    for (const auto& p : power)
      for (const auto& r : rad) next.add(multiply(p, r));
    if (level == 1)
      for (const auto& v : next.basis()) rad2.add(v);
    power = next.basis();
    ++loewy_length_;
  }

  auto sandwich = [&](std::size_t j, const Vector& v, std::size_t i) {
    return multiply(multiply(idempotents_[j], v), idempotents_[i]);
  };

  // Arrows: a basis of rad/rad^2 adapted to the idempotents. Basis elements
  // are tried first so quiver algebras keep their own arrows.
  const std::size_t arrow_count = rad.size() - rad2.dim();
  Span chosen = rad2;
  auto consider = [&](const Vector& v, std::size_t i, std::size_t j,
                      const std::string& label) {
    if (arrows_.size() == arrow_count || is_zero(v)) return;
    if (chosen.add(v))
      arrows_.push_back({static_cast<int>(i), static_cast<int>(j), v, label});
  };
  for (std::size_t k = 0; k < d && arrows_.size() < arrow_count; ++k) {
    Vector b = basis_vector(k);
    if (!rad_span.contains(b)) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sandwich(j, b, i) == b) consider(b, i, j, labels_[k]);
  }
  for (const auto& r : rad)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        consider(sandwich(j, r, i), i, j, "x" + std::to_string(arrows_.size()));
  if (arrows_.size() != arrow_count)
    throw ContractViolation("failed to lift rad/rad^2 to arrows");

  // Words in the arrows spanning the algebra.
  Span word_span(d);
  std::vector<std::size_t> level;
  for (std::size_t i = 0; i < n; ++i) {
    word_span.add(idempotents_[i]);
    words_.push_back({static_cast<int>(i), static_cast<int>(i), {}, idempotents_[i]});
    level.push_back(words_.size() - 1);
  }
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t w : level)
      for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].source != words_[w].target) continue;
        Vector v = multiply(arrows_[a].element, words_[w].element);
        if (!word_span.add(v)) continue;
        Word nw{words_[w].source, arrows_[a].target, words_[w].arrows, std::move(v)};
        nw.arrows.push_back(static_cast<int>(a));
        words_.push_back(std::move(nw));
        next.push_back(words_.size() - 1);
      }
    level = std::move(next);
  }
  if (words_.size() != d)
    throw ContractViolation("arrows do not generate the algebra");
  std::vector<Vector> cols;
  for (const auto& w : words_) cols.push_back(w.element);
  word_coords_ = Coordinates(Matrix::from_columns(d, cols));

  std::ostringstream fp;
  fp << d << ';';
  for (std::size_t i = 0; i < table_.size(); ++i)
    for (const auto& [k, c] : table_[i]) fp << i << ':' << k << '=' << c << ',';
  fp << '|';
  for (const auto& e : idempotents_)
    for (const auto& c : e) fp << c << ',';
  fingerprint_ = std::hash<std::string>{}(fp.str());
}

bool BasedAlgebra::same_as(const BasedAlgebra& other) const {
  if (this == &other) return true;
  return fingerprint_ == other.fingerprint_ && dim() == other.dim() &&
         table_ == other.table_ && idempotents_ == other.idempotents_;
}

AlgebraPtr BasedAlgebra::opposite() const {
  if (auto origin = opposite_origin_.lock()) return origin;
  std::call_once(opposite_once_, [this] {
    const std::size_t d = dim();
    std::vector<SparseVector> t(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) t[i * d + j] = table_[j * d + i];
    std::shared_ptr<BasedAlgebra> op(new BasedAlgebra());
    op->labels_ = labels_;
    op->table_ = std::move(t);
    op->unit_ = unit_;
    op->idempotents_ = idempotents_;
    op->vertex_labels_ = vertex_labels_;
    op->opposite_origin_ = weak_from_this();
    op->derive_quiver();
    opposite_ = op;
  });
  return opposite_;
}

bool BasedAlgebra::verify_axioms(std::string* failure) const {
  const std::size_t d = dim();
  auto fail = [&](const std::string& msg) {
    if (failure) *failure = msg;
    return false;
  };
  for (std::size_t i = 0; i < d; ++i) {
    Vector b = basis_vector(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b)
      return fail("unit is not two-sided on basis element " + labels_[i]);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& ij = table_[i * d + j];
      for (std::size_t k = 0; k < d; ++k) {
        Vector left(d), right(d);
        for (const auto& [m, c] : ij)
          for (const auto& [r, c2] : table_[m * d + k]) left[r] += c * c2;
        for (const auto& [m, c] : table_[j * d + k])
          for (const auto& [r, c2] : table_[i * d + m]) right[r] += c * c2;
        if (left != right)
          return fail("associativity fails on (" + labels_[i] + ", " +
                      labels_[j] + ", " + labels_[k] + ")");
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Compilation of bound quiver algebras

namespace {

constexpr std::size_t kPathLimit = 20000;

struct PathTable {
  std::vector<Path> paths;  // ascending length
  std::map<Path, std::size_t> index;
  std::size_t column(std::size_t id) const { return paths.size() - 1 - id; }
};

PathTable enumerate_paths(const Quiver& q, std::size_t max_length) {
  PathTable t;
  std::vector<std::size_t> level;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    t.paths.push_back(Path{static_cast<int>(v), {}});
    level.push_back(t.paths.size() - 1);
  }
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t p : level)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != t.paths[p].target(q)) continue;
        Path np = t.paths[p];
        np.arrows.push_back(static_cast<int>(a));
        np.vertex = np.source(q);
        t.paths.push_back(std::move(np));
        next.push_back(t.paths.size() - 1);
        if (t.paths.size() > kPathLimit)
          throw NotFiniteDimensional(
              "path enumeration exceeded " + std::to_string(kPathLimit) +
              " paths; relations do not bound the algebra");
      }
    level = std::move(next);
  }
  for (std::size_t i = 0; i < t.paths.size(); ++i) t.index[t.paths[i]] = i;
  return t;
}

Path concat(const Quiver& q, const Path& first, const Path& then) {
  if (first.arrows.empty()) return then;
  if (then.arrows.empty()) return first;
  Path r = first;
  r.arrows.insert(r.arrows.end(), then.arrows.begin(), then.arrows.end());
  r.vertex = r.source(q);
  return r;
}

void validate_relations(const BoundQuiverAlgebra& bqa) {
  const Quiver& q = bqa.quiver;
  for (const auto& rel : bqa.relations) {
    int s = -1, t = -1;
    for (const auto& [c, p] : rel.terms) {
      if (sgn(c) == 0) continue;
      if (p.length() < 2)
        throw MalformedRelation("relation term " + path_label(q, p) +
                                " has length < 2 (not admissible)");
      for (std::size_t i = 1; i < p.arrows.size(); ++i)
        if (q.arrows[p.arrows[i - 1]].target != q.arrows[p.arrows[i]].source)
          throw MalformedRelation("relation term does not compose: " +
                                  path_label(q, p));
      if (s < 0) {
        s = p.source(q);
        t = p.target(q);
      } else if (s != p.source(q) || t != p.target(q)) {
        throw MalformedRelation("relation mixes sources/targets at term " +
                                path_label(q, p));
      }
    }
  }
}

}  // namespace

AlgebraPtr compile(const BoundQuiverAlgebra& bqa, std::size_t max_len) {
  if (max_len < 1) throw ContractViolation("compile: max_len must be >= 1");
  validate_relations(bqa);
  const Quiver& q = bqa.quiver;

  for (std::size_t N = 1; N <= max_len + 1; ++N) {
    PathTable pt = enumerate_paths(q, N - 1);
    const std::size_t np = pt.paths.size();
    auto vec_of = [&](const std::vector<std::pair<Scalar, Path>>& terms) {
      Vector v(np);
      for (const auto& [c, p] : terms) {
        if (p.length() >= N) continue;
        v[pt.column(pt.index.at(p))] += c;
      }
      return v;
    };
    Span ideal(np);
    std::vector<Vector> queue;
    for (const auto& rel : bqa.relations) queue.push_back(vec_of(rel.terms));
    while (!queue.empty()) {
      Vector v = std::move(queue.back());
      queue.pop_back();
      if (!ideal.add(v)) continue;
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        Path ap{q.arrows[a].source, {static_cast<int>(a)}};
        std::vector<std::pair<Scalar, Path>> left, right;
        for (std::size_t col = 0; col < np; ++col) {
          if (sgn(v[col]) == 0) continue;
          const Path& p = pt.paths[np - 1 - col];
          if (p.target(q) == q.arrows[a].source) left.emplace_back(v[col], concat(q, p, ap));
          if (q.arrows[a].target == p.source(q)) right.emplace_back(v[col], concat(q, ap, p));
        }
        Vector l = vec_of(left), r = vec_of(right);
        if (!is_zero(l)) queue.push_back(std::move(l));
        if (!is_zero(r)) queue.push_back(std::move(r));
      }
    }

    bool absorbed = true;
    for (std::size_t id = 0; id < np && absorbed; ++id) {
      if (pt.paths[id].length() != N - 1) continue;
      Vector v(np);
      v[pt.column(id)] = 1;
      if (!is_zero(ideal.reduce(v))) absorbed = false;
    }
    if (!absorbed) continue;

    std::vector<bool> pivot(np, false);
    for (auto p : ideal.pivots()) pivot[p] = true;
    std::vector<std::size_t> basis_ids;  // path ids, ascending length
    for (std::size_t id = 0; id < np; ++id)
      if (!pivot[pt.column(id)]) basis_ids.push_back(id);
    const std::size_t d = basis_ids.size();
    std::vector<std::size_t> coord_of_column(np, d);
    for (std::size_t b = 0; b < d; ++b) coord_of_column[pt.column(basis_ids[b])] = b;

    std::vector<std::string> labels;
    for (auto id : basis_ids) labels.push_back(path_label(q, pt.paths[id], bqa.order));
    std::vector<SparseVector> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Path& p = pt.paths[basis_ids[i]];
        const Path& r = pt.paths[basis_ids[j]];
        if (r.target(q) != p.source(q)) continue;
        Path prod = concat(q, r, p);  // p * r = p o r: r acts first
        if (prod.length() >= N) continue;
        Vector v(np);
        v[pt.column(pt.index.at(prod))] = 1;
        v = ideal.reduce(v);
        for (std::size_t col = 0; col < np; ++col) {
          if (sgn(v[col]) == 0) continue;
          table[i * d + j].emplace_back(static_cast<std::uint32_t>(coord_of_column[col]), v[col]);
        }
      }
    Vector unit(d);
    std::vector<Vector> idempotents;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      Vector e(d);
      e[coord_of_column[pt.column(v)]] = 1;
      unit[coord_of_column[pt.column(v)]] = 1;
      idempotents.push_back(std::move(e));
    }
    return BasedAlgebra::create(std::move(labels), std::move(table), std::move(unit),
                                std::move(idempotents), q.vertices);
  }
  throw NotFiniteDimensional("paths of length " + std::to_string(max_len) +
                             " survive modulo the relations");
}

AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  const std::size_t da = a->dim(), db = b->dim(), d = da * db;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      labels.push_back(a->labels()[i] + "|" + b->labels()[j]);
  std::vector<SparseVector> table(d * d);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t j1 = 0; j1 < db; ++j1)
      for (std::size_t i2 = 0; i2 < da; ++i2) {
        const auto& pa = a->product(i1, i2);
        if (pa.empty()) continue;
        for (std::size_t j2 = 0; j2 < db; ++j2) {
          const auto& pb = b->product(j1, j2);
          if (pb.empty()) continue;
          auto& out = table[(i1 * db + j1) * d + (i2 * db + j2)];
          for (const auto& [ka, ca] : pa)
            for (const auto& [kb, cb] : pb)
              out.emplace_back(static_cast<std::uint32_t>(ka * db + kb), ca * cb);
        }
      }
  auto vkron = [&](const Vector& x, const Vector& y) {
    Vector v(d);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) v[i * db + j] = x[i] * y[j];
    return v;
  };
  std::vector<Vector> idem;
  std::vector<std::string> vlabels;
  for (std::size_t i = 0; i < a->vertex_count(); ++i)
    for (std::size_t j = 0; j < b->vertex_count(); ++j) {
      idem.push_back(vkron(a->idempotents()[i], b->idempotents()[j]));
      vlabels.push_back(a->vertex_labels()[i] + "|" + b->vertex_labels()[j]);
    }
  return BasedAlgebra::create(std::move(labels), std::move(table),
                              vkron(a->unit(), b->unit()), std::move(idem),
                              std::move(vlabels));
}

// ---------------------------------------------------------------------------
// Named algebras

BoundQuiverAlgebra preprojective(int n) {
  if (n < 1) throw ContractViolation("preprojective: n must be >= 1");
  BoundQuiverAlgebra b;
  for (int v = 1; v <= n; ++v) b.quiver.add_vertex(std::to_string(v));
  std::vector<int> fwd, bwd;
  for (int i = 1; i < n; ++i) {
    fwd.push_back(b.quiver.add_arrow("a" + std::to_string(i), i - 1, i));
    bwd.push_back(b.quiver.add_arrow("a" + std::to_string(i) + "*", i, i - 1));
  }
  // r_v = sum_{s(a)=v} a* o a - sum_{t(a)=v} a o a*
  for (int v = 0; v < n; ++v) {
    PathExpr r;
    if (v < n - 1) r.terms.emplace_back(1, Path{v, {fwd[v], bwd[v]}});
    if (v > 0) r.terms.emplace_back(-1, Path{v, {bwd[v - 1], fwd[v - 1]}});
    if (!r.terms.empty()) b.relations.push_back(std::move(r));
  }
  return b;
}

BoundQuiverAlgebra gamma_bound_quiver() {
  BoundQuiverAlgebra b;
  for (int v = 1; v <= 4; ++v) b.quiver.add_vertex(std::to_string(v));
  b.quiver.add_arrow("alpha", 0, 3);
  b.quiver.add_arrow("alphastar", 1, 0);
  b.quiver.add_arrow("beta", 1, 2);
  b.quiver.add_arrow("betastar", 2, 3);
  b.quiver.add_arrow("gamma", 3, 1);
  const auto f = CompositionOrder::Functional;
  auto rel = [&](std::initializer_list<std::pair<long, std::vector<std::string>>> terms) {
    PathExpr r;
    for (const auto& [c, labels] : terms) r.terms.emplace_back(c, parse_path(b.quiver, labels, f));
    b.relations.push_back(std::move(r));
  };
  rel({{1, {"beta", "gamma", "betastar"}}});
  rel({{1, {"alphastar", "gamma", "alpha"}}});
  rel({{1, {"alpha", "alphastar"}}, {-1, {"betastar", "beta"}}});
  rel({{1, {"alpha", "alphastar", "gamma"}}});
  return b;
}

BoundQuiverAlgebra linear_quiver(int n) {
  BoundQuiverAlgebra b;
  for (int v = 1; v <= n; ++v) b.quiver.add_vertex(std::to_string(v));
  for (int v = 1; v < n; ++v) b.quiver.add_arrow("a" + std::to_string(v), v - 1, v);
  return b;
}

BoundQuiverAlgebra truncated_loop(int power) {
  if (power < 2) throw ContractViolation("truncated_loop: power must be >= 2");
  BoundQuiverAlgebra b;
  b.quiver.add_vertex("1");
  b.quiver.add_arrow("x", 0, 0);
  PathExpr r;
  r.terms.emplace_back(1, Path{0, std::vector<int>(static_cast<std::size_t>(power), 0)});
  b.relations.push_back(std::move(r));
  return b;
}

AlgebraPtr ground_field() {
  return BasedAlgebra::create({"e1"}, {SparseVector{{0, Scalar(1)}}}, Vector{Scalar(1)},
                              {Vector{Scalar(1)}}, {"1"});
}

AlgebraPtr dual_numbers() { return compile(truncated_loop(2)); }

}  // namespace asc
