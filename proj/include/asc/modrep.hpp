#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asc/algebra.hpp"
#include "asc/arith.hpp"

namespace asc {

// A finite-dimensional left module, stored as a representation of the
// derived Gabriel quiver of its algebra: a vector space per vertex and one
// matrix per arrow (shape dim(target) x dim(source)). Copies share data.
class Module {
 public:
  Module() = default;
  // Throws ContractViolation if the arrow matrices have the wrong shapes or
  // (when check is set) violate the relations of the algebra.
  Module(AlgebraPtr algebra, std::vector<std::size_t> dims,
         std::vector<Matrix> arrows, bool check = true);
  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return d_->algebra; }
  std::size_t dim() const { return d_ ? d_->total : 0; }
  bool is_zero() const { return dim() == 0; }
  const std::vector<std::size_t>& dims() const { return d_->dims; }
  std::size_t dim_at(int vertex) const { return d_->dims[vertex]; }
  std::size_t offset(int vertex) const { return d_->offsets[vertex]; }
  const std::vector<Matrix>& arrows() const { return d_->arrows; }
  const Matrix& arrow(std::size_t a) const { return d_->arrows[a]; }

  // Block of the action of `element` mapping vertex `from` to vertex `to`.
  Matrix block_action(const Vector& element, int from, int to) const;
  // Action of a word (product of arrow matrices), source block to target block.
  Matrix word_action(const BasedAlgebra::Word& w) const;
  // Full dim x dim matrix of the action of an algebra element.
  Matrix action(const Vector& element) const;

  // "(d1,d2,...)"
  std::string dimension_vector() const;

 private:
  struct Data {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    std::vector<Matrix> arrows;
  };
  std::shared_ptr<const Data> d_;
};

// A module homomorphism, stored as one block per vertex
// (dim target_i x dim source_i).
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(Module source, Module target, std::vector<Matrix> blocks,
            bool check = false);
  static ModuleMap zero(const Module& source, const Module& target);
  static ModuleMap identity(const Module& m);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  const Matrix& block(int vertex) const { return blocks_[vertex]; }
  Matrix matrix() const;  // full block-diagonal matrix
  std::size_t rank() const;
  bool is_zero() const;
  bool is_intertwiner() const;
  bool is_injective() const { return rank() == source_.dim(); }
  bool is_surjective() const { return rank() == target_.dim(); }

  ModuleMap& operator+=(const ModuleMap& o);
  ModuleMap& operator*=(const Scalar& s);
  friend ModuleMap operator+(ModuleMap a, const ModuleMap& b) { return a += b; }
  friend ModuleMap operator-(ModuleMap a, const ModuleMap& b) {
    return a += b * Scalar(-1);
  }
  friend ModuleMap operator*(ModuleMap a, const Scalar& s) { return a *= s; }
  // g * f is the composite g o f.
  friend ModuleMap operator*(const ModuleMap& g, const ModuleMap& f);

 private:
  Module source_;
  Module target_;
  std::vector<Matrix> blocks_;
};

// A module together with its inclusion into (or projection from) another.
struct Sub {
  Module module;
  ModuleMap inclusion;
};
struct Quot {
  Module module;
  ModuleMap projection;
};

Module simple(const AlgebraPtr& a, int i);
Module projective(const AlgebraPtr& a, int i);
Module injective(const AlgebraPtr& a, int i);
Module regular(const AlgebraPtr& a);
// D(A_A) as a left A-module: the direct sum of the indecomposable injectives.
Module cogenerator(const AlgebraPtr& a);

// Builds a module from full action matrices, one per algebra basis element.
Module module_from_action(const AlgebraPtr& a, const std::vector<Matrix>& actions,
                          bool check = true);
// Restriction along an algebra homomorphism phi: b -> x.algebra(), given by
// the images of the basis elements of b.
Module restrict_scalars(const Module& x, const AlgebraPtr& b,
                        const std::vector<Vector>& images);

std::vector<ModuleMap> hom_basis(const Module& x, const Module& y);
std::size_t hom_dim(const Module& x, const Module& y);

// Per-vertex subspace (columns) closed under the arrows.
Sub submodule(const Module& x, const std::vector<Matrix>& subspace);
Quot quotient(const Module& x, const std::vector<Matrix>& subspace);
Sub kernel(const ModuleMap& f);
Sub image(const ModuleMap& f);
Quot cokernel(const ModuleMap& f);

Sub radical(const Module& x);
Quot top(const Module& x);
Sub socle(const Module& x);

// Module over the opposite algebra with transposed actions.
Module dual(const Module& x);
// Dual of a map f: x -> y is D(f): D(y) -> D(x).
ModuleMap dual(const ModuleMap& f);

struct DirectSum {
  Module module;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts);
Module direct_sum(const Module& x, const Module& y);
Module power(const Module& x, std::size_t n);
// [f_1 ... f_k] : (+) source_i -> y from maps f_i : source_i -> y.
ModuleMap row_map(const DirectSum& sum, const std::vector<ModuleMap>& maps,
                  const Module& target);
// (g_1; ...; g_k) : x -> (+) target_i from maps g_i : x -> target_i.
ModuleMap column_map(const DirectSum& sum, const std::vector<ModuleMap>& maps,
                     const Module& source);

// Minimal projective cover: an epimorphism from a direct sum of
// indecomposable projectives, one summand per simple in top(x).
struct ProjectiveCover {
  ModuleMap map;
  std::vector<int> vertices;  // vertex of each summand, in summand order
  DirectSum sum;
};
ProjectiveCover minimal_projective_cover(const Module& x);
ModuleMap projective_cover(const Module& x);
// The map P_i -> P_j, x -> x u, for u in e_i A e_j.
ModuleMap projective_map(const AlgebraPtr& a, int i, int j, const Vector& u);
// The algebra element of A e_i with coordinates `coords` in the block of
// projective(a, i) at vertex t.
Vector projective_element(const AlgebraPtr& a, int i, int t, const Vector& coords);
// Monomorphism into a direct sum of indecomposable injectives, minimal.
ModuleMap injective_envelope(const Module& x);
// Number of copies of S_i in top(x), per vertex.
std::vector<std::size_t> top_multiplicities(const Module& x);

struct Decomposition {
  struct Part {
    Module module;
    std::size_t multiplicity = 0;
    // One inclusion/projection per copy; projections[c] * inclusions[c] = id
    // and the sum of inclusions[c] * projections[c] over all copies is id.
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
  };
  std::vector<Part> parts;
  std::size_t summand_count() const;
  std::vector<Module> modules() const;  // one per isomorphism class
};

// Dimension of End(x)/rad End(x), read off as the rank of the trace form
// (f, g) -> tr(fg) on End(x).
std::size_t semisimple_endo_rank(const Module& x);
bool is_local(const Module& x);  // certified indecomposable with End/rad = k

Decomposition decompose(const Module& x);
// Isomorphism between indecomposables if one exists.
std::optional<ModuleMap> find_isomorphism_local(const Module& x, const Module& y);
bool is_isomorphic(const Module& x, const Module& y);
bool in_add(const Module& x, const Decomposition& m);
bool in_add(const Module& x, const std::vector<Module>& indecomposables);
// Index of the part of `indecomposables` isomorphic to the indecomposable x.
std::optional<std::size_t> find_isomorphic(const Module& x,
                                           const std::vector<Module>& indecomposables);

// Largest submodule annihilated by every map x -> p.
Sub reject(const Module& x, const Module& p);

bool is_projective(const Module& x);
bool is_injective(const Module& x);
// Strips projective summands (resp. injective summands).
Module drop_projective_summands(const Module& x);
Module drop_injective_summands(const Module& x);

}  // namespace asc
