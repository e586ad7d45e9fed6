#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asc/homology.hpp"
#include "asc/modrep.hpp"

namespace asc {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);
Verdict verdict_of(bool b);
// Fail dominates Inconclusive dominates Pass.
Verdict combine(Verdict a, Verdict b);

// A finite list of pairwise non-isomorphic indecomposables standing in for
// an exact subcategory. Ext groups are always the ambient ones.
struct SubcatContext {
  AlgebraPtr algebra;
  std::vector<Module> indecomposables;
  std::vector<std::string> names;
  std::vector<std::size_t> projective_members;  // projective objects
  std::vector<std::size_t> injective_members;   // injective objects
  bool ambient = false;
  std::string description;

  std::size_t size() const { return indecomposables.size(); }
  std::optional<std::size_t> index_of(const Module& indecomposable) const;
  // Throws ContractViolation when an invariant fails.
  void validate() const;
};

// Closure of `seeds` under radical, quotient by socle, syzygy, cosyzygy,
// tau, tau^- and indecomposable summands, plus all indecomposable
// projectives and injectives. Complete for representation-finite algebras
// whose components are reached; throws Unsupported past max_size.
SubcatContext ambient_context(const AlgebraPtr& a, const std::vector<Module>& seeds = {},
                              std::size_t max_size = 256);
// Gorenstein projective indecomposables generated from the Gorenstein
// projective members of `seeds` under syzygy and projective cosyzygy; the
// projectives are both the projective and the injective objects.
SubcatContext gorenstein_projective_context(const AlgebraPtr& a, const std::vector<Module>& seeds,
                                            std::size_t cap = kDefaultCap);
// Names modules of the standard families (P, I, S, JP) when recognizable.
std::string standard_name(const Module& x);

// add(M) for a list of pairwise non-isomorphic indecomposables, with the
// radical maps between them precomputed.
class AddCategory {
 public:
  explicit AddCategory(std::vector<Module> parts);
  // Splits m into indecomposables and keeps one per isomorphism class.
  static AddCategory of(const Module& m);

  const std::vector<Module>& parts() const { return parts_; }
  const AlgebraPtr& algebra() const { return parts_.front().algebra(); }
  std::size_t size() const { return parts_.size(); }
  Module sum() const;  // direct sum of the parts
  bool contains(const Module& x) const;
  std::optional<std::size_t> index_of(const Module& indecomposable) const;
  // Basis of rad(parts[i], parts[j]).
  const std::vector<ModuleMap>& radical_maps(std::size_t i, std::size_t j) const {
    return rad_[i * parts_.size() + j];
  }

  struct Approximation {
    ModuleMap map;
    std::vector<std::size_t> parts;  // part index of each summand
  };
  // Right approximation M' -> x with one summand per element of a Hom basis,
  // or the minimal one when `minimal` is set. Throws NotGenerator if
  // require_epi is set and the map is not surjective.
  Approximation right_approx(const Module& x, bool minimal = false, bool require_epi = true) const;
  // Left approximation x -> M'.
  Approximation left_approx(const Module& x, bool minimal = false) const;

 private:
  std::vector<Module> parts_;
  std::vector<std::vector<ModuleMap>> rad_;
};

// x = K_0, M_k -> K_k right approximations with kernels K_{k+1}.
struct MResolution {
  std::vector<AddCategory::Approximation> steps;
  std::vector<Sub> kernels;  // kernels[k] = K_{k+1} inside M_k
  bool terminated = false;
  const Module& syzygy(std::size_t k) const;  // K_k, k <= steps.size()
  Module x;
};
MResolution m_resolution(const Module& x, const AddCategory& m, std::size_t length,
                         bool minimal = false);

// x = C^0, C^k -> M^k left approximations with cokernels C^{k+1}.
struct MCoresolution {
  std::vector<AddCategory::Approximation> steps;
  std::vector<Quot> cokernels;
  bool terminated = false;
  Module x;
};
MCoresolution m_coresolution(const Module& x, const AddCategory& m, std::size_t length,
                             bool minimal = false);

// dim Ext^i_{F_M}(x, y) for i = 0..max_i, by dimension shift along an
// M-resolution.
std::vector<std::size_t> rel_ext_range(const Module& x, const Module& y, const AddCategory& m,
                                       std::size_t max_i);
std::size_t rel_ext(const Module& x, const Module& y, const AddCategory& m, std::size_t i);

// Throws NotGenerator unless every projective and injective object of ctx
// lies in add M.
void require_generator_cogenerator(const AddCategory& m, const SubcatContext& ctx);
bool is_generator_cogenerator(const AddCategory& m, const SubcatContext& ctx);

// id_{F_M} M < n over ctx: Ext^n_{F_M}(x, m) = 0 for all x in ctx, m in M.
bool rel_inj_dim_below(const AddCategory& m, const SubcatContext& ctx, std::size_t n);

enum class Side { Left, Right };
// Indices of ctx members in the left perpendicular (Ext^i(x, M) = 0) or
// right perpendicular (Ext^i(M, x) = 0) for 1 <= i <= k.
std::vector<std::size_t> perp(const AddCategory& m, const SubcatContext& ctx, std::size_t k,
                              Side side);

struct CotiltingResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<std::size_t> witness;  // ctx index of an offending module
  std::vector<std::size_t> left_perp;  // ctx members in the F_M left perp
  std::size_t degree_bound = 0;        // Ext_{F_M} checked up to this degree
  std::string detail;
};
// M is F_M-cotilting over ctx: every x with Ext_{F_M}^{>0}(x, M) = 0 has an
// F_M-exact sequence x -> M' -> x' with x' again in that perpendicular.
// Decided with the minimal left approximation of each such x.
CotiltingResult rel_cotilting(const AddCategory& m, const SubcatContext& ctx,
                              std::size_t cap = kDefaultCap);
// n > 1: rel_cotilting; n = 1 over an ambient context: tau-closure
// add M = add(tau M + injectives) and its dual.
CotiltingResult is_rel_cotilting(const AddCategory& m, const SubcatContext& ctx, std::size_t n,
                                 std::size_t cap = kDefaultCap);

// Hom(M, -) (resp. Hom(-, M)) exactness of 0 -> a -> b -> c -> 0, tested on
// dimensions.
bool is_hom_exact_from(const AddCategory& m, const Module& a, const Module& b, const Module& c);
bool is_hom_exact_to(const AddCategory& m, const Module& a, const Module& b, const Module& c);

}  // namespace asc
