#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asc/approx.hpp"
#include "asc/endo.hpp"

namespace asc {

struct Condition {
  std::string label;
  Verdict verdict = Verdict::Inconclusive;
  std::string witness;  // set on failure
  std::string note;
};

struct CheckReport {
  std::string predicate;
  std::size_t n = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Condition> conditions;
  std::string context;
  std::vector<std::string> certificates;
  std::vector<std::string> members;  // names of the parts of M, sorted

  Condition& add(std::string label, Verdict v, std::string witness = {}, std::string note = {});
  const Condition* find(const std::string& label) const;
  // Verdict = combination of all conditions.
  void finalize();
  bool passed() const { return verdict == Verdict::Pass; }
  std::string to_json() const;  // canonical key order
};

// Names for the parts of M: the context names when ctx is given.
std::vector<std::string> part_names(const AddCategory& m, const SubcatContext* ctx = nullptr);

CheckReport is_gen_cogen(const AddCategory& m, const SubcatContext& ctx);
CheckReport is_n_rigid(const AddCategory& m, std::size_t n);

// tau_n-closure definition: (i) generator-cogenerator, (ii) tau_n and
// tau_n^- closure, (iii) n-rigid, (iv) functorially finite.
CheckReport is_precluster_IS(const AddCategory& m, std::size_t n, std::size_t cap = kDefaultCap);

// Subcategory definition (a)-(f) over a context; `partial` omits (f).
// With stop_at_failure, conditions after a failing one are recorded as
// skipped (Inconclusive); the overall verdict is unchanged.
CheckReport is_precluster_subcat(const AddCategory& m, const SubcatContext& ctx, std::size_t n,
                                 bool partial = false, std::size_t cap = kDefaultCap,
                                 bool stop_at_failure = false);

// Left and right (n-1)-perpendiculars of M agree over ctx. Throws
// ContractViolation for n = 1.
CheckReport symmetric_orthogonality(const AddCategory& m, const SubcatContext& ctx, std::size_t n);
// Both (n-1)-perpendiculars equal add M over ctx. Throws for n = 1.
CheckReport is_cluster_tilting(const AddCategory& m, const SubcatContext& ctx, std::size_t n);

// id A <= n+1 <= domdim A; `partial` drops the Gorenstein condition on the
// opposite side (projectives cotilting).
CheckReport is_min_AG_algebra(const AlgebraPtr& a, std::size_t n, bool partial = false,
                              std::size_t cap = kDefaultCap);
// Dominant dimension at least 2, plus the torsion pair axioms on ctx.
CheckReport is_morita_tachikawa(const AlgebraPtr& a, const SubcatContext& ctx,
                                std::size_t cap = kDefaultCap);
// Both sides of the correspondence for M over its algebra, checked
// independently and compared.
CheckReport verify_correspondence(const AddCategory& m, std::size_t n,
                                  std::size_t cap = kDefaultCap);

// Every subcategory add(must_contain + S) for S a subset of the remaining
// members of ctx that passes is_precluster_subcat, in canonical order.
// must_contain defaults to the projective and injective members.
std::vector<CheckReport> enumerate_precluster(const SubcatContext& ctx, std::size_t n,
                                              std::optional<std::vector<std::size_t>> must_contain = {},
                                              bool partial = false, std::size_t cap = kDefaultCap);

// Modules over A (x) B built from Kronecker actions.
Module tensor_module(const AlgebraPtr& ab, const Module& x, const Module& y);

struct TensorOptions {
  std::size_t samples = 20;
  unsigned seed = 1;
};
// M (x) G in the perpendicular category of T (x) G for a selfinjective G.
CheckReport check_tensor_precluster(const AlgebraPtr& lambda, const std::vector<Module>& t_parts,
                                    const AddCategory& m, const AlgebraPtr& g, std::size_t n,
                                    const SubcatContext& lambda_ctx, TensorOptions opts = {},
                                    std::size_t cap = kDefaultCap);

}  // namespace asc
