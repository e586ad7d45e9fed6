#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asc/modrep.hpp"

namespace asc {

inline constexpr std::size_t kDefaultCap = 24;

// Minimal projective resolution ... -> P_1 -> P_0 -> x -> 0, computed to a
// fixed length. syzygies[k] is Omega^k x (syzygies[0] = x) and covers[k] is
// the projective cover P_k -> Omega^k x.
struct ProjResolution {
  Module x;
  std::vector<ProjectiveCover> covers;
  std::vector<Sub> syzygies;  // syzygies[k].inclusion : Omega^k x -> P_{k-1}
  bool terminated = false;    // some syzygy became zero

  const Module& term(std::size_t k) const { return covers[k].sum.module; }
  // d_k : P_k -> P_{k-1} for k >= 1.
  ModuleMap differential(std::size_t k) const;
  // True if every differential lands in the radical of its target.
  bool is_minimal() const;
};

ProjResolution min_proj_resolution(const Module& x, std::size_t length);

// dim Ext^i(x, y), by dimension shift along the minimal resolution.
std::size_t ext(const Module& x, const Module& y, std::size_t i);
// dim Ext^i(x, y) for i = 0..max_i from one resolution.
std::vector<std::size_t> ext_range(const Module& x, const Module& y, std::size_t max_i);

struct ShortExact {
  ModuleMap f;  // a -> b
  ModuleMap g;  // b -> c
  const Module& left() const { return f.source(); }
  const Module& middle() const { return f.target(); }
  const Module& right() const { return g.target(); }
  bool is_exact() const;
};

// Representatives 0 -> y -> E -> x -> 0 of a basis of Ext^1(x, y).
std::vector<ShortExact> ext1_basis(const Module& x, const Module& y);

// Omega^0 strips projective summands; for i >= 1 the kernel of the minimal
// cover of Omega^{i-1}.
Module syzygy(const Module& x, std::size_t i);
// Dual construction; the zeroth cosyzygy strips injective summands.
Module cosyzygy(const Module& x, std::size_t i);

// Auslander-Bridger transpose, a module over the opposite algebra.
Module transpose(const Module& x);
Module tau(const Module& x);
Module tau_minus(const Module& x);
Module tau_n(const Module& x, std::size_t n);
Module tau_n_minus(const Module& x, std::size_t n);

struct DimensionVerdict {
  enum class Kind { Projective, Injective, Global, Dominant };
  enum class Status { Finite, Infinite, Inconclusive };
  Kind kind = Kind::Projective;
  Status status = Status::Finite;
  // The dimension when finite; a proven lower bound when inconclusive.
  std::size_t value = 0;
  std::string certificate;

  bool is_finite() const { return status == Status::Finite; }
  // nullopt when the verdict is inconclusive for this bound.
  std::optional<bool> at_most(std::size_t n) const;
  std::optional<bool> at_least(std::size_t n) const;
  std::string to_string() const;
};

DimensionVerdict projective_dimension(const Module& x, std::size_t cap = kDefaultCap);
DimensionVerdict injective_dimension(const Module& x, std::size_t cap = kDefaultCap);
DimensionVerdict global_dimension(const AlgebraPtr& a, std::size_t cap = kDefaultCap);
DimensionVerdict dominant_dimension(const AlgebraPtr& a, std::size_t cap = kDefaultCap);

bool is_selfinjective(const AlgebraPtr& a);
// Injective dimensions of A as a left and as a right module.
std::pair<DimensionVerdict, DimensionVerdict> gorenstein_dimensions(
    const AlgebraPtr& a, std::size_t cap = kDefaultCap);
// Ext^i(x, A) = 0 for 1 <= i <= id A, which is conclusive over a Gorenstein
// algebra. nullopt if A is not certified Gorenstein within cap.
std::optional<bool> is_gorenstein_projective(const Module& x, std::size_t cap = kDefaultCap);

}  // namespace asc
