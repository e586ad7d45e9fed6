#pragma once

#include <string>
#include <vector>

#include "asc/modrep.hpp"

namespace asc {

// The basic endomorphism algebra of M = (+) parts. Its basis is the union of
// Hom bases of Hom(parts[i], parts[j]) and the product is reversed
// composition, b * b' = b' o b, so that Hom(M, -) lands in left modules and
// End(A) of the regular module is A itself. The vertex of part i carries
// the identity of parts[i].
struct EndoPackage {
  AlgebraPtr source;
  std::vector<Module> parts;
  AlgebraPtr endo;
  std::string notice;  // set when repeated summands were dropped

  const std::vector<ModuleMap>& hom(std::size_t i, std::size_t j) const {
    return homs[i * parts.size() + j];
  }
  // Index in the endo basis of the k-th basis map of Hom(parts[i], parts[j]).
  std::size_t basis_index(std::size_t i, std::size_t j, std::size_t k) const {
    return offsets[i * parts.size() + j] + k;
  }

  std::vector<std::vector<ModuleMap>> homs;
  std::vector<std::size_t> offsets;
};

EndoPackage endomorphism_algebra(const std::vector<Module>& parts);
// Decomposes m and keeps one part per isomorphism class.
EndoPackage endomorphism_algebra(const Module& m);

// (+)_i Hom(parts[i], x) with End(M) acting by precomposition.
Module hom_functor(const EndoPackage& pkg, const Module& x);
// The map Hom(M, f) between hom_functor images.
ModuleMap hom_functor(const EndoPackage& pkg, const ModuleMap& f);

// D Hom(x, I) over End(I) for I = (+) pkg.parts. Throws ContractViolation
// unless every part is projective-injective.
Module dhom_functor(const EndoPackage& pkg, const Module& x);

// x = tX + fX: tX is the largest submodule with Hom(tX, A) = 0 and
// fX = x / tX embeds into a free module.
struct TorsionDecomposition {
  Sub torsion;
  Quot free;
};
TorsionDecomposition torsion_decompose(const Module& x);

}  // namespace asc
