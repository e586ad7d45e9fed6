#include "asc/endo.hpp"

#include "asc/error.hpp"

namespace asc {

namespace {

Vector flatten(const ModuleMap& f) {
  Vector v;
  for (const auto& b : f.blocks()) v.insert(v.end(), b.data().begin(), b.data().end());
  return v;
}

std::size_t flat_size(const Module& x, const Module& y) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.algebra()->vertex_count(); ++i) n += x.dim_at(i) * y.dim_at(i);
  return n;
}

// Coordinates with respect to a Hom basis.
struct HomCoords {
  std::vector<ModuleMap> basis;
  Coordinates coords;

  HomCoords(const Module& x, const Module& y) : basis(hom_basis(x, y)) {
    if (basis.empty()) return;
    std::vector<Vector> cols;
    for (const auto& f : basis) cols.push_back(flatten(f));
    coords = Coordinates(Matrix::from_columns(flat_size(x, y), cols));
  }
  Vector of(const ModuleMap& f) const {
    if (basis.empty()) return {};
    return coords.of(flatten(f));
  }
};

}  // namespace

EndoPackage endomorphism_algebra(const std::vector<Module>& input) {
  if (input.empty()) throw ContractViolation("endomorphism algebra of the zero module");
  EndoPackage pkg;
  pkg.source = input.front().algebra();
  std::size_t dropped = 0;
  for (const auto& p : input) {
    if (p.is_zero()) throw ContractViolation("zero part");
    if (find_isomorphic(p, pkg.parts)) {
      ++dropped;
      continue;
    }
    pkg.parts.push_back(p);
  }
  if (dropped > 0)
    pkg.notice = std::to_string(dropped) + " repeated summand(s) dropped; End(M) is Morita equivalent";

  const std::size_t k = pkg.parts.size();
  std::vector<HomCoords> coords;
  coords.reserve(k * k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      coords.emplace_back(pkg.parts[i], pkg.parts[j]);
      pkg.offsets.push_back(labels.size());
      pkg.homs.push_back(coords.back().basis);
      for (std::size_t b = 0; b < coords.back().basis.size(); ++b)
        labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(b) + ")");
    }
  }
  const std::size_t dim = labels.size();
  // Owner pair of each basis element.
  std::vector<std::pair<std::size_t, std::size_t>> owner(dim);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t b = 0; b < pkg.hom(i, j).size(); ++b) owner[pkg.basis_index(i, j, b)] = {i, j};

  std::vector<SparseVector> table(dim * dim);
  for (std::size_t s = 0; s < dim; ++s) {
    auto [i, j] = owner[s];
    const ModuleMap& f = pkg.homs[i * k + j][s - pkg.offsets[i * k + j]];
    for (std::size_t t = 0; t < dim; ++t) {
      auto [j2, l] = owner[t];
      if (j2 != j) continue;
      const ModuleMap& g = pkg.homs[j * k + l][t - pkg.offsets[j * k + l]];
      Vector c = coords[i * k + l].of(g * f);
      SparseVector& out = table[s * dim + t];
      for (std::size_t r = 0; r < c.size(); ++r)
        if (c[r] != 0) out.emplace_back(static_cast<std::uint32_t>(pkg.basis_index(i, l, r)), c[r]);
    }
  }
  std::vector<Vector> idempotents;
  std::vector<std::string> vertex_labels;
  Vector unit(dim);
  for (std::size_t i = 0; i < k; ++i) {
    Vector e(dim);
    Vector c = coords[i * k + i].of(ModuleMap::identity(pkg.parts[i]));
    for (std::size_t r = 0; r < c.size(); ++r) e[pkg.basis_index(i, i, r)] = c[r];
    for (std::size_t r = 0; r < dim; ++r) unit[r] += e[r];
    idempotents.push_back(std::move(e));
    vertex_labels.push_back(std::to_string(i + 1));
  }
  pkg.endo = BasedAlgebra::create(std::move(labels), std::move(table), std::move(unit),
                                  std::move(idempotents), std::move(vertex_labels));
  return pkg;
}

EndoPackage endomorphism_algebra(const Module& m) { return endomorphism_algebra(decompose(m).modules()); }

Module hom_functor(const EndoPackage& pkg, const Module& x) {
  const std::size_t k = pkg.parts.size();
  std::vector<HomCoords> coords;
  std::vector<std::size_t> off;
  std::size_t total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    coords.emplace_back(pkg.parts[i], x);
    off.push_back(total);
    total += coords.back().basis.size();
  }
  std::vector<Matrix> actions(pkg.endo->dim(), Matrix(total, total));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // b in Hom(M_i, M_j) sends phi in Hom(M_j, x) to phi o b.
      for (std::size_t b = 0; b < pkg.hom(i, j).size(); ++b) {
        Matrix& act = actions[pkg.basis_index(i, j, b)];
        for (std::size_t c = 0; c < coords[j].basis.size(); ++c) {
          Vector v = coords[i].of(coords[j].basis[c] * pkg.hom(i, j)[b]);
          for (std::size_t r = 0; r < v.size(); ++r) act(off[i] + r, off[j] + c) = v[r];
        }
      }
    }
  }
  return module_from_action(pkg.endo, actions, false);
}

ModuleMap hom_functor(const EndoPackage& pkg, const ModuleMap& f) {
  Module hx = hom_functor(pkg, f.source());
  Module hy = hom_functor(pkg, f.target());
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < pkg.parts.size(); ++i) {
    HomCoords cx(pkg.parts[i], f.source());
    HomCoords cy(pkg.parts[i], f.target());
    Matrix b(cy.basis.size(), cx.basis.size());
    for (std::size_t c = 0; c < cx.basis.size(); ++c) {
      Vector v = cy.of(f * cx.basis[c]);
      for (std::size_t r = 0; r < v.size(); ++r) b(r, c) = v[r];
    }
    blocks.push_back(std::move(b));
  }
  return ModuleMap(hx, hy, std::move(blocks));
}

Module dhom_functor(const EndoPackage& pkg, const Module& x) {
  for (const auto& p : pkg.parts)
    if (!is_projective(p) || !is_injective(p))
      throw ContractViolation("D Hom(-, I) needs projective-injective parts");
  const std::size_t k = pkg.parts.size();
  std::vector<HomCoords> coords;
  std::vector<std::size_t> off;
  std::size_t total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    coords.emplace_back(x, pkg.parts[i]);
    off.push_back(total);
    total += coords.back().basis.size();
  }
  // Right action psi . b = b o psi on Hom(x, I); its transpose is the left
  // action on the dual.
  std::vector<Matrix> actions(pkg.endo->dim(), Matrix(total, total));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t b = 0; b < pkg.hom(i, j).size(); ++b) {
        Matrix right(total, total);
        for (std::size_t c = 0; c < coords[i].basis.size(); ++c) {
          Vector v = coords[j].of(pkg.hom(i, j)[b] * coords[i].basis[c]);
          for (std::size_t r = 0; r < v.size(); ++r) right(off[j] + r, off[i] + c) = v[r];
        }
        actions[pkg.basis_index(i, j, b)] = right.transpose();
      }
    }
  }
  return module_from_action(pkg.endo, actions, false);
}

TorsionDecomposition torsion_decompose(const Module& x) {
  Sub t = reject(x, regular(x.algebra()));
  return {t, cokernel(t.inclusion)};
}

}  // namespace asc
