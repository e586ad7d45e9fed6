#include <gtest/gtest.h>

#include "asc/approx.hpp"
#include "asc/endo.hpp"
#include "asc/error.hpp"
#include "asc/homology.hpp"

using namespace asc;

namespace {

AlgebraPtr pi3() {
  static AlgebraPtr a = compile(preprojective(3));
  return a;
}

std::vector<Module> worked_parts() {
  std::vector<Module> parts;
  for (int i = 0; i < 3; ++i) parts.push_back(projective(pi3(), i));
  parts.push_back(cokernel(socle(projective(pi3(), 1)).inclusion).module);
  return parts;
}

const EndoPackage& worked_endo() {
  static EndoPackage p = endomorphism_algebra(worked_parts());
  return p;
}

const SubcatContext& pi3_ctx() {
  static SubcatContext c = ambient_context(pi3());
  return c;
}

std::vector<std::pair<int, int>> arrow_pattern(const AlgebraPtr& a) {
  std::vector<std::pair<int, int>> out;
  for (const auto& ar : a->arrows()) out.emplace_back(ar.source, ar.target);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Module> projective_injectives(const AlgebraPtr& a) {
  std::vector<Module> out;
  for (int i = 0; i < static_cast<int>(a->vertex_count()); ++i) {
    Module p = projective(a, i);
    if (is_injective(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Endo, RegularModule) {
  for (const auto& a : {pi3(), dual_numbers(), compile(linear_quiver(3))}) {
    auto pkg = endomorphism_algebra(regular(a));
    EXPECT_EQ(pkg.endo->dim(), a->dim());
    EXPECT_EQ(pkg.endo->vertex_count(), a->vertex_count());
    EXPECT_EQ(arrow_pattern(pkg.endo).size(), a->arrows().size());
    EXPECT_TRUE(pkg.endo->verify_axioms());
  }
  // With reversed composition End(A) has the quiver of A, not of A^op.
  auto a = compile(linear_quiver(3));
  EXPECT_EQ(arrow_pattern(endomorphism_algebra(regular(a)).endo), arrow_pattern(a));
}

TEST(Endo, SimpleOverDualNumbersIsField) {
  auto pkg = endomorphism_algebra(simple(dual_numbers(), 0));
  EXPECT_EQ(pkg.endo->dim(), 1u);
  EXPECT_TRUE(pkg.endo->arrows().empty());
}

TEST(Endo, RepeatedSummandsAreDropped) {
  Module s = simple(pi3(), 0);
  auto pkg = endomorphism_algebra(std::vector<Module>{s, s, projective(pi3(), 0)});
  EXPECT_EQ(pkg.parts.size(), 2u);
  EXPECT_FALSE(pkg.notice.empty());
}

TEST(Endo, WorkedAlgebra) {
  const auto& pkg = worked_endo();
  const auto& g = pkg.endo;
  EXPECT_EQ(g->vertex_count(), 4u);
  EXPECT_EQ(g->dim(), 17u);
  std::string why;
  EXPECT_TRUE(g->verify_axioms(&why)) << why;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) dim += hom_dim(pkg.parts[i], pkg.parts[j]);
  EXPECT_EQ(dim, g->dim());
  // Same quiver, vertex for vertex, as the presentation by generators and
  // relations.
  EXPECT_EQ(arrow_pattern(g), arrow_pattern(compile(gamma_bound_quiver())));
  std::size_t e1 = 0, e2 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto e = ext_range(simple(g, i), simple(g, j), 2);
      e1 += e[1];
      e2 += e[2];
    }
  EXPECT_EQ(e1, 5u);
  EXPECT_EQ(e2, 4u);
}

TEST(HomFunctor, PartsGoToProjectives) {
  const auto& pkg = worked_endo();
  for (std::size_t i = 0; i < pkg.parts.size(); ++i) {
    Module f = hom_functor(pkg, pkg.parts[i]);
    EXPECT_TRUE(is_isomorphic(f, projective(pkg.endo, static_cast<int>(i))));
  }
}

TEST(HomFunctor, DimensionIsSumOfHoms) {
  const auto& pkg = worked_endo();
  for (const auto& x : pi3_ctx().indecomposables) {
    std::size_t d = 0;
    for (const auto& p : pkg.parts) d += hom_dim(p, x);
    EXPECT_EQ(hom_functor(pkg, x).dim(), d);
  }
}

TEST(HomFunctor, Functorial) {
  const auto& pkg = worked_endo();
  const auto& c = pi3_ctx();
  const Module& x = c.indecomposables[0];
  for (const auto& y : c.indecomposables) {
    for (const auto& f : hom_basis(x, y)) {
      ModuleMap hf = hom_functor(pkg, f);
      EXPECT_TRUE(hf.is_intertwiner());
      for (const auto& g : hom_basis(y, x)) {
        ModuleMap lhs = hom_functor(pkg, g * f);
        ModuleMap rhs = hom_functor(pkg, g) * hf;
        EXPECT_EQ(lhs.matrix(), rhs.matrix());
      }
    }
  }
}

TEST(HomFunctor, YonedaTransfer) {
  const auto& pkg = worked_endo();
  const auto& c = pi3_ctx();
  std::vector<Module> images;
  for (const auto& x : c.indecomposables) images.push_back(hom_functor(pkg, x));
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      EXPECT_EQ(hom_dim(images[a], images[b]), hom_dim(c.indecomposables[a], c.indecomposables[b]));
}

TEST(HomFunctor, ExtTransfer) {
  const auto& pkg = worked_endo();
  AddCategory m(worked_parts());
  const auto& c = pi3_ctx();
  for (std::size_t a = 0; a < c.size(); a += 2) {
    Module fx = hom_functor(pkg, c.indecomposables[a]);
    for (std::size_t b = 1; b < c.size(); b += 2) {
      Module fy = hom_functor(pkg, c.indecomposables[b]);
      EXPECT_EQ(ext_range(fx, fy, 3), rel_ext_range(c.indecomposables[a], c.indecomposables[b], m, 3))
          << c.names[a] << " " << c.names[b];
    }
  }
}

TEST(HomFunctor, InjectivityTransfer) {
  const auto& pkg = worked_endo();
  for (const auto& x : pi3_ctx().indecomposables)
    EXPECT_EQ(is_injective(hom_functor(pkg, x)), is_injective(x));
}

TEST(Torsion, ProjectivesAndSelfinjective) {
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(torsion_decompose(projective(pi3(), i)).torsion.module.is_zero());
  for (const auto& x : pi3_ctx().indecomposables) {
    auto t = torsion_decompose(x);
    EXPECT_TRUE(t.torsion.module.is_zero());
    EXPECT_EQ(t.free.module.dim(), x.dim());
  }
}

TEST(Torsion, TorsionSimpleOverEndomorphismAlgebra) {
  const auto& g = worked_endo().endo;
  std::size_t torsion_simples = 0;
  for (int i = 0; i < 4; ++i) {
    Module s = simple(g, i);
    auto t = torsion_decompose(s);
    bool killed = hom_dim(s, regular(g)) == 0;
    EXPECT_EQ(t.torsion.module.dim(), killed ? 1u : 0u);
    if (killed) ++torsion_simples;
  }
  EXPECT_GE(torsion_simples, 1u);
  // Every module splits into a torsion submodule and a torsionfree quotient.
  Module x = injective(g, 3);
  auto t = torsion_decompose(x);
  EXPECT_EQ(hom_dim(t.torsion.module, regular(g)), 0u);
  EXPECT_TRUE(AddCategory::of(regular(g)).left_approx(t.free.module).map.is_injective() ||
              t.free.module.is_zero());
}

TEST(DHom, RegularAndTorsion) {
  const auto& g = worked_endo().endo;
  auto pi = projective_injectives(g);
  ASSERT_FALSE(pi.empty());
  auto ipkg = endomorphism_algebra(pi);
  Module d = dhom_functor(ipkg, regular(g));
  std::size_t total = 0;
  for (const auto& p : ipkg.parts) total += p.dim();
  EXPECT_EQ(d.dim(), total);
  for (int i = 0; i < 4; ++i) {
    Module s = simple(g, i);
    if (hom_dim(s, regular(g)) == 0) EXPECT_TRUE(dhom_functor(ipkg, s).is_zero());
  }
  EXPECT_THROW(dhom_functor(endomorphism_algebra(regular(g)), simple(g, 0)), ContractViolation);
}

TEST(DHom, FullyFaithfulOnSecondSyzygies) {
  const auto& g = worked_endo().endo;
  auto ipkg = endomorphism_algebra(projective_injectives(g));
  std::vector<Module> syz;
  for (int i = 0; i < 4; ++i) {
    for (const auto& x : {simple(g, i), injective(g, i)}) {
      Module s = syzygy(x, 2);
      if (!s.is_zero()) syz.push_back(s);
    }
  }
  for (const auto& x : syz)
    for (const auto& y : syz)
      EXPECT_EQ(hom_dim(dhom_functor(ipkg, x), dhom_functor(ipkg, y)), hom_dim(x, y));
}
