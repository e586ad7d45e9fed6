#include <gtest/gtest.h>

#include <random>

#include "asc/algebra.hpp"
#include "asc/error.hpp"
#include "asc/homology.hpp"
#include "asc/modrep.hpp"

using namespace asc;

namespace {

AlgebraPtr pi3() {
  static AlgebraPtr a = compile(preprojective(3));
  return a;
}
AlgebraPtr gam() {
  static AlgebraPtr a = compile(gamma_bound_quiver());
  return a;
}

Module worked_m() {
  Module p2 = projective(pi3(), 1);
  return direct_sum(regular(pi3()), cokernel(socle(p2).inclusion).module);
}

Vector flatten(const ModuleMap& f) {
  Vector v;
  for (const auto& b : f.blocks()) v.insert(v.end(), b.data().begin(), b.data().end());
  return v;
}

// Oracle: cohomology of Hom(P_*, y) with explicit coboundary maps.
std::size_t ext_by_cohomology(const Module& x, const Module& y, std::size_t i) {
  ProjResolution r = min_proj_resolution(x, i + 1);
  auto term = [&](std::size_t k) -> std::optional<Module> {
    if (k < r.covers.size()) return r.term(k);
    return std::nullopt;
  };
  // rank of delta^k : Hom(P_k, y) -> Hom(P_{k+1}, y), phi -> phi o d_{k+1}
  auto delta_rank = [&](std::size_t k) -> std::size_t {
    if (!term(k) || !term(k + 1)) return 0;
    ModuleMap d = r.differential(k + 1);
    std::vector<Vector> cols;
    for (const auto& phi : hom_basis(*term(k), y)) cols.push_back(flatten(phi * d));
    if (cols.empty()) return 0;
    return rank(Matrix::from_columns(cols[0].size(), cols));
  };
  if (!term(i)) return 0;
  std::size_t dim_c = hom_dim(*term(i), y);
  std::size_t ker = dim_c - delta_rank(i);
  std::size_t im = i == 0 ? 0 : delta_rank(i - 1);
  return ker - im;
}

bool splits(const ShortExact& s) {
  std::vector<Vector> cols;
  for (const auto& h : hom_basis(s.right(), s.middle())) cols.push_back(flatten(s.g * h));
  Vector id = flatten(ModuleMap::identity(s.right()));
  if (cols.empty()) return false;
  Matrix m = Matrix::from_columns(id.size(), cols);
  return solve(m, Matrix::column(id)).has_value();
}

std::vector<Module> gamma_pool() {
  auto g = gam();
  std::vector<Module> pool;
  for (int i = 0; i < 4; ++i) {
    pool.push_back(simple(g, i));
    pool.push_back(injective(g, i));
    pool.push_back(radical(projective(g, i)).module);
  }
  return pool;
}

}  // namespace

TEST(Resolution, Projective) {
  Module p = projective(gam(), 2);
  auto r = min_proj_resolution(p, 3);
  EXPECT_TRUE(r.terminated);
  ASSERT_EQ(r.covers.size(), 1u);
  EXPECT_TRUE(is_isomorphic(r.term(0), p));
}

TEST(Resolution, DualNumbersPeriodic) {
  auto d = dual_numbers();
  auto r = min_proj_resolution(simple(d, 0), 6);
  EXPECT_FALSE(r.terminated);
  for (std::size_t k = 0; k < r.covers.size(); ++k) EXPECT_TRUE(is_isomorphic(r.term(k), projective(d, 0)));
  EXPECT_TRUE(r.is_minimal());
}

TEST(Resolution, GammaOmegaSquaredS1) {
  auto r = min_proj_resolution(simple(gam(), 0), 3);
  EXPECT_TRUE(is_isomorphic(r.syzygies[2].module, simple(gam(), 0)));
  EXPECT_TRUE(r.is_minimal());
  EXPECT_TRUE(is_isomorphic(syzygy(simple(gam(), 0), 2), simple(gam(), 0)));
}

TEST(Ext, Examples) {
  auto g = gam();
  for (int i = 0; i < 4; ++i)
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(ext(projective(g, i), simple(g, 1), k), 0u);
  // Omega(P2/S2) = soc P2 = S2 and 0 -> S2 -> P2 -> P2/S2 -> 0 does not split,
  // so S2 is not Ext-orthogonal to M; S1 and S3 are.
  Module m = worked_m(), s2 = simple(pi3(), 1);
  EXPECT_EQ(ext(m, s2, 1), 1u);
  EXPECT_EQ(ext(s2, m, 1), 1u);
  for (int v : {0, 2}) {
    EXPECT_EQ(ext(m, simple(pi3(), v), 1), 0u);
    EXPECT_EQ(ext(simple(pi3(), v), m, 1), 0u);
  }
  auto d = dual_numbers();
  auto e = ext_range(simple(d, 0), simple(d, 0), 6);
  for (std::size_t i = 0; i <= 6; ++i) {
    EXPECT_EQ(e[i], ext_by_cohomology(simple(d, 0), simple(d, 0), i));
    EXPECT_EQ(e[i], 1u);
  }
}

TEST(Ext, MatchesCohomologyOracle) {
  auto pool = gamma_pool();
  for (std::size_t a = 0; a < pool.size(); a += 2)
    for (std::size_t b = 1; b < pool.size(); b += 3)
      for (std::size_t i = 0; i <= 3; ++i)
        EXPECT_EQ(ext(pool[a], pool[b], i), ext_by_cohomology(pool[a], pool[b], i));
}

TEST(Ext, ExtensionBasis) {
  auto pool = gamma_pool();
  for (std::size_t a = 0; a < pool.size(); a += 3)
    for (std::size_t b = 0; b < pool.size(); b += 2) {
      auto basis = ext1_basis(pool[a], pool[b]);
      EXPECT_EQ(basis.size(), ext(pool[a], pool[b], 1));
      for (const auto& s : basis) {
        EXPECT_TRUE(s.is_exact());
        EXPECT_FALSE(splits(s));
      }
    }
}

TEST(Ext, DimensionShift) {
  auto pool = gamma_pool();
  std::mt19937 rng(3);
  for (int t = 0; t < 12; ++t) {
    const Module& x = pool[rng() % pool.size()];
    const Module& y = pool[rng() % pool.size()];
    std::size_t i = 1 + rng() % 3;
    EXPECT_EQ(ext(x, y, i + 1), ext(syzygy(x, 1), y, i));
  }
}

TEST(Syzygy, Examples) {
  EXPECT_TRUE(syzygy(projective(gam(), 1), 1).is_zero());
  EXPECT_TRUE(syzygy(projective(gam(), 1), 0).is_zero());
  // Over a selfinjective algebra cosyzygy inverts syzygy on modules without
  // projective summands.
  auto a = pi3();
  std::vector<Module> xs = {simple(a, 0), simple(a, 1), cokernel(socle(projective(a, 1)).inclusion).module,
                            direct_sum(simple(a, 2), radical(projective(a, 0)).module)};
  for (const auto& x : xs) EXPECT_TRUE(is_isomorphic(cosyzygy(syzygy(x, 1), 1), syzygy(x, 0)));
}

TEST(Tau, Examples) {
  auto g = gam();
  EXPECT_TRUE(tau(projective(g, 0)).is_zero());
  auto d = dual_numbers();
  Module t = tau(simple(d, 0));
  EXPECT_EQ(t.algebra(), d);
  EXPECT_TRUE(is_isomorphic(t, simple(d, 0)));
  Module m = worked_m();
  EXPECT_TRUE(in_add(tau_n(m, 2), decompose(m)));
  EXPECT_TRUE(in_add(tau_n_minus(m, 2), decompose(m)));
}

TEST(Tau, AdjacencyOnIndecomposables) {
  auto a = pi3();
  std::vector<Module> xs = {simple(a, 0), simple(a, 1), radical(projective(a, 1)).module,
                            cokernel(socle(projective(a, 0)).inclusion).module};
  for (const auto& x : xs) EXPECT_TRUE(is_isomorphic(tau_minus(tau(x)), x));
  for (const auto& x : gamma_pool()) {
    if (is_projective(x)) continue;
    EXPECT_TRUE(is_isomorphic(tau_minus(tau(x)), x));
    if (!is_injective(x)) EXPECT_TRUE(is_isomorphic(tau(tau_minus(x)), x));
  }
}

TEST(Tau, ARFormulaOnGamma) {
  // Ext^1(x, y) ~= D Hom-bar(y, tau x); with y injective-free check the weaker
  // dimension inequality dim Ext^1(x, y) <= dim Hom(y, tau x).
  auto pool = gamma_pool();
  for (const auto& x : pool)
    for (const auto& y : pool) EXPECT_LE(ext(x, y, 1), hom_dim(y, tau(x)));
}

TEST(Dimensions, Global) {
  auto v = global_dimension(dual_numbers());
  EXPECT_EQ(v.status, DimensionVerdict::Status::Infinite);
  EXPECT_FALSE(v.certificate.empty());
  auto h = global_dimension(compile(linear_quiver(2)));
  EXPECT_EQ(h.status, DimensionVerdict::Status::Finite);
  EXPECT_EQ(h.value, 1u);
  EXPECT_EQ(global_dimension(compile(linear_quiver(4))).value, 1u);
}

TEST(Dimensions, GammaInjectiveAndDominant) {
  auto g = gam();
  auto id = injective_dimension(regular(g));
  ASSERT_TRUE(id.at_most(3).has_value());
  EXPECT_TRUE(*id.at_most(3));
  auto dd = dominant_dimension(g);
  ASSERT_TRUE(dd.at_least(3).has_value());
  EXPECT_TRUE(*dd.at_least(3));
  EXPECT_TRUE(*dd.at_least(2));
}

TEST(Dimensions, SelfinjectiveDominantIsInfinite) {
  EXPECT_EQ(dominant_dimension(pi3()).status, DimensionVerdict::Status::Infinite);
  EXPECT_EQ(dominant_dimension(compile(linear_quiver(2))).value, 1u);
}

TEST(Selfinjective, Examples) {
  // Oracle: A selfinjective iff D(A_A) and A have the same decomposition.
  auto a = pi3();
  EXPECT_TRUE(is_isomorphic(cogenerator(a), regular(a)));
  EXPECT_TRUE(is_selfinjective(a));
  EXPECT_FALSE(is_selfinjective(gam()));
}

TEST(Gorenstein, GammaProjectivesList) {
  auto g = gam();
  auto [l, r] = gorenstein_dimensions(g);
  EXPECT_TRUE(l.is_finite());
  EXPECT_TRUE(r.is_finite());
  std::vector<Module> yes = {simple(g, 0), simple(g, 2), radical(projective(g, 0)).module,
                             radical(projective(g, 2)).module};
  for (int i = 0; i < 4; ++i) yes.push_back(projective(g, i));
  for (const auto& x : yes) {
    auto v = is_gorenstein_projective(x);
    ASSERT_TRUE(v.has_value());
    EXPECT_TRUE(*v);
  }
  auto s2 = is_gorenstein_projective(simple(g, 1));
  ASSERT_TRUE(s2.has_value());
  EXPECT_FALSE(*s2);
}

TEST(Properties, RelativeStructuresCoincide) {
  // For each extension in a basis of Ext^1(c, a): Hom(M, -) exact iff
  // Hom(-, tau M) exact.
  auto l = pi3();
  Module m = worked_m();
  Module tm = tau(m);
  std::vector<Module> pool = {simple(l, 0), simple(l, 1), simple(l, 2), radical(projective(l, 0)).module,
                              radical(projective(l, 1)).module, cokernel(socle(projective(l, 1)).inclusion).module,
                              cokernel(socle(projective(l, 0)).inclusion).module};
  std::size_t seen = 0;
  for (const auto& c : pool)
    for (const auto& a : pool)
      for (const auto& s : ext1_basis(c, a)) {
        bool left = hom_dim(m, s.middle()) == hom_dim(m, s.left()) + hom_dim(m, s.right());
        bool right = hom_dim(s.middle(), tm) == hom_dim(s.left(), tm) + hom_dim(s.right(), tm);
        EXPECT_EQ(left, right);
        ++seen;
      }
  EXPECT_GT(seen, 0u);
}
