#include <gtest/gtest.h>

#include <random>

#include "asc/arith.hpp"
#include "asc/error.hpp"

using namespace asc;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Scalar, CanonicalForm) {
  Scalar s = parse_scalar("-6/4");
  EXPECT_EQ(to_string(s), "-3/2");
  EXPECT_EQ(to_string(parse_scalar("0/7")), "0");
  EXPECT_EQ(parse_scalar("-0").get_den(), 1);
  EXPECT_THROW(parse_scalar("1/0"), Error);
  EXPECT_THROW(parse_scalar("abc"), Error);
}

TEST(Rref, Identity) {
  auto r = rref(Matrix::identity(3));
  EXPECT_EQ(r.reduced, Matrix::identity(3));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, Zero) {
  auto r = rref(Matrix::zero(2, 2));
  EXPECT_EQ(r.reduced, Matrix::zero(2, 2));
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, DependentRows) {
  auto r = rref(Matrix{{2, 4}, {1, 2}});
  EXPECT_EQ(r.reduced, (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Matrix::identity(2)).cols(), 0u);
  EXPECT_EQ(kernel_basis(Matrix::zero(2, 3)).cols(), 3u);
  Matrix k = kernel_basis(Matrix{{1, 2}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k(0, 0) * 1, k(1, 0) * -2);
  EXPECT_NE(k(1, 0), 0);
}

TEST(Solve, Examples) {
  Matrix b{{5}, {7}};
  EXPECT_EQ(*solve(Matrix::identity(2), b), b);
  EXPECT_FALSE(solve(Matrix::zero(1, 1), Matrix{{1}}).has_value());
  auto x = solve(Matrix{{1, 1}, {0, 1}}, Matrix{{3}, {1}});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Matrix{{2}, {1}}));
  EXPECT_THROW(solve(Matrix::identity(2), Matrix{{1}}), ContractViolation);
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(Matrix::identity(2), Matrix::identity(3)), Matrix::identity(6));
  Matrix b{{1, 2}, {3, 4}};
  EXPECT_EQ(kron(Matrix{{2}}, b), b * Scalar(2));
  Matrix k = kron(Matrix{{0, 1}, {0, 0}}, Matrix::identity(2));
  Matrix expected{{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  EXPECT_EQ(k, expected);
  EXPECT_EQ(rank(k), 2u);
  EXPECT_TRUE((k * k).is_zero());
}

TEST(EmptyShapes, Behave) {
  Matrix a(0, 3), b(3, 2);
  EXPECT_EQ((a * b).rows(), 0u);
  EXPECT_EQ((a * b).cols(), 2u);
  EXPECT_EQ(kernel_basis(Matrix(0, 3)).cols(), 3u);
  EXPECT_EQ(rank(Matrix(4, 0)), 0u);
  auto x = solve(Matrix(0, 2), Matrix(0, 1));
  ASSERT_TRUE(x);
  EXPECT_EQ(x->rows(), 2u);
}

TEST(Properties, RankNullity) {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix m = random_matrix(rng, r, c, -2, 2);
    auto rr = rref(m);
    EXPECT_EQ(rank(m), rr.pivots.size());
    Matrix k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.cols(), c);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
    for (std::size_t i = 1; i < rr.pivots.size(); ++i)
      EXPECT_LT(rr.pivots[i - 1], rr.pivots[i]);
  }
}

TEST(Properties, SolveIsExact) {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix m = random_matrix(rng, r, c, -3, 3);
    Matrix b = random_matrix(rng, r, 2, -3, 3);
    if (auto x = solve(m, b)) EXPECT_EQ(m * *x, b);
    Matrix y = random_matrix(rng, c, 1, -3, 3);
    auto x = solve(m, m * y);
    ASSERT_TRUE(x);
    EXPECT_EQ(m * *x, m * y);
  }
}

TEST(Properties, KronMixedProduct) {
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(rng, 2, 3, -2, 2), c = random_matrix(rng, 3, 2, -2, 2);
    Matrix b = random_matrix(rng, 1, 2, -2, 2), d = random_matrix(rng, 2, 3, -2, 2);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(Determinant, AndInverse) {
  Matrix m{{2, 1}, {7, 4}};
  EXPECT_EQ(determinant(m), 1);
  EXPECT_EQ(*inverse(m) * m, Matrix::identity(2));
  EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST(Charpoly, RationalRoots) {
  // (t - 1)(t - 1/2)(t + 3) expanded by hand: t^3 + 3/2 t^2 - 4 t + 3/2
  Matrix m{{1, 0, 0}, {0, -3, 0}, {0, 0, 0}};
  m(2, 2) = Scalar(1, 2);
  Polynomial p = characteristic_polynomial(m);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[3], 1);
  EXPECT_EQ(p[2], Scalar(3, 2));
  EXPECT_EQ(p[1], -4);
  EXPECT_EQ(p[0], Scalar(3, 2));
  auto roots = rational_roots(p);
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<Scalar>{-3, Scalar(1, 2), 1}));
  EXPECT_TRUE(rational_roots(Polynomial{1, 0, 1}).empty());  // t^2 + 1
}

TEST(SpanAndCoordinates, Consistent) {
  Span s(3);
  EXPECT_TRUE(s.add({1, 1, 0}));
  EXPECT_TRUE(s.add({0, 1, 1}));
  EXPECT_FALSE(s.add({1, 2, 1}));
  EXPECT_TRUE(s.contains({2, 0, -2}));
  EXPECT_EQ(s.dim(), 2u);
  Coordinates c(Matrix{{1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(c.of(Vector{2, 5, 3}), (Vector{2, 3}));
  EXPECT_THROW(c.of(Vector{1, 0, 0}), ContractViolation);
}
