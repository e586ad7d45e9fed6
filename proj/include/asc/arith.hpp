#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace asc {

// Exact rationals. mpq_class keeps values canonical (gcd 1, positive
// denominator, zero as 0/1) after every arithmetic operation.
using Scalar = mpq_class;

Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& s);

using Vector = std::vector<Scalar>;

bool is_zero(const Vector& v);

// Dense row-major matrix over the rationals. Empty shapes (0 rows or 0
// columns) are legal and behave as the zero map between the spaces.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix column(const Vector& v);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<Scalar>& data() const { return data_; }

  Vector col(std::size_t c) const;
  Vector row(std::size_t r) const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& ms, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& ms, std::size_t cols);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
// Columns form a basis of the null space {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);
// Columns form a basis of the column space of m (a subset of m's columns).
Matrix column_space(const Matrix& m);
// Some x with m x = b, or nullopt if the system is inconsistent.
// Throws ContractViolation when b.rows() != m.rows().
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);
Scalar trace(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, std::size_t e);

// Coordinates of vectors with respect to a fixed linearly independent family
// of columns. Precomputes an invertible square minor so each lookup is one
// matrix-vector product.
class Coordinates {
 public:
  Coordinates() = default;
  explicit Coordinates(const Matrix& basis);
  std::size_t dim() const { return dim_; }
  // Coordinates of v; v must lie in the span (checked).
  Vector of(const Vector& v) const;
  Matrix of(const Matrix& columns) const;

 private:
  Matrix basis_;
  std::vector<std::size_t> rows_;
  Matrix minor_inverse_;
  std::size_t dim_ = 0;
};

// Incrementally maintained row-reduced spanning set.
class Span {
 public:
  explicit Span(std::size_t ambient) : ambient_(ambient) {}
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  // Reduces v against the current basis; returns the residue.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  // Adds v if independent; returns true if the span grew.
  bool add(const Vector& v);
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// Univariate polynomial helpers used by Fitting splitting.
using Polynomial = std::vector<Scalar>;  // coefficient of t^k at index k
Polynomial characteristic_polynomial(const Matrix& m);
std::vector<Scalar> rational_roots(const Polynomial& p);

}  // namespace asc
