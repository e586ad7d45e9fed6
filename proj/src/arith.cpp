#include "asc/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "asc/error.hpp"

namespace asc {

Scalar parse_scalar(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.empty()) throw ContractViolation("empty rational literal");
  if (t[0] == '+') t.erase(0, 1);
  Scalar s;
  if (s.set_str(t, 10) != 0)
    throw ContractViolation("bad rational literal '" + text + "'");
  if (s.get_den() == 0)
    throw ContractViolation("zero denominator in '" + text + "'");
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return sgn(s) == 0; });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw ContractViolation("matrix data length does not match shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractViolation("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Vector& v) { return Matrix(v.size(), 1, v); }

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw ContractViolation("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

bool Matrix::is_zero() const { return asc::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw ContractViolation("block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw ContractViolation("set_block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ContractViolation("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ContractViolation("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ContractViolation("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  Scalar t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw ContractViolation("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << "]";
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ContractViolation("hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ContractViolation("vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix hstack(const std::vector<Matrix>& ms, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& m : ms) {
    if (m.rows() != rows) throw ContractViolation("hstack row mismatch");
    cols += m.cols();
  }
  Matrix out(rows, cols);
  std::size_t c = 0;
  for (const auto& m : ms) {
    out.set_block(0, c, m);
    c += m.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& ms, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : ms) {
    if (m.cols() != cols) throw ContractViolation("vstack column mismatch");
    rows += m.rows();
  }
  Matrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& m : ms) {
    out.set_block(r, 0, m);
    r += m.rows();
  }
  return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

RrefResult rref(Matrix m) {
  RrefResult res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  Scalar factor, tmp;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(lead, j));
    Scalar inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(lead, j)) != 0) m(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(lead, j)) == 0) continue;
        tmp = factor * m(lead, j);
        m(r, j) -= tmp;
      }
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.reduced = std::move(m);
  return res;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return rref(m).pivots.size();
}

Matrix kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  if (m.rows() == 0) return Matrix::identity(cols);
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(cols, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -r(i, free[f]);
  }
  return k;
}

Matrix column_space(const Matrix& m) {
  if (m.empty()) return Matrix(m.rows(), 0);
  return m.select_columns(rref(m).pivots);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows())
    throw ContractViolation("solve: right-hand side has wrong number of rows");
  const std::size_t n = m.cols();
  Matrix aug = hstack(m, b);
  auto [r, pivots] = rref(std::move(aug));
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, n + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw ContractViolation("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1, factor;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      factor = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= factor * m(c, j);
    }
  }
  return det;
}

Scalar trace(const Matrix& m) {
  Scalar t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

Matrix power(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Coordinates::Coordinates(const Matrix& basis) : basis_(basis), dim_(basis.cols()) {
  if (dim_ == 0) return;
  auto [r, pivots] = rref(basis.transpose());
  if (pivots.size() != dim_)
    throw ContractViolation("Coordinates: basis columns are dependent");
  rows_ = pivots;
  auto inv = inverse(basis.select_rows(rows_));
  minor_inverse_ = *inv;
}

Vector Coordinates::of(const Vector& v) const {
  if (dim_ == 0) {
    if (!is_zero(v)) throw ContractViolation("Coordinates: vector not in span");
    return {};
  }
  Vector sub(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) sub[i] = v[rows_[i]];
  Vector c = minor_inverse_ * sub;
  Vector back = basis_ * c;
  if (back != v) throw ContractViolation("Coordinates: vector not in span");
  return c;
}

Matrix Coordinates::of(const Matrix& columns) const {
  Matrix out(dim_, columns.cols());
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    Vector c = of(columns.col(j));
    for (std::size_t i = 0; i < dim_; ++i) out(i, j) = c[i];
  }
  return out;
}

Vector Span::reduce(Vector v) const {
  Scalar t;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    Scalar f = v[p];
    const Vector& row = rows_[i];
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(row[j]) == 0) continue;
      t = f * row[j];
      v[j] -= t;
    }
  }
  return v;
}

bool Span::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Span::add(const Vector& v) {
  if (v.size() != ambient_) throw ContractViolation("Span: wrong vector length");
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && sgn(r[p]) == 0) ++p;
  if (p == ambient_) return false;
  Scalar inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  // keep existing rows reduced at the new pivot
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Scalar f = row[p];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(r[j]) != 0) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

Polynomial characteristic_polynomial(const Matrix& a) {
  // Faddeev-LeVerrier; exact over the rationals.
  const std::size_t n = a.rows();
  Polynomial c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -trace(a * mk) / Scalar(static_cast<long>(k));
  }
  return c;
}

namespace {

Scalar evaluate(const Polynomial& p, const Scalar& x) {
  Scalar v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

std::vector<mpz_class> divisors(mpz_class n) {
  std::vector<mpz_class> out;
  n = abs(n);
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

}  // namespace

std::vector<Scalar> rational_roots(const Polynomial& poly) {
  Polynomial p = poly;
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  std::vector<Scalar> roots;
  if (p.size() <= 1) return roots;
  std::size_t low = 0;
  while (sgn(p[low]) == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
  }
  if (p.size() <= 1) return roots;
  mpz_class lcm_den = 1;
  for (const auto& c : p) lcm_den = lcm(lcm_den, mpz_class(c.get_den()));
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.emplace_back(mpz_class(c * lcm_den));
  auto nums = divisors(ints.front());
  auto dens = divisors(ints.back());
  for (const auto& a : nums)
    for (const auto& b : dens)
      for (int s : {1, -1}) {
        Scalar cand(a * s, b);
        cand.canonicalize();
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (sgn(evaluate(p, cand)) == 0) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace asc
