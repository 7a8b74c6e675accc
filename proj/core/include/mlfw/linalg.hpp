#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlfw {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense matrix over an exact ring (row-major).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix data has wrong size");
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& data() const { return data_; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const T& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (T& x : a.data_) x *= s;
    return a;
  }
  std::vector<T> operator*(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = std::vector<Rational>;

IntMatrix int_matrix(std::size_t rows, std::size_t cols, const std::vector<long>& entries);
RatMatrix to_rational(const IntMatrix& m);
IntMatrix matrix_power(const IntMatrix& m, unsigned long n);

/// Canonical reduced row echelon form; zero rows are dropped.
std::vector<RatVector> rref(std::vector<RatVector> rows);
std::size_t rank(const std::vector<RatVector>& rows);
std::size_t rank(const RatMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in rref-derived order.
std::vector<RatVector> nullspace(const RatMatrix& m);
/// Throws std::domain_error for singular input.
RatMatrix inverse(const RatMatrix& m);

/// Incremental elimination for large sparse systems: rows are inserted one at
/// a time and reduced against the pivots collected so far.
class SparseEliminator {
 public:
  using Row = std::map<std::size_t, Rational>;

  explicit SparseEliminator(std::size_t columns) : columns_(columns) {}
  /// Returns true when the row was independent of the rows seen so far.
  bool insert(Row row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }

 private:
  std::size_t columns_;
  std::map<std::size_t, Row> pivots_;  // pivot column -> row with leading 1 there
};

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace mlfw
