#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hss/rational.hpp"

namespace hss {

using Vector = std::vector<Rational>;

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; `pivots[i]` is the pivot column of row i.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the null space {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);

/// Incrementally built subspace of Q^n supporting exact membership tests.
class Span {
 public:
  explicit Span(std::size_t ambient_dim) : n_(ambient_dim) {}

  /// Adds v; returns false (and leaves the span unchanged) when v is already in it.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return n_; }
  /// Echelon basis (not the vectors originally supplied).
  const std::vector<Vector>& basis() const { return rows_; }

 private:
  Vector reduce(Vector v) const;

  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Sparse row: (column, value) pairs in increasing column order, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental Gaussian elimination on sparse rows, for large sparse homogeneous systems.
class SparseReducer {
 public:
  explicit SparseReducer(std::size_t cols) : cols_(cols), pivot_row_(cols, kNone) {}

  /// Adds an equation; returns true when it raised the rank.
  bool add(SparseRow row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// Basis of the solution space, one vector per free column.
  std::vector<Vector> kernel() const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace hss
