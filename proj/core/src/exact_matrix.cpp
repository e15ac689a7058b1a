#include "hss/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hss {

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row size mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vector r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, j);
      if (sgn(a) != 0) r[i] += a * v[j];
    }
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) != 0) c(i, j) += x * y;
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix c(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.data_.size(); ++i) c.data_[i] = s * m.data_[i];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(m(i, c)) != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<Vector> kernel(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const Rational& a = e.reduced(i, free);
      if (sgn(a) != 0) v[e.pivots[i]] = -a;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector Span::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    Rational f = v[p];
    const Vector& row = rows_[i];
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
  return v;
}

bool Span::add(const Vector& v) {
  if (v.size() != n_) throw std::invalid_argument("span: vector size mismatch");
  Vector w = reduce(v);
  std::size_t p = 0;
  while (p < n_ && sgn(w[p]) == 0) ++p;
  if (p == n_) return false;
  Rational inv = 1 / w[p];
  for (auto& x : w)
    if (sgn(x) != 0) x *= inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool Span::contains(const Vector& v) const {
  if (v.size() != n_) throw std::invalid_argument("span: vector size mismatch");
  return is_zero(reduce(v));
}

namespace {

// a - f * b on sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseReducer::add(SparseRow row) {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    if (lead >= cols_) throw std::invalid_argument("sparse reducer: column out of range");
    const std::size_t p = pivot_row_[lead];
    if (p == kNone) {
      const Rational inv = 1 / row.front().second;
      for (auto& [c, v] : row) v *= inv;
      pivot_row_[lead] = rows_.size();
      rows_.push_back(std::move(row));
      return true;
    }
    const Rational f = row.front().second;
    row = axpy(row, f, rows_[p]);
  }
  return false;
}

std::vector<Vector> SparseReducer::kernel() const {
  // Back substitution to reduced echelon form, processing pivots from the right.
  std::vector<SparseRow> reduced(rows_.size());
  for (std::size_t col = cols_; col-- > 0;) {
    const std::size_t p = pivot_row_[col];
    if (p == kNone) continue;
    SparseRow row = rows_[p];
    for (std::size_t k = 1; k < row.size();) {
      const std::size_t c = row[k].first;
      const std::size_t q = pivot_row_[c];
      if (q == kNone) {
        ++k;
        continue;
      }
      const Rational f = row[k].second;
      row = axpy(row, f, reduced[q]);
    }
    reduced[p] = std::move(row);
  }
  std::vector<Vector> basis;
  std::vector<std::size_t> slot(cols_, kNone);
  for (std::size_t free = 0; free < cols_; ++free) {
    if (pivot_row_[free] != kNone) continue;
    slot[free] = basis.size();
    basis.emplace_back(cols_);
    basis.back()[free] = 1;
  }
  for (std::size_t col = 0; col < cols_; ++col) {
    const std::size_t p = pivot_row_[col];
    if (p == kNone) continue;
    for (const auto& [c, a] : reduced[p])
      if (slot[c] != kNone) basis[slot[c]][col] = -a;
  }
  return basis;
}

}  // namespace hss
