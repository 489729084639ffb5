#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pi1trunc/field.hpp"

namespace pi1trunc {

// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
  }
  // Empty matrix (no rows) with a fixed ambient dimension.
  static Matrix empty(std::size_t cols) { return Matrix(0, cols, std::vector<T>{}); }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    std::vector<T> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) throw std::invalid_argument("ragged rows");
      data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), cols, std::move(data));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  void append_row(std::span<const T> r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

template <class T>
void axpy_row(std::span<T> dst, const T& factor, std::span<const T> src, std::size_t from) {
  for (std::size_t j = from; j < dst.size(); ++j)
    if (!is_zero(src[j])) dst[j] -= factor * src[j];
}

}  // namespace detail

// Reduced row echelon form with zero rows dropped. Pivots are 1, pivot columns
// are zero elsewhere, rows are ordered by pivot column, so equal row spaces give
// identical grids.
template <class T>
Matrix<T> rref(Matrix<T> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(rank, j));
    const T pivot = m(rank, c);
    for (std::size_t j = c; j < cols; ++j)
      if (!is_zero(m(rank, j))) m(rank, j) /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || is_zero(m(i, c))) continue;
      const T factor = m(i, c);
      detail::axpy_row<T>(m.row(i), factor, m.row(rank), c);
    }
    ++rank;
  }
  std::vector<T> data;
  data.reserve(rank * cols);
  for (std::size_t i = 0; i < rank; ++i) {
    auto r = m.row(i);
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix<T>(rank, cols, std::move(data));
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).rows();
}

template <class T>
bool subspace_equal(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("subspace_equal: column count mismatch");
  return rref(a) == rref(b);
}

// Pivot column of every row of a matrix already in rref.
template <class T>
std::vector<std::size_t> pivot_columns(const Matrix<T>& echelon) {
  std::vector<std::size_t> pivots;
  pivots.reserve(echelon.rows());
  for (std::size_t i = 0; i < echelon.rows(); ++i) {
    std::size_t c = 0;
    while (c < echelon.cols() && is_zero(echelon(i, c))) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

// Membership test against a basis that is already in rref; avoids re-reducing
// the basis when many vectors are tested against the same space.
template <class T>
bool in_rref_span(std::span<const T> v, const Matrix<T>& echelon, const std::vector<std::size_t>& pivots) {
  if (v.size() != echelon.cols()) throw std::invalid_argument("in_span: length mismatch");
  std::vector<T> w(v.begin(), v.end());
  for (std::size_t i = 0; i < echelon.rows(); ++i) {
    const std::size_t c = pivots[i];
    if (is_zero(w[c])) continue;
    const T factor = w[c];
    detail::axpy_row<T>(std::span<T>(w), factor, echelon.row(i), c);
  }
  for (const auto& x : w)
    if (!is_zero(x)) return false;
  return true;
}

template <class T>
bool in_span(std::span<const T> v, const Matrix<T>& a) {
  if (v.size() != a.cols()) throw std::invalid_argument("in_span: length mismatch");
  const Matrix<T> e = rref(a);
  return in_rref_span(v, e, pivot_columns(e));
}

template <class T>
bool in_span(const std::vector<T>& v, const Matrix<T>& a) {
  return in_span(std::span<const T>(v), a);
}

// Basis of {x : m x = 0}, returned in rref. One free variable per non-pivot
// column of rref(m).
template <class T, Field F>
  requires std::same_as<typename F::value_type, T>
Matrix<T> nullspace(const Matrix<T>& m, const F& field) {
  const Matrix<T> e = rref(m);
  const auto pivots = pivot_columns(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<T> basis = Matrix<T>::empty(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < e.rows(); ++i) v[pivots[i]] = -e(i, free);
    basis.append_row(v);
  }
  return rref(basis);
}

}  // namespace pi1trunc
