#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcx/errors.hpp"
#include "hcx/exact/quadratic.hpp"
#include "hcx/exact/rational.hpp"

namespace hcx::exact {

/// Dense row-major matrix over an exact field T (Rat or Quadratic<D>).
template <class T>
class BasicMat {
 public:
  BasicMat() = default;
  BasicMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  BasicMat(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw InputError("BasicMat: entry count mismatch");
  }

  static BasicMat identity(std::size_t n) {
    BasicMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Inverse of flatten(): entry (r, c) is taken from index r*n + c.
  static BasicMat from_flat(std::size_t n, std::span<const T> flat) {
    if (flat.size() != n * n) throw InputError("BasicMat::from_flat: expected n*n entries");
    return BasicMat(n, n, std::vector<T>(flat.begin(), flat.end()));
  }

  /// Matrix whose columns are the given vectors.
  static BasicMat from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    BasicMat m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw InputError("BasicMat::from_columns: length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  static BasicMat from_rows(std::size_t cols, const std::vector<std::vector<T>>& rows) {
    BasicMat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InputError("BasicMat::from_rows: length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> entries() const { return data_; }
  std::span<T> entries() { return data_; }

  /// Row-major flattening; entry (r, c) lands at index r*cols + c.
  std::vector<T> flatten() const { return data_; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, std::span<const T> v) {
    if (v.size() != rows_) throw InputError("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  BasicMat transpose() const {
    BasicMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!exact::is_zero(x)) return false;
    return true;
  }

  T trace() const {
    if (!is_square()) throw InputError("trace: matrix not square");
    T acc{};
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw InputError("apply: length mismatch");
    std::vector<T> out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (exact::is_zero(v[c])) continue;
      for (std::size_t r = 0; r < rows_; ++r)
        if (!exact::is_zero((*this)(r, c))) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

  BasicMat& operator+=(const BasicMat& o) {
    check_same_shape(o, "+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  BasicMat& operator-=(const BasicMat& o) {
    check_same_shape(o, "-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  BasicMat& operator*=(const T& s) {
    for (auto& x : data_)
      if (!exact::is_zero(x)) x *= s;
    return *this;
  }

  friend BasicMat operator+(BasicMat a, const BasicMat& b) { return a += b; }
  friend BasicMat operator-(BasicMat a, const BasicMat& b) { return a -= b; }
  friend BasicMat operator-(BasicMat a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend BasicMat operator*(const T& s, BasicMat a) { return a *= s; }
  friend BasicMat operator*(const BasicMat& a, const BasicMat& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: inner dimension mismatch");
    BasicMat out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (exact::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!exact::is_zero(b(k, j))) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend bool operator==(const BasicMat& a, const BasicMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const BasicMat& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw InputError(std::string("matrix ") + op + ": shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Mat = BasicMat<Rat>;

template <class T>
BasicMat<T> commutator(const BasicMat<T>& a, const BasicMat<T>& b) {
  return a * b - b * a;
}

template <class T>
struct Rref {
  BasicMat<T> matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivot rule: leftmost column with a nonzero
/// entry at or below the current row, first such row. No magnitude
/// heuristics, so the result is deterministic.
template <class T>
Rref<T> rref(BasicMat<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != rank)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rank, k));
    T inv = T(1) / m(rank, c);
    nz.clear();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!is_zero(m(rank, k))) {
        m(rank, k) *= inv;
        nz.push_back(k);
      }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || is_zero(m(r, c))) continue;
      T f = m(r, c);
      for (std::size_t k : nz) m(r, k) -= f * m(rank, k);
    }
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::optional<BasicMat<T>> inverse(const BasicMat<T>& m) {
  if (!m.is_square()) throw InputError("inverse: matrix not square");
  const std::size_t n = m.rows();
  BasicMat<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = T(1);
  }
  auto red = rref(std::move(aug));
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  BasicMat<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
  return inv;
}

std::string to_string(const Mat& m);

}  // namespace hcx::exact
