#pragma once

#include "ricsol/errors.hpp"
#include "ricsol/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ricsol {

template <class K>
using Vec = std::vector<K>;

/// Dense row-major matrix over K. Sized for this library's workloads
/// (dimensions in the tens); no views, no expression templates.
template <class K>
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Mat from_rows(std::initializer_list<std::initializer_list<K>> rows) {
    Mat m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != m.cols_) throw StructuralError("from_rows: ragged row");
      std::size_t j = 0;
      for (const auto& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const K& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const K& s) { return a *= s; }
  friend Mat operator*(const K& s, Mat a) { return a *= s; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw StructuralError("matrix product: shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik == K(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  Vec<K> apply(const Vec<K>& x) const {
    if (x.size() != cols_) throw StructuralError("matrix apply: length mismatch");
    Vec<K> y(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  K trace() const {
    K t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  K frobenius_sq() const {
    K t(0);
    for (const auto& v : data_) t += v * v;
    return t;
  }

  K max_abs() const {
    K m(0);
    for (const auto& v : data_) {
      K a = field_abs(v);
      if (a > m) m = a;
    }
    return m;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Vec<K> row(std::size_t i) const {
    Vec<K> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec<K> col(std::size_t j) const {
    Vec<K> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

//------------------------------------------------------------------------------
// Vector helpers
//------------------------------------------------------------------------------

template <class K>
inline void axpy(const K& a, const Vec<K>& x, Vec<K>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

template <class K>
inline Vec<K> vec_sub(Vec<K> a, const Vec<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class K>
inline K max_abs(const Vec<K>& v) {
  K m(0);
  for (const auto& x : v) {
    K a = field_abs(x);
    if (a > m) m = a;
  }
  return m;
}

template <class K>
inline bool is_zero_vec(const Vec<K>& v) {
  for (const auto& x : v)
    if (x != K(0)) return false;
  return true;
}

} // namespace ricsol
