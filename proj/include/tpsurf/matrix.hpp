#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tpsurf/error.hpp"
#include "tpsurf/rational.hpp"
#include "tpsurf/xpoly.hpp"

namespace tpsurf {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void swap_columns(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatQ = Matrix<Rational>;

/// Matrix of forms in x0..x3; library code only ever stores linear forms or zero.
using MatX = Matrix<XPoly>;

inline MatQ identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline std::vector<Rational> multiply(const MatQ& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) fail(ErrorCode::DegreeMismatch, "matrix-vector size mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
  return out;
}

inline MatQ multiply(const MatQ& a, const MatQ& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::DegreeMismatch, "matrix product size mismatch");
  MatQ out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

/// Substitutes the rational point x into every entry.
inline MatQ evaluate(const MatX& m, std::span<const Rational> x) {
  MatQ out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).evaluate(x);
  return out;
}

}  // namespace tpsurf
