#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hensel/error.hpp"
#include "hensel/multipoly.hpp"
#include "hensel/ring.hpp"

namespace hensel {

/// Row-major rectangular matrix over a RingElement.
template <RingElement R>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const R& proto)
      : rows_(rows), cols_(cols), zero_(proto.zero()), data_(rows * cols, proto.zero()) {}

  static Matrix identity(std::size_t n, const R& proto) {
    Matrix m(n, n, proto);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = proto.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const R& zero_coeff() const { return zero_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const {
    check_shape(o);
    Matrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_shape(o);
    Matrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorCode::ArityMismatch, "matrix shapes do not chain");
    Matrix r(rows_, o.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const R& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
      }
    }
    return r;
  }

  std::vector<R> operator*(const std::vector<R>& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::ArityMismatch, "vector length does not match columns");
    std::vector<R> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    }
    return out;
  }

  Matrix scaled(const R& s) const {
    Matrix r(*this);
    for (auto& x : r.data_) x = x * s;
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  template <class F>
  auto map(F&& fn) const {
    using S = std::decay_t<decltype(fn(zero_))>;
    Matrix<S> r(rows_, cols_, fn(zero_));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
    }
    return r;
  }

 private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ArityMismatch, "matrix shapes differ");
  }

  std::size_t rows_;
  std::size_t cols_;
  R zero_;
  std::vector<R> data_;
};

namespace detail {

// Determinant of rows [n - popcount(mask), n) restricted to the columns in
// mask, memoized over masks.
template <RingElement R>
const R& laplace_minor(const Matrix<R>& m, unsigned long mask, std::vector<std::optional<R>>& memo) {
  auto& slot = memo[mask];
  if (slot) return *slot;
  const std::size_t n = m.rows();
  if (mask == 0) {
    slot = m.zero_coeff().one();
    return *slot;
  }
  const std::size_t row = n - static_cast<std::size_t>(__builtin_popcountl(mask));
  R acc = m.zero_coeff();
  bool negative = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(mask & (1UL << j))) continue;
    const R& a = m(row, j);
    if (!a.is_zero()) {
      R term = a * laplace_minor(m, mask & ~(1UL << j), memo);
      acc = negative ? acc - term : acc + term;
    }
    negative = !negative;
  }
  slot = std::move(acc);
  return *slot;
}

}  // namespace detail

/// Exact determinant by cofactor expansion along rows, memoized over column
/// subsets (O(n·2^n) ring operations). Valid over any commutative ring,
/// including polynomial entries.
template <RingElement R>
R det(const Matrix<R>& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n >= 8 * sizeof(unsigned long) - 1) throw Error(ErrorCode::NotSquare, "matrix too large for expansion");
  std::vector<std::optional<R>> memo(1UL << n);
  return detail::laplace_minor(m, (1UL << n) - 1, memo);
}

/// Symbolic Jacobian: entry (i, j) = ∂f_i/∂X_j.
template <RingElement R>
Matrix<MultiPoly<R>> jacobian(const std::vector<MultiPoly<R>>& system) {
  if (system.empty()) throw Error(ErrorCode::NotSquare, "empty system");
  const std::size_t n = system.size();
  for (const auto& f : system) {
    if (f.nvars() != n) {
      throw Error(ErrorCode::NotSquare, std::to_string(n) + " equations in " + std::to_string(f.nvars()) +
                                            " variables");
    }
  }
  Matrix<MultiPoly<R>> j(n, n, system.front());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) j(r, c) = system[r].partial(c);
  }
  return j;
}

template <RingElement R>
Matrix<R> evaluate(const Matrix<MultiPoly<R>>& m, const std::vector<R>& point) {
  Matrix<R> r(m.rows(), m.cols(), point.empty() ? m.zero_coeff().zero_coeff() : point.front());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(point);
  }
  return r;
}

}  // namespace hensel
