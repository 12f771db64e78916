// Small dense matrices over an exact coefficient type.

#pragma once

#include <stdexcept>
#include <vector>

namespace qgreen {

struct SingularMatrixError : std::runtime_error {
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }

  T& at(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::logic_error("matrix dimension mismatch");
    Matrix m(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t k = 0; k < c_; ++k) {
        const T& x = at(i, k);
        for (size_t j = 0; j < o.c_; ++j) m.at(i, j) += x * o.at(k, j);
      }
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }

  // Gauss-Jordan inverse; T must be a field type with is_zero() and inverse().
  Matrix inverse() const {
    if (r_ != c_) throw std::logic_error("inverse of non-square matrix");
    Matrix a = *this, inv = identity(r_);
    for (size_t col = 0; col < c_; ++col) {
      size_t pivot = col;
      while (pivot < r_ && a.at(pivot, col).is_zero()) ++pivot;
      if (pivot == r_) throw SingularMatrixError("singular matrix");
      if (pivot != col) {
        for (size_t j = 0; j < c_; ++j) {
          std::swap(a.at(pivot, j), a.at(col, j));
          std::swap(inv.at(pivot, j), inv.at(col, j));
        }
      }
      T p = a.at(col, col).inverse();
      for (size_t j = 0; j < c_; ++j) {
        a.at(col, j) *= p;
        inv.at(col, j) *= p;
      }
      for (size_t i = 0; i < r_; ++i) {
        if (i == col || a.at(i, col).is_zero()) continue;
        T f = a.at(i, col);
        for (size_t j = 0; j < c_; ++j) {
          a.at(i, j) -= f * a.at(col, j);
          inv.at(i, j) -= f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  template <class U, class Fn>
  Matrix<U> map(Fn&& fn) const {
    Matrix<U> m(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m.at(i, j) = fn(at(i, j));
    return m;
  }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

}  // namespace qgreen
