#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpcusp/cyclotomic.hpp"
#include "lpcusp/error.hpp"

namespace lpcusp {

/// Dense row-major matrix over an exact field (Rational or Cyclotomic).
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix scalar(std::size_t n, const F& s) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.c_) throw ValidationError("ragged matrix rows");
      for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  F& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  F trace() const {
    F t(0);
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!lpcusp::is_zero(x)) return false;
    return true;
  }

  bool is_scalar() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) {
        if (i != j && !lpcusp::is_zero((*this)(i, j))) return false;
        if (i == j && !((*this)(i, i) == (*this)(0, 0))) return false;
      }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw ValidationError("matrix dimension mismatch in product");
    Matrix p(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const F& x = a(i, k);
        if (lpcusp::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.c_; ++j) {
          const F& y = b(k, j);
          if (lpcusp::is_zero(y)) continue;
          p(i, j) += x * y;
        }
      }
    return p;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw ValidationError("matrix dimension mismatch in sum");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw ValidationError("matrix dimension mismatch in difference");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.a_) x = s * x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < c_ && r < r_; ++c) {
      std::size_t p = r;
      while (p < r_ && lpcusp::is_zero((*this)(p, c))) ++p;
      if (p == r_) continue;
      if (p != r)
        for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(p, k), (*this)(r, k));
      F inv = F(1) / (*this)(r, c);
      for (std::size_t k = c; k < c_; ++k) (*this)(r, k) = inv * (*this)(r, k);
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == r || lpcusp::is_zero((*this)(i, c))) continue;
        F f = (*this)(i, c);
        for (std::size_t k = c; k < c_; ++k)
          if (!lpcusp::is_zero((*this)(r, k))) (*this)(i, k) -= f * (*this)(r, k);
      }
      piv.push_back(c);
      ++r;
    }
    return piv;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of {x : A x = 0}, one column vector per basis element.
  std::vector<std::vector<F>> nullspace() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < c_; ++free) {
      if (is_piv[free]) continue;
      std::vector<F> v(c_, F(0));
      v[free] = F(1);
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::optional<Matrix> inverse() const {
    if (!square()) throw ValidationError("inverse of non-square matrix");
    Matrix aug(r_, 2 * c_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = F(1);
    }
    auto piv = aug.rref();
    if (piv.size() < r_ || piv.back() >= c_) return std::nullopt;
    Matrix inv(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
    return inv;
  }

  /// Some solution X of A X = B, or empty when inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const {
    if (b.r_ != r_) throw ValidationError("matrix dimension mismatch in solve");
    Matrix aug(r_, c_ + b.c_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < b.c_; ++j) aug(i, c_ + j) = b(i, j);
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() >= c_) return std::nullopt;
    Matrix x(c_, b.c_);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < b.c_; ++j) x(piv[i], j) = aug(i, c_ + j);
    return x;
  }

  std::vector<F> column(std::size_t j) const {
    std::vector<F> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  const std::vector<F>& data() const { return a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<F> a_;
};

using CycloMatrix = Matrix<Cyclotomic>;
using RationalMatrix = Matrix<Rational>;

/// Block diagonal sum.
template <class F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  return s;
}

/// Kronecker product a (x) b.
template <class F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

}  // namespace lpcusp
