#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ylab/poly2.hpp"
#include "ylab/scalar.hpp"

namespace ylab {

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Poly2& p) { return p.is_zero(); }

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over Scalar or Poly2.
///
/// Products skip structurally zero entries, which keeps the I/P/K-built
/// operators cheap even though storage is dense.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!ylab::is_zero(x)) return false;
    return true;
  }

  std::size_t nonzero_count() const {
    std::size_t c = 0;
    for (const auto& x : data_)
      if (!ylab::is_zero(x)) ++c;
    return c;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!ylab::is_zero(o.data_[k])) data_[k] += o.data_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!ylab::is_zero(o.data_[k])) data_[k] -= o.data_[k];
    return *this;
  }

  Matrix& operator*=(const Scalar& s) {
    for (auto& x : data_)
      if (!ylab::is_zero(x)) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_)
      if (!ylab::is_zero(x)) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("matrix product: " + a.shape_string() + " * " + b.shape_string());
    Matrix out(a.rows_, b.cols_);
    std::vector<std::vector<std::size_t>> nz(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!ylab::is_zero(b(k, j))) nz[k].push_back(j);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (ylab::is_zero(aik)) continue;
        for (std::size_t j : nz[k]) out(i, j).add_product(aik, b(k, j));
      }
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Sum of the diagonal.
  T trace() const {
    if (!is_square()) throw ShapeError("trace of non-square matrix " + shape_string());
    T acc{};
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError(std::string("matrix ") + op + ": " + shape_string() + " vs " + o.shape_string());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<Poly2>;

/// Kronecker product, row-major: index (i1, i2) -> i1 * dim2 + i2.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const T& x = a(i1, j1);
      if (is_zero(x)) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const T& y = b(i2, j2);
          if (is_zero(y)) continue;
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * y;
        }
    }
  return out;
}

/// ab - sign*ba: sign = +1 gives the commutator, -1 the anticommutator.
template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b, int sign = 1) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("commutator needs equal square shapes: " + a.shape_string() + " vs " + b.shape_string());
  Matrix<T> ab = a * b;
  Matrix<T> ba = b * a;
  if (sign == 1) return ab - ba;
  if (sign == -1) return ab + ba;
  throw std::invalid_argument("commutator sign must be +1 or -1");
}

/// Lifts a scalar matrix to constant polynomials.
PolyMatrix to_poly(const ScalarMatrix& m);

/// Scales every entry by a polynomial.
PolyMatrix scale(const PolyMatrix& m, const Poly2& p);
PolyMatrix scale(const ScalarMatrix& m, const Poly2& p);

/// Evaluates every entry at (u, v).
ScalarMatrix evaluate(const PolyMatrix& m, const Scalar& u, const Scalar& v);

/// Rational-function factor f = num/den with a = f * b.
struct PolyRatio {
  Poly2 num;
  Poly2 den;
  /// The factor as a constant, when num is a scalar multiple of den.
  std::optional<Scalar> constant() const;
  std::string to_string() const;
};

/// Returns the factor f with a = f*b entrywise, or nullopt when a is not
/// proportional to b. Requires equal shapes and b nonzero.
std::optional<PolyRatio> proportional_to(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace ylab
