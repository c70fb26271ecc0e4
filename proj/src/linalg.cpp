#include "ylab/linalg.hpp"

#include <stdexcept>

namespace ylab {

RowEchelon row_reduce(ScalarMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ScalarMatrix& m) { return row_reduce(m).pivots.size(); }

ScalarMatrix nullspace(const ScalarMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  ScalarMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(f, k) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.reduced(r, f).is_zero()) basis(e.pivots[r], k) = -e.reduced(r, f);
  }
  return basis;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  if (!m.is_square()) throw ShapeError("inverse of non-square matrix " + m.shape_string());
  const std::size_t n = m.rows();
  ScalarMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  ScalarMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) throw ShapeError("solve: rhs length mismatch");
  ScalarMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  RowEchelon e = row_reduce(std::move(aug));
  std::vector<Scalar> x(m.cols(), Scalar(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

ScalarMatrix restrict_to(const ScalarMatrix& op, const ScalarMatrix& basis) {
  if (op.cols() != basis.rows()) throw ShapeError("restrict_to: operator/basis mismatch");
  const std::size_t d = basis.cols();
  ScalarMatrix image = op * basis;
  // Solve basis * X = image column by column via one elimination.
  ScalarMatrix aug(basis.rows(), d + d);
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = basis(i, j);
    for (std::size_t j = 0; j < d; ++j) aug(i, d + j) = image(i, j);
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < d || (e.pivots.size() > d) || (d > 0 && e.pivots[d - 1] != d - 1))
    throw std::domain_error("restrict_to: subspace is not invariant or basis is dependent");
  ScalarMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = e.reduced(i, d + j);
  return out;
}

}  // namespace ylab
