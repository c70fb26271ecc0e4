#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ylab/matrix.hpp"

namespace ylab {

/// Places `op` (acting on the tensor product of the listed sites, in the
/// listed order) into the full space with factor dimensions `dims`; identity
/// on every other site. Row-major multi-index convention.
template <typename T>
Matrix<T> embed(const Matrix<T>& op, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& sites) {
  const std::size_t nsites = dims.size();
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::size_t sub = 1;
  for (auto s : sites) sub *= dims.at(s);
  if (op.rows() != sub || op.cols() != sub)
    throw ShapeError("embed: operator " + op.shape_string() + " does not match site dimension " + std::to_string(sub));

  std::vector<std::size_t> stride(nsites, 1);
  for (std::size_t k = nsites; k-- > 1;) stride[k - 1] = stride[k] * dims[k];

  // Decompose each full index into (site-part index, rest offset).
  std::vector<std::size_t> site_part(total), rest_part(total);
  std::vector<std::size_t> site_stride(sites.size(), 1);
  for (std::size_t k = sites.size(); k-- > 1;) site_stride[k - 1] = site_stride[k] * dims[sites[k]];
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t sp = 0, rest = idx;
    for (std::size_t k = 0; k < sites.size(); ++k) {
      const std::size_t digit = (idx / stride[sites[k]]) % dims[sites[k]];
      sp += digit * site_stride[k];
      rest -= digit * stride[sites[k]];
    }
    site_part[idx] = sp;
    rest_part[idx] = rest;
  }
  // Full index for (site-part index) with zero rest.
  std::vector<std::size_t> site_offset(sub);
  for (std::size_t sp = 0; sp < sub; ++sp) {
    std::size_t off = 0, r = sp;
    for (std::size_t k = sites.size(); k-- > 0;) {
      off += (r % dims[sites[k]]) * stride[sites[k]];
      r /= dims[sites[k]];
    }
    site_offset[sp] = off;
  }

  Matrix<T> out(total, total);
  for (std::size_t row = 0; row < total; ++row) {
    const std::size_t i = site_part[row];
    for (std::size_t j = 0; j < sub; ++j) {
      const T& x = op(i, j);
      if (is_zero(x)) continue;
      out(row, rest_part[row] + site_offset[j]) = x;
    }
  }
  return out;
}

/// Summary of a residual: exact zero or the size and first location of the
/// failure. Only columns selected by the mask (when present) are inspected.
struct ResidualReport {
  bool zero = true;
  std::size_t nonzero_entries = 0;
  std::size_t nonzero_terms = 0;
  /// Largest term count of a single entry.
  std::size_t max_terms = 0;
  /// (row, col) of the first nonzero entry, row-major scan.
  std::optional<std::vector<std::size_t>> witness;
  std::string first_value;

  void merge(const ResidualReport& other);
};

ResidualReport summarize(const PolyMatrix& m, const std::vector<bool>* column_mask = nullptr);
ResidualReport summarize(const ScalarMatrix& m, const std::vector<bool>* column_mask = nullptr);

}  // namespace ylab
