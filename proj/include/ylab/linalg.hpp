#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ylab/matrix.hpp"

namespace ylab {

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(ScalarMatrix m);

std::size_t rank(const ScalarMatrix& m);

/// Basis of {x : m x = 0}, one column per basis vector.
ScalarMatrix nullspace(const ScalarMatrix& m);

/// Inverse of a square matrix; throws std::domain_error when singular.
ScalarMatrix inverse(const ScalarMatrix& m);

/// Some x with m x = rhs (free variables set to zero), or nullopt.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, const std::vector<Scalar>& rhs);

/// Given a basis B (columns) of a subspace invariant under `op`, returns the
/// matrix of op restricted to that subspace in the basis B. Throws when the
/// subspace is not invariant.
ScalarMatrix restrict_to(const ScalarMatrix& op, const ScalarMatrix& basis);

}  // namespace ylab
