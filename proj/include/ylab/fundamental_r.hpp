#pragma once

#include <functional>

#include "ylab/algebra.hpp"
#include "ylab/matrix.hpp"

namespace ylab {

/// Identity, permutation and trace operators on V (x) V.
/// K^{a1 a2}_{b1 b2} = eps^{a1 a2} eps_{b1 b2}.
struct IPK {
  ScalarMatrix i_op;
  ScalarMatrix p_op;
  ScalarMatrix k_op;
};

IPK build_ipk(const Metric& metric);

/// R(x) = x(x + beta) I + (x + beta) P - eps x K.
class FundamentalR {
 public:
  explicit FundamentalR(const Metric& metric);
  /// Same operator family with beta overridden (used for negative controls).
  FundamentalR(const Metric& metric, const Scalar& beta);

  const Metric& metric() const { return metric_; }
  const Scalar& beta() const { return beta_; }
  const IPK& ipk() const { return ipk_; }

  /// R evaluated at a polynomial spectral argument.
  PolyMatrix at(const Poly2& x) const;
  /// R(u).
  const PolyMatrix& matrix() const { return matrix_; }

 private:
  Metric metric_;
  Scalar beta_;
  IPK ipk_;
  PolyMatrix matrix_;
};

FundamentalR fundamental_r(const Metric& metric);

/// Yang's gl(n) solution x I + P.
PolyMatrix yang_r(std::size_t n, const Poly2& x);

/// R12(u) R13(u+v) R23(v) - R23(v) R13(u+v) R12(u) on V^{(x)3}.
PolyMatrix check_ybe(const std::function<PolyMatrix(const Poly2&)>& r, std::size_t n);
PolyMatrix check_ybe(const FundamentalR& r);

}  // namespace ylab
