#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ylab/fundamental_r.hpp"
#include "ylab/representations.hpp"

namespace ylab {

/// L(u) = sum_k u^k coeffs[k] on V_fund (x) rep, stored cleared of
/// denominators. `gen_degree` is the largest number of generator factors in
/// any coefficient; it fixes the exact band for truncated representations.
struct LOperator {
  Metric metric;
  std::shared_ptr<const Representation> rep;
  std::vector<ScalarMatrix> coeffs;
  int gen_degree = 1;
  std::string label;

  std::size_t space_dim() const { return metric.n() * rep->dim; }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  PolyMatrix at(const Poly2& x) const;
  /// Coefficient of u^k (zero outside the stored range).
  ScalarMatrix coeff(int k) const;
};

/// L(u) = u - G, G = sum E_ab (x) G^a_b.
LOperator linear_l(const Representation& rep);

/// u^2 L(u) with L(u) = 1 + (beta - G)/u + (G^2 - 2 beta G - 1)/(2u^2), G fundamental.
LOperator fundamental_quadratic_l(const Metric& metric);

/// (u - lambda)(u - mu) + (u - sigma) M + M^2 with M the generator matrix.
LOperator js_quadratic_l(const Representation& rep, const Scalar& lambda, const Scalar& mu, const Scalar& sigma);

/// u^2 + u G + N with N = (G^2 - beta G)/2 - beta^2/4 - m2/8.
LOperator lgn_l(const Representation& rep, const Scalar& m2);

/// u^2 - u G + (G^2 - beta G)/2 + c with c = -beta^2/4 - m2/8 + (n - eps - 2)/4.
LOperator quadratic_evaluation_l(const Representation& rep, const Scalar& m2);

/// (u - a) L(u): the cleared form of the automorphism L -> (u - a)/u L.
LOperator shifted(const LOperator& l, const Scalar& a);

/// R12(u - v) L1(u) L2(v) - L2(v) L1(u) R12(u - v) on V (x) V (x) rep.
PolyMatrix check_rll(const FundamentalR& r, const LOperator& l);
/// Columns of V (x) V (x) rep on which the RLL products are exact.
std::vector<bool> rll_mask(const LOperator& l);
ResidualReport rll_report(const FundamentalR& r, const LOperator& l);

/// The (j, k) relation among Yangian generators, read off at u^{-k} v^{-j}
/// with L^(0) = 1 and L^(i) = 0 outside [0, 2]. `l1`, `l2` are L^(1), L^(2)
/// on V_fund (x) W; the result acts on V (x) V (x) W.
ScalarMatrix yangian_relation(const Metric& metric, std::size_t rep_dim, const ScalarMatrix& l1, const ScalarMatrix& l2,
                              int j, int k);

/// K12 (G1 G2 + beta G2) - (G2 G1 + beta G2) K12.
ScalarMatrix linear_obstruction(const Representation& rep);

/// L(u) = base(u) + sum_i theta_i direction_i(u) over a representation.
struct AffineFamily {
  std::vector<std::string> names;
  std::function<PolyMatrix(const Poly2&)> base;
  std::vector<std::function<PolyMatrix(const Poly2&)>> directions;
  int gen_degree = 2;
};

/// Exact solution set of the RLL residual (a quadratic system in theta),
/// obtained by alternating row reduction and elimination of linear pivots.
struct ParameterSolution {
  enum class Kind { none, unique, family } kind = Kind::none;
  std::vector<std::string> names;
  /// Solved variables, as expressions in the free ones (constants when unique).
  std::vector<std::pair<std::string, std::string>> solved;
  std::vector<std::pair<std::string, Scalar>> values;
  /// Remaining polynomial constraints and free variables (families only).
  std::vector<std::string> constraints;
  std::size_t equations = 0;
  std::string to_string() const;
  std::optional<Scalar> value(const std::string& name) const;
};

ParameterSolution solve_rll_parameters(const FundamentalR& r, const Representation& rep, const AffineFamily& family);

/// The (lambda + mu, lambda mu, sigma) family of js_quadratic_l.
AffineFamily js_parameter_family(const Representation& rep);
/// u^2 + u (x1 G) + x2 G^2 + x3 G + x4: every monic quadratic in G up to a shift of u.
AffineFamily quadratic_generator_family(const Representation& rep);

}  // namespace ylab
