#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ylab/yangian_l.hpp"

namespace ylab {

/// A product gamma^{a1} ... gamma^{ak} (upper internal indices) with a coefficient.
struct GammaWord {
  std::vector<std::size_t> indices;
  Scalar coefficient = Scalar(1);
};

/// tr(gamma^{a1} ... gamma^{ak}) in units of C = tr(1), from the recursion
/// tr(g^{a1} W) = sum_j (-eps)^{j-2} eps^{a1 aj} tr(W without aj); odd words vanish.
class GammaTraces {
 public:
  explicit GammaTraces(const Metric& metric) : metric_(metric) {}
  const Metric& metric() const { return metric_; }
  Scalar operator()(const std::vector<std::size_t>& word) const;
  Scalar operator()(const GammaWord& word) const { return word.coefficient * (*this)(word.indices); }

 private:
  Metric metric_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<std::size_t>, Scalar> memo_;
};

Scalar gamma_trace(const Metric& metric, const GammaWord& word);

/// Explicit tr(gamma^{a1} ... gamma^{ak}) / tr(1) with gamma = sqrt(2) c on the
/// fermionic Fock space (even words only; orthogonal family).
Scalar explicit_gamma_trace(const OscillatorSet& osc, const std::vector<std::size_t>& word);

/// (1/C) tr_s([(u - lambda) - Phi] gamma^e [(u - mu) + Phi] gamma_f) on V_fund (x) rep,
/// where u - Phi = u + (1/2) F^a_b (x) G^b_a is the spinorial L and the transposed
/// partner acts by right multiplication. Block (f, e) holds the rep operator:
/// gamma^e is the input vector, gamma_f reads off the output coordinate.
struct FusedOperator {
  Metric metric;
  std::shared_ptr<const Representation> rep;
  Scalar lambda, mu;
  PolyMatrix matrix;
  /// Coefficients in u as an L-operator (degree 2, two generator factors).
  LOperator as_l(const std::string& label = "fused") const;
};

FusedOperator fuse(const Representation& rep, const Scalar& lambda, const Scalar& mu);
/// Spinor pair over the fundamental representation.
FusedOperator fuse_spinor_pair(const Metric& metric, const Scalar& lambda, const Scalar& mu);
/// Spinor pair over a JS representation; refuses representations violating defR5.
FusedOperator fuse_js(const Representation& rep, const Scalar& lambda, const Scalar& mu);
/// Same contraction with explicit Clifford matrices (orthogonal family).
FusedOperator fuse_explicit(const Representation& rep, const Scalar& lambda, const Scalar& mu);

/// {(u-l)(u-m) - (eps n - 3)/4} I + {u - (l+m)/2 + (eps n - 2)/4} P - {u - (l+m)/2 - (eps n - 2)/4} eps K.
PolyMatrix spinor_pair_closed_form(const Metric& metric, const Scalar& lambda, const Scalar& mu);

/// The two shift parameters with lambda + mu = s and lambda mu = p, when rational.
std::optional<std::pair<Scalar, Scalar>> rational_roots(const Scalar& s, const Scalar& p);

}  // namespace ylab
