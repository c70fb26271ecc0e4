#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "ylab/representations.hpp"

namespace ylab {

/// Thrown when a recurrence denominator vanishes.
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, int k) : std::domain_error(what), k_(k) {}
  int k() const { return k_; }

 private:
  int k_;
};

struct SymmetrizedBasisElement {
  int k = 0;
  std::vector<std::size_t> indices;  // sorted (strict for fermions)
  ScalarMatrix matrix;
};

/// (Anti)symmetrized products c^{[a1} ... c^{ak)} = sum over S_k of
/// (-eps)^{parity} c^{a_s(1)} ... c^{a_s(k)}, including all k! terms.
/// Bosonic elements are formed on an enlarged space and compressed, so each
/// element is the exact compression of the infinite-dimensional operator.
class SymmetrizedBasis {
 public:
  explicit SymmetrizedBasis(const OscillatorSet& osc);

  const OscillatorSet& oscillators() const { return osc_; }
  /// Sorted multi-indices of order k (sets for fermions, multisets for bosons).
  std::vector<std::vector<std::size_t>> indices(int k) const;
  /// Element for a sorted multi-index.
  const ScalarMatrix& element(const std::vector<size_t>& sorted) const;
  /// Element for an arbitrary index tuple, reordered with the (anti)symmetry sign.
  ScalarMatrix symmetrized(std::vector<std::size_t> tuple) const;

 private:
  void build_order(int k) const;

  OscillatorSet osc_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<std::size_t>, ScalarMatrix> cache_;
  mutable std::vector<bool> built_;
};

/// Shared basis per oscillator configuration.
std::shared_ptr<const SymmetrizedBasis> symmetrized_basis_for(const OscillatorSet& osc);
std::vector<SymmetrizedBasisElement> symmetrized_basis(const OscillatorSet& osc, int k);

/// r_0 .. r_{k_max} with r_{k+2} = 4(k + eps u)/((k + 2) - eps(u + n)) r_k and
/// r_0 = 1, r_1 = odd_ratio.
std::vector<Scalar> r_coefficients(const Metric& metric, const Scalar& u, int k_max,
                                   const Scalar& odd_ratio = Scalar(1));

/// Same chain with an extra factor eps per step:
/// r_{k+2} = 4 eps (k + eps u)/((k + 2) - eps(u + n)) r_k.
std::vector<Scalar> r_coefficients_signed(const Metric& metric, const Scalar& u, int k_max,
                                          const Scalar& odd_ratio = Scalar(1));

/// Finite-product form of the Gamma ratios:
/// r_2m = 4^m prod_{j<m}(j + eps u/2) / prod_{1<=j<=m}(j - eps(u+n)/2),
/// r_2m+1 = 4^m prod_{j<m}(j + 1/2 + eps u/2) / prod_{j<m}(j + 3/2 - eps(u+n)/2).
Scalar r_closed_form(const Metric& metric, const Scalar& u, int k);
/// Odd coefficients as the ratio Gamma(m + 1/2 + eps u/2) / Gamma(m + 1/2 - eps(u+n)/2)
/// normalized at m = 0 (a denominator shifted by one against the recurrence).
Scalar r_odd_gamma_literal(const Metric& metric, const Scalar& u, int m);

/// averaged: c^{[a1..ak)} carries 1/k! (generating-function normalization, the
/// one under which the coefficient recurrence holds); permutation_sum: the bare
/// sum over S_k.
enum class BasisNormalization { averaged, permutation_sum };

struct SpinorialRSeries {
  Metric metric;
  Scalar u;
  int k_max = 0;
  std::vector<Scalar> r;
  ScalarMatrix assembled;  // on Fock (x) Fock
  std::size_t fock_dim = 0;
  int cutoff = 0;
  bool bosonic = false;
  BasisNormalization normalization = BasisNormalization::averaged;
};

/// R = sum_k r_k/k! sum eps_{a1 b1}...eps_{ak bk} c^{[a..)} (x) c^{[b..)}.
/// `r` overrides the coefficient sequence when non-empty.
SpinorialRSeries assemble_spinorial_r(const OscillatorSet& osc, const Scalar& u, int k_max,
                                      std::vector<Scalar> r = {},
                                      BasisNormalization norm = BasisNormalization::averaged);

/// Contribution of order k alone (without r_k / k!).
ScalarMatrix spinorial_r_order(const SymmetrizedBasis& basis, int k);

/// L(u) = u + (1/2) F^a_b (x) G^b_a and L~(u) = u - (1/2) (F^a_b)^t (x) G^b_a on
/// Fock (x) rep.
struct SpinorialL {
  std::size_t fock_dim = 0;
  std::shared_ptr<const Representation> rep;
  ScalarMatrix coupling;  // (1/2) sum F (x) G with the sign and transposition built in
  PolyMatrix at(const Poly2& x) const;
  std::size_t space_dim() const { return fock_dim * rep->dim; }
};

struct SpinorialLPair {
  SpinorialL l;
  SpinorialL tilde;
};

SpinorialLPair spinorial_l(const OscillatorSet& osc, const Representation& rep);

/// R12(u) L1(u + v) L2(v) - L1(v) L2(u + v) R12(u) on Fock (x) Fock (x) rep,
/// u fixed at the series point, v symbolic. `transpose_r` uses R^t in place of R.
PolyMatrix check_spinorial_rll(const SpinorialRSeries& series, const SpinorialL& l, bool transpose_r = false);
PolyMatrix check_spinorial_rll(const ScalarMatrix& r_check, const Scalar& u, const SpinorialL& l);

/// Fock (x) Fock (x) rep states with both occupations <= bound.
std::vector<bool> occupation_band(const OscillatorSet& osc, std::size_t rep_dim, int bound);

/// [F1^a_b + F2^a_b, R] for all a, b; for bosons order by order on the states
/// where each compressed order is exact.
ResidualReport check_sym(const SpinorialRSeries& series, const OscillatorSet& osc);

/// Elements of the Weyl algebra of two bosonic oscillator copies with
/// End(rep)-valued coefficients, stored as Weyl symbols (exponent vectors over
/// z_1^a, z_2^a).
using WeylMonomial = std::vector<int>;
using WeylElement = std::map<WeylMonomial, PolyMatrix>;

/// Moyal product truncated to bidifferential order `max_order`; exact when
/// either factor has degree <= max_order. `c` holds [z^i, z^j] over all
/// symbol variables.
WeylElement weyl_star(const WeylElement& f, const WeylElement& g, const ScalarMatrix& c, int max_order = 2);

struct WeylRllReport {
  ResidualReport residual;
  int exact_degree = 0;  // symbol degrees <= this are free of truncation effects
};

/// RLL relation for the bosonic series evaluated in the Weyl algebra rather
/// than on truncated Fock matrices: R is the symbol sum up to order k_max and
/// the residual is inspected in total symbol degree <= 2 k_max - 4.
WeylElement spinorial_rll_weyl_residual(const Metric& metric, const Representation& rep, const Scalar& u, int k_max,
                                        std::vector<Scalar> r = {});
WeylRllReport check_spinorial_rll_weyl(const Metric& metric, const Representation& rep, const Scalar& u, int k_max,
                                       std::vector<Scalar> r = {});

}  // namespace ylab
