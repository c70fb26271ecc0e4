#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ylab/algebra.hpp"
#include "ylab/matrix.hpp"
#include "ylab/tensor.hpp"

namespace ylab {

/// Matrices G^a_b (internal indices) acting on an explicit finite space.
///
/// Truncated spaces carry a grading (total occupation of each basis state)
/// and a cutoff. Each generator can raise the occupation by at most
/// `gen_raise`, so a product whose right-hand `depth` factors are generators
/// is exact on states with occupation <= cutoff - depth * gen_raise.
struct Representation {
  Metric metric;
  std::string label;
  std::size_t dim = 0;
  std::vector<ScalarMatrix> gens;  // index a * n + b -> G^a_b
  std::vector<int> grading;        // empty when ungraded
  std::optional<int> cutoff;
  int gen_raise = 0;

  Representation(Metric m, std::string lbl, std::size_t d);

  std::size_t n() const { return metric.n(); }
  const ScalarMatrix& g(std::size_t a, std::size_t b) const { return gens[a * n() + b]; }
  ScalarMatrix& g(std::size_t a, std::size_t b) { return gens[a * n() + b]; }
  /// G_ab = eps_ad G^d_b.
  ScalarMatrix lower(std::size_t a, std::size_t b) const;
  /// G^{ab} = G^a_d eps^{db}.
  ScalarMatrix upper(std::size_t a, std::size_t b) const;

  bool truncated() const { return cutoff.has_value(); }
  /// Basis states on which a product of depth+1 generators is exact.
  std::vector<bool> band(int depth) const;
};

/// Columns of V_fund (x) rep that belong to the band of the rep factor.
std::vector<bool> lift_mask(const std::vector<bool>& rep_mask, std::size_t outer_dim);

enum class OscillatorKind { fermionic, bosonic };

/// Clifford (eps = +1) or Heisenberg-Weyl (eps = -1) generators c^a with
/// c^a c^b + eps c^b c^a = eps^{ab}, realized on a Fock space.
///
/// Paired labels (-j, j) map to (creator a_j^+, annihilator a_j). Bosonic
/// states are monomials with a|k> = k|k-1>, a^+|k> = |k+1>, so all entries
/// are rational; basis states are ordered by total occupation, so every
/// truncation is a leading block. Odd orthogonal n adds one fermionic mode b
/// and c^0 = (-1)^{N_paired} (b + b^+/2), giving (c^0)^2 = 1/2 on a space of
/// dimension 2^{m+1}.
class OscillatorSet {
 public:
  OscillatorSet(const Metric& metric, OscillatorKind kind, int cutoff = 0);

  const Metric& metric() const { return metric_; }
  OscillatorKind kind() const { return kind_; }
  bool bosonic() const { return kind_ == OscillatorKind::bosonic; }
  int cutoff() const { return cutoff_; }
  std::size_t dim() const { return grading_.size(); }
  const std::vector<int>& grading() const { return grading_; }

  /// c^a (truncated for bosons).
  const ScalarMatrix& c(std::size_t a) const { return c_[a]; }
  /// Exact compression of the product c^{i1} c^{i2} ... to the truncated space.
  ScalarMatrix product(const std::vector<std::size_t>& upper_indices) const;
  /// Exact compression of c^a c_b, c_b = eps_bd c^d.
  ScalarMatrix mixed_pair(std::size_t a, std::size_t b) const;

  /// States on which an operator that raises occupation by `raise` still has
  /// an exact image.
  std::vector<bool> band(int raise) const;

  std::string describe() const;

 private:
  static std::vector<ScalarMatrix> build_bosonic(std::size_t modes, int cutoff, std::vector<int>& grading);
  const std::vector<ScalarMatrix>& extended(int extra) const;

  Metric metric_;
  OscillatorKind kind_;
  int cutoff_;
  std::vector<int> grading_;
  std::vector<ScalarMatrix> c_;
  mutable std::map<int, std::vector<ScalarMatrix>> extended_;
};

OscillatorSet oscillators(const Metric& metric, OscillatorKind kind, int cutoff = 0);

/// T(G^a_b)^c_d = -(P - eps K)^{ac}_{bd}.
Representation fundamental_rep(const Metric& metric);

/// F^a_b = c^a c_b - (eps/2) delta^a_b.
Representation spinor_rep(const OscillatorSet& osc);

/// Jordan-Schwinger realization on degree-m polynomials (orthogonal, commuting
/// x) or degree-m Grassmann monomials (symplectic, anticommuting x):
/// M_ab = eps x_a d_b - x_b d_a with d_a x_b - eps x_b d_a = eps_ab, and
/// G^a_b = sign * eps^{ad} M_db.
Representation js_rep(const Metric& metric, int degree, int sign = 1);

/// The operator d_a d^a = eps^{ab} d_a d_b from degree m to degree m-2
/// (zero map for m < 2).
ScalarMatrix js_laplacian(const Metric& metric, int degree);

/// Basis (as columns) of the kernel of the Laplacian on degree-m states.
ScalarMatrix harmonic_subspace(const Metric& metric, int degree);

/// Restriction of every generator to an invariant subspace.
Representation restrict_rep(const Representation& rep, const ScalarMatrix& basis, const std::string& label);

Representation direct_sum(const Representation& a, const Representation& b);
/// G (x) 1 + 1 (x) G.
Representation tensor_product(const Representation& a, const Representation& b);
/// Copy with G^a_b and the partner entering the antisymmetry relation negated.
Representation sign_flipped(const Representation& rep, std::size_t a, std::size_t b);

/// Sum over E_ab (x) G^a_b on V_fund (x) rep.
ScalarMatrix generator_matrix(const Representation& rep);
/// Tr(G^2) = G^a_b G^b_a on the rep space.
ScalarMatrix casimir(const Representation& rep);
/// Sum of G^a_a.
ScalarMatrix trace_generator(const Representation& rep);

/// The scalar c with op = c * I on the masked columns, when it exists.
std::optional<Scalar> scalar_value(const ScalarMatrix& op, const std::vector<bool>& mask);

ResidualReport check_lie_relations(const Representation& rep);

enum class CharacteristicKind { quadratic, cubic, anticommutator };
ResidualReport check_characteristic(const Representation& rep, CharacteristicKind kind);

/// Cubic polynomial with a fixed Casimir value m2 in place of Tr(G^2):
/// G^3 + (eps - n) G^2 + (eps n - 2 - eps m2/2) G + m2/2.
ResidualReport check_cubic_with_value(const Representation& rep, const Scalar& m2);
/// (G + eps m)(G - eps m - n + 2 eps)(G - eps).
ResidualReport check_cubic_factorized(const Representation& rep, int m);

/// (Anti)symmetrization over three indices of the anticommutator
/// [G_ae, G_fb]_+, with weight (-eps)^{parity}.
ResidualReport check_defR5(const Representation& rep);
/// Rewritten form: G_{a2 a1} G_{c1 c2} + G_{a1 c1} G_{a2 c2} + G_{c1 a2} G_{a1 c2}
///   - (eps_{c2 a1} G_{c1 a2} + eps_{c2 a2} G_{a1 c1} + eps_{c2 c1} G_{a2 a1}).
ResidualReport check_cycl(const Representation& rep);

}  // namespace ylab
