#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ylab/matrix.hpp"

namespace ylab {

enum class Family { orthogonal, symplectic };

/// so (epsilon = +1) or sp (epsilon = -1).
struct AlgebraKind {
  Family family = Family::orthogonal;

  int epsilon() const { return family == Family::orthogonal ? 1 : -1; }
  bool orthogonal() const { return family == Family::orthogonal; }
  std::string short_name() const { return orthogonal() ? "so" : "sp"; }

  static AlgebraKind so() { return {Family::orthogonal}; }
  static AlgebraKind sp() { return {Family::symplectic}; }
  friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
};

/// delta: labels 1..n with eps^{ab} = delta^{ab} (orthogonal only).
/// split: labels -m..-1, (0 for odd n), 1..m with eps^{ab} = delta^{a,-b}
/// (orthogonal) or sign(a) delta^{a,-b} (symplectic).
enum class Basis { delta, split };

std::string to_string(Basis b);

/// Invariant bilinear form eps_ab with eps_ab = epsilon * eps_ba and
/// eps_ab eps^bd = delta_a^d. External labels map to internal indices
/// 0..n-1 in label order; all tensor code uses internal indices.
class Metric {
 public:
  Metric(AlgebraKind kind, int n, Basis basis);

  AlgebraKind kind() const { return kind_; }
  int epsilon() const { return kind_.epsilon(); }
  std::size_t n() const { return static_cast<std::size_t>(n_); }
  Basis basis() const { return basis_; }

  /// eps_{ab}
  const Scalar& lower(std::size_t a, std::size_t b) const { return lower_(a, b); }
  /// eps^{ab}
  const Scalar& upper(std::size_t a, std::size_t b) const { return upper_(a, b); }
  const ScalarMatrix& lower_matrix() const { return lower_; }
  const ScalarMatrix& upper_matrix() const { return upper_; }

  int label(std::size_t index) const { return labels_.at(index); }
  const std::vector<int>& labels() const { return labels_; }
  std::size_t index_of(int label) const;

  /// "so(4)/split" style tag for reports.
  std::string name() const;

  friend bool operator==(const Metric& a, const Metric& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  AlgebraKind kind_;
  int n_;
  Basis basis_;
  ScalarMatrix lower_;
  ScalarMatrix upper_;
  std::vector<int> labels_;
};

/// Throws std::invalid_argument for odd symplectic n or a symplectic delta basis.
Metric make_metric(AlgebraKind kind, int n, Basis basis = Basis::split);

/// n/2 - epsilon.
Scalar beta(const Metric& metric);

}  // namespace ylab
