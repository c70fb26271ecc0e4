#include "ylab/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "ylab/linalg.hpp"

namespace ylab {

std::string to_string(Basis b) { return b == Basis::delta ? "delta" : "split"; }

Metric::Metric(AlgebraKind kind, int n, Basis basis) : kind_(kind), n_(n), basis_(basis) {
  if (n < 1) throw std::invalid_argument("metric dimension must be positive");
  if (!kind.orthogonal() && n % 2 != 0) throw std::invalid_argument("symplectic metric needs even n");
  if (!kind.orthogonal() && basis == Basis::delta)
    throw std::invalid_argument("delta basis is only available for the orthogonal family");

  upper_ = ScalarMatrix(n, n);
  if (basis == Basis::delta) {
    for (int a = 1; a <= n; ++a) labels_.push_back(a);
    for (int k = 0; k < n; ++k) upper_(k, k) = Scalar(1);
  } else {
    const int m = n / 2;
    for (int a = -m; a <= -1; ++a) labels_.push_back(a);
    if (n % 2 != 0) labels_.push_back(0);
    for (int a = 1; a <= m; ++a) labels_.push_back(a);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      const int a = labels_[i];
      const std::size_t j = index_of(-a);
      const long sign = kind.orthogonal() ? 1 : (a > 0 ? 1 : -1);
      upper_(i, j) = Scalar(sign);
    }
  }
  lower_ = inverse(upper_);
}

std::size_t Metric::index_of(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("no index label " + std::to_string(label) + " in " + name());
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string Metric::name() const { return kind_.short_name() + "(" + std::to_string(n_) + ")/" + to_string(basis_); }

Metric make_metric(AlgebraKind kind, int n, Basis basis) { return Metric(kind, n, basis); }

Scalar beta(const Metric& metric) { return Scalar(static_cast<long>(metric.n()), 2) - Scalar(metric.epsilon()); }

}  // namespace ylab
