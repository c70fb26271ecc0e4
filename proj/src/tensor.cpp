#include "ylab/tensor.hpp"

#include <algorithm>

namespace ylab {

namespace {

std::size_t term_count(const Poly2& p) { return p.terms().size(); }
std::size_t term_count(const Scalar& s) { return s.is_zero() ? 0 : 1; }

template <typename T>
ResidualReport summarize_impl(const Matrix<T>& m, const std::vector<bool>* mask) {
  ResidualReport r;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (mask != nullptr && !(*mask)[j]) continue;
      const T& x = m(i, j);
      if (is_zero(x)) continue;
      if (r.zero) {
        r.witness = std::vector<std::size_t>{i, j};
        r.first_value = x.to_string();
      }
      r.zero = false;
      ++r.nonzero_entries;
      r.nonzero_terms += term_count(x);
      r.max_terms = std::max(r.max_terms, term_count(x));
    }
  return r;
}

}  // namespace

void ResidualReport::merge(const ResidualReport& other) {
  if (zero && !other.zero) {
    witness = other.witness;
    first_value = other.first_value;
  }
  zero = zero && other.zero;
  nonzero_entries += other.nonzero_entries;
  nonzero_terms += other.nonzero_terms;
  max_terms = std::max(max_terms, other.max_terms);
}

ResidualReport summarize(const PolyMatrix& m, const std::vector<bool>* column_mask) {
  return summarize_impl(m, column_mask);
}

ResidualReport summarize(const ScalarMatrix& m, const std::vector<bool>* column_mask) {
  return summarize_impl(m, column_mask);
}

}  // namespace ylab
