#include "ylab/matrix.hpp"

namespace ylab {

PolyMatrix to_poly(const ScalarMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = Poly2(m(i, j));
  return out;
}

PolyMatrix scale(const PolyMatrix& m, const Poly2& p) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = m(i, j) * p;
  return out;
}

PolyMatrix scale(const ScalarMatrix& m, const Poly2& p) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = p * m(i, j);
  return out;
}

ScalarMatrix evaluate(const PolyMatrix& m, const Scalar& u, const Scalar& v) {
  ScalarMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(u, v);
  return out;
}

std::optional<Scalar> PolyRatio::constant() const {
  if (num.is_zero()) return Scalar(0);
  if (num.terms().size() != den.terms().size()) return std::nullopt;
  const auto& a = num.terms();
  const auto& b = den.terms();
  if (a[0].du != b[0].du || a[0].dv != b[0].dv) return std::nullopt;
  Scalar c = a[0].coeff / b[0].coeff;
  if (num == den * c) return c;
  return std::nullopt;
}

std::string PolyRatio::to_string() const {
  if (auto c = constant()) return c->to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

std::optional<PolyRatio> proportional_to(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("proportional_to: " + a.shape_string() + " vs " + b.shape_string());
  // Pivot: first nonzero entry of b.
  std::size_t pi = 0, pj = 0;
  bool found = false;
  for (std::size_t i = 0; i < b.rows() && !found; ++i)
    for (std::size_t j = 0; j < b.cols() && !found; ++j)
      if (!b(i, j).is_zero()) {
        pi = i;
        pj = j;
        found = true;
      }
  if (!found) throw std::invalid_argument("proportional_to: reference matrix is zero");
  const Poly2& an = a(pi, pj);
  const Poly2& bd = b(pi, pj);
  // a_ij * b_p == a_p * b_ij for every entry.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Poly2& x = a(i, j);
      const Poly2& y = b(i, j);
      if (x.is_zero() && y.is_zero()) continue;
      if (x * bd != an * y) return std::nullopt;
    }
  return PolyRatio{an, bd};
}

}  // namespace ylab
