#include "ylab/fundamental_r.hpp"

#include "ylab/tensor.hpp"

namespace ylab {

IPK build_ipk(const Metric& metric) {
  const std::size_t n = metric.n();
  IPK out{ScalarMatrix::identity(n * n), ScalarMatrix(n * n, n * n), ScalarMatrix(n * n, n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.p_op(a * n + b, b * n + a) = Scalar(1);
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      const Scalar& up = metric.upper(a1, a2);
      if (up.is_zero()) continue;
      for (std::size_t b1 = 0; b1 < n; ++b1)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          const Scalar& lo = metric.lower(b1, b2);
          if (!lo.is_zero()) out.k_op(a1 * n + a2, b1 * n + b2) = up * lo;
        }
    }
  return out;
}

FundamentalR::FundamentalR(const Metric& metric) : FundamentalR(metric, ylab::beta(metric)) {}

FundamentalR::FundamentalR(const Metric& metric, const Scalar& beta)
    : metric_(metric), beta_(beta), ipk_(build_ipk(metric)) {
  matrix_ = at(Poly2::u());
}

PolyMatrix FundamentalR::at(const Poly2& x) const {
  const Poly2 shifted = x + Poly2(beta_);
  PolyMatrix out = scale(ipk_.i_op, x * shifted);
  out += scale(ipk_.p_op, shifted);
  out += scale(ipk_.k_op, x * Scalar(-metric_.epsilon()));
  return out;
}

FundamentalR fundamental_r(const Metric& metric) { return FundamentalR(metric); }

PolyMatrix yang_r(std::size_t n, const Poly2& x) {
  PolyMatrix out = scale(ScalarMatrix::identity(n * n), x);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out(a * n + b, b * n + a) += Poly2(1);
  return out;
}

PolyMatrix check_ybe(const std::function<PolyMatrix(const Poly2&)>& r, std::size_t n) {
  const std::vector<std::size_t> dims{n, n, n};
  const Poly2 u = Poly2::u(), v = Poly2::v();
  const PolyMatrix r12 = embed(r(u), dims, {0, 1});
  const PolyMatrix r13 = embed(r(u + v), dims, {0, 2});
  const PolyMatrix r23 = embed(r(v), dims, {1, 2});
  return r12 * r13 * r23 - r23 * r13 * r12;
}

PolyMatrix check_ybe(const FundamentalR& r) {
  return check_ybe([&r](const Poly2& x) { return r.at(x); }, r.metric().n());
}

}  // namespace ylab
