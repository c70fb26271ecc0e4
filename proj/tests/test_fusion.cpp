#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ylab/fusion.hpp"

using namespace ylab;

namespace {

/// c with fused = c R, or nullopt.
std::optional<Scalar> proportionality(const PolyMatrix& fused, const PolyMatrix& r) {
  std::optional<Scalar> factor;
  for (std::size_t i = 0; i < r.rows() && !factor; ++i)
    for (std::size_t j = 0; j < r.cols() && !factor; ++j)
      if (!r(i, j).is_zero()) factor = fused(i, j).coeff(r(i, j).degree_u(), 0) / r(i, j).coeff(r(i, j).degree_u(), 0);
  PolyMatrix d = fused;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) d(i, j) -= r(i, j) * *factor;
  if (!d.is_zero()) return std::nullopt;
  return factor;
}

bool same_l(const LOperator& a, const LOperator& b, const Scalar& factor = Scalar(1)) {
  for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k)
    if (!(a.coeff(k) * factor - b.coeff(k)).is_zero()) return false;
  return true;
}

Scalar m2_of(const Metric& m, int degree) {
  const long eps = m.epsilon();
  return Scalar(2L * degree * (degree * eps + static_cast<long>(m.n()) - 2 * eps));
}

}  // namespace

TEST_CASE("gamma traces") {
  for (auto [kind, n] : {std::pair{AlgebraKind::so(), 4}, {AlgebraKind::sp(), 4}}) {
    Metric m = make_metric(kind, n);
    GammaTraces tr(m);
    CHECK(tr(std::vector<std::size_t>{}) == Scalar(1));
    for (std::size_t a = 0; a < m.n(); ++a) {
      CHECK(tr({a}).is_zero());
      for (std::size_t b = 0; b < m.n(); ++b) {
        CHECK(tr({a, b}) == m.upper(a, b));
        CHECK(tr({a, b, a}).is_zero());
      }
    }
    // Four-point trace: e^{ab} e^{cd} - eps e^{ac} e^{bd} + e^{ad} e^{bc}.
    const Scalar eps(m.epsilon());
    for (std::size_t a = 0; a < m.n(); ++a)
      for (std::size_t b = 0; b < m.n(); ++b)
        for (std::size_t c = 0; c < m.n(); ++c)
          for (std::size_t d = 0; d < m.n(); ++d)
            CHECK(tr({a, b, c, d}) == m.upper(a, b) * m.upper(c, d) - eps * m.upper(a, c) * m.upper(b, d) +
                                          m.upper(a, d) * m.upper(b, c));
  }
}

TEST_CASE("trace recursion agrees with explicit Clifford matrices") {
  for (int n : {2, 3, 4}) {
    Metric m = make_metric(AlgebraKind::so(), n);
    OscillatorSet osc = oscillators(m, OscillatorKind::fermionic);
    GammaTraces tr(m);
    std::vector<std::size_t> word;
    std::function<void()> walk = [&] {
      if (word.size() % 2 == 0) CHECK(explicit_gamma_trace(osc, word) == tr(word));
      if (word.size() == 6) return;
      for (std::size_t a = 0; a < m.n(); ++a) {
        word.push_back(a);
        walk();
        word.pop_back();
      }
    };
    walk();
    const Representation f = fundamental_rep(m);
    CHECK(fuse_explicit(f, Scalar(1, 3), Scalar(-1, 2)).matrix == fuse(f, Scalar(1, 3), Scalar(-1, 2)).matrix);
  }
}

TEST_CASE("spinor pair fused over the fundamental representation") {
  for (int n : {3, 4, 5, 6}) {
    Metric m = make_metric(AlgebraKind::so(), n);
    const auto roots = rational_roots(Scalar(2 - n, 2), Scalar(n - 3, 4));
    CAPTURE(n);
    if (!roots) continue;
    const auto [l, mu] = *roots;
    const PolyMatrix fused = fuse_spinor_pair(m, l, mu).matrix;
    CHECK(fused == spinor_pair_closed_form(m, l, mu));
    const auto factor = proportionality(fused, fundamental_r(m).matrix());
    REQUIRE(factor.has_value());
    CHECK(*factor == Scalar(1));
  }
  Metric so4 = make_metric(AlgebraKind::so(), 4);
  const auto roots = rational_roots(Scalar(-1), Scalar(1, 4));
  REQUIRE(roots.has_value());
  CHECK(roots->first == Scalar(-1, 2));
  CHECK(roots->second == Scalar(-1, 2));
  CHECK_FALSE(proportionality(fuse_spinor_pair(so4, Scalar(0), Scalar(1)).matrix, fundamental_r(so4).matrix()));
}

TEST_CASE("symplectic spinor pair needs lambda + mu = -beta") {
  for (int n : {2, 4}) {
    Metric m = make_metric(AlgebraKind::sp(), n);
    CAPTURE(n);
    const PolyMatrix r = fundamental_r(m).matrix();
    const Scalar product(-n - 3, 4);
    const auto unshifted = rational_roots(beta(m), product);
    if (unshifted) CHECK_FALSE(proportionality(fuse_spinor_pair(m, unshifted->first, unshifted->second).matrix, r));
    const auto roots = rational_roots(-beta(m), product);
    REQUIRE(roots.has_value());
    const auto factor = proportionality(fuse_spinor_pair(m, roots->first, roots->second).matrix, r);
    REQUIRE(factor.has_value());
    CHECK(*factor == Scalar(-1));
  }
}

TEST_CASE("spinor pair fused over JS representations") {
  Metric so4 = make_metric(AlgebraKind::so(), 4);
  const FundamentalR r = fundamental_r(so4);
  for (int d : {1, 2}) {
    const Representation js =
        d == 1 ? js_rep(so4, 1) : restrict_rep(js_rep(so4, d), harmonic_subspace(so4, d), "harmonic");
    CAPTURE(d);
    const LOperator fused = fuse_js(js, Scalar(0), Scalar(0)).as_l();
    CHECK(rll_report(r, fused).zero);
    CHECK(same_l(fused, quadratic_evaluation_l(js, m2_of(so4, d))));
    CHECK_FALSE(same_l(fused, lgn_l(js, m2_of(so4, d))));

    // N = G^2/2 - Tr G^2/8 + (n - 2) G/4 with G = -generator_matrix.
    const ScalarMatrix g = -generator_matrix(js);
    const ScalarMatrix tr = kron(ScalarMatrix::identity(so4.n()), casimir(js));
    CHECK(fused.coeff(1) == g);
    CHECK(fused.coeff(0) == g * g * Scalar(1, 2) - tr * Scalar(1, 8) + g * Scalar(1, 2));
  }

  Metric sp4 = make_metric(AlgebraKind::sp(), 4);
  const Representation js = js_rep(sp4, 1);
  const Scalar lam(2);
  const LOperator fused = fuse_js(js, lam, -lam).as_l();
  CHECK(rll_report(fundamental_r(sp4), fused).zero);
  CHECK(same_l(fused, quadratic_evaluation_l(js, m2_of(sp4, 1)), Scalar(-1)));
  CHECK_FALSE(rll_report(fundamental_r(sp4), fuse_js(js, Scalar(0), Scalar(1)).as_l()).zero);

  CHECK_THROWS(fuse_js(spinor_rep(oscillators(so4, OscillatorKind::fermionic)), Scalar(0), Scalar(0)));
  CHECK_THROWS(fuse_js(tensor_product(js_rep(so4, 1), js_rep(so4, 1)), Scalar(0), Scalar(0)));
}
