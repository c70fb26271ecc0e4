#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ylab/yangian_l.hpp"

using namespace ylab;

namespace {

Representation harmonic(const Metric& m, int degree) {
  if (degree < 2) return js_rep(m, degree);
  return restrict_rep(js_rep(m, degree), harmonic_subspace(m, degree), "harmonic");
}

Scalar m2_of(const Metric& m, int degree) {
  const long eps = m.epsilon();
  return Scalar(2L * degree * (degree * eps + static_cast<long>(m.n()) - 2 * eps));
}

}  // namespace

TEST_CASE("linear evaluation on spinor representations") {
  for (int n = 2; n <= 8; ++n) {
    Metric m = make_metric(AlgebraKind::so(), n);
    CAPTURE(n);
    CHECK(rll_report(fundamental_r(m), linear_l(spinor_rep(oscillators(m, OscillatorKind::fermionic)))).zero);
  }
  for (int n : {2, 4}) {
    Metric m = make_metric(AlgebraKind::sp(), n);
    const Representation s = spinor_rep(oscillators(m, OscillatorKind::bosonic, 8));
    CHECK(rll_report(fundamental_r(m), linear_l(s)).zero);
  }
}

TEST_CASE("linear evaluation holds exactly when the Lie and quadratic identities hold") {
  Metric so4 = make_metric(AlgebraKind::so(), 4);
  Metric sp2 = make_metric(AlgebraKind::sp(), 2);
  std::vector<Representation> zoo{spinor_rep(oscillators(so4, OscillatorKind::fermionic)),
                                  js_rep(so4, 1),
                                  js_rep(so4, 2),
                                  fundamental_rep(so4),
                                  sign_flipped(spinor_rep(oscillators(so4, OscillatorKind::fermionic)), 0, 1),
                                  js_rep(sp2, 1),
                                  fundamental_rep(sp2)};
  for (const auto& rep : zoo) {
    CAPTURE(rep.metric.name());
    CAPTURE(rep.label);
    const bool rll = rll_report(fundamental_r(rep.metric), linear_l(rep)).zero;
    const bool conditions =
        check_lie_relations(rep).zero && check_characteristic(rep, CharacteristicKind::quadratic).zero;
    CHECK(rll == conditions);
  }
  CHECK_FALSE(rll_report(fundamental_r(so4), linear_l(js_rep(so4, 2))).zero);
}

TEST_CASE("linear obstruction and the (2, 3) Yangian relation") {
  Metric so4 = make_metric(AlgebraKind::so(), 4);
  for (const auto& rep : {spinor_rep(oscillators(so4, OscillatorKind::fermionic)), js_rep(so4, 2)}) {
    const ScalarMatrix l1 = -generator_matrix(rep);
    const ScalarMatrix l2(l1.rows(), l1.cols());
    const bool relation = yangian_relation(so4, rep.dim, l1, l2, 2, 3).is_zero();
    const bool obstruction = linear_obstruction(rep).is_zero();
    CHECK(relation == obstruction);
    CHECK(relation == rll_report(fundamental_r(so4), linear_l(rep)).zero);
  }
}

TEST_CASE("fundamental quadratic evaluation") {
  Metric so3 = make_metric(AlgebraKind::so(), 3);
  CHECK(fundamental_quadratic_l(so3).at(Poly2::u()) == fundamental_r(so3).matrix());

  Metric sp4 = make_metric(AlgebraKind::sp(), 4);
  const LOperator l = fundamental_quadratic_l(sp4);
  CHECK(rll_report(fundamental_r(sp4), l).zero);
  const ScalarMatrix g = generator_matrix(fundamental_rep(sp4));
  CHECK(l.coeff(1) == ScalarMatrix::identity(g.rows()) * beta(sp4) - g);

  for (const Metric& m : {so3, sp4}) {
    const LOperator f = fundamental_quadratic_l(m);
    for (int j = 0; j <= 8; ++j)
      for (int k = 0; j + k <= 8; ++k) {
        CAPTURE(j);
        CAPTURE(k);
        CHECK(yangian_relation(m, m.n(), f.coeff(1), f.coeff(0), j, k).is_zero());
      }
  }
}

TEST_CASE("quadratic evaluation on JS representations") {
  for (auto [kind, n] : {std::pair{AlgebraKind::so(), 3}, {AlgebraKind::so(), 4}, {AlgebraKind::so(), 5},
                         {AlgebraKind::sp(), 2}, {AlgebraKind::sp(), 4}}) {
    Metric m = make_metric(kind, n);
    const FundamentalR r = fundamental_r(m);
    for (int d = 1; d <= 2; ++d) {
      if (!kind.orthogonal() && 2 * d > n) continue;
      const Representation h = harmonic(m, d);
      CAPTURE(m.name());
      CAPTURE(d);
      const bool degenerate = check_characteristic(h, CharacteristicKind::quadratic).zero;
      if (!degenerate) CHECK(rll_report(r, quadratic_evaluation_l(h, m2_of(m, d))).zero);
      if (kind.orthogonal() && n > 2) CHECK_FALSE(rll_report(r, lgn_l(h, m2_of(m, d))).zero);
    }
  }
}

TEST_CASE("monic quadratic family: solved coefficients") {
  Metric so4 = make_metric(AlgebraKind::so(), 4);
  const FundamentalR r = fundamental_r(so4);
  const Representation js = js_rep(so4, 1);
  const ParameterSolution s = solve_rll_parameters(r, js, quadratic_generator_family(js));
  CHECK(s.kind == ParameterSolution::Kind::family);
  // The three-parameter (lambda, mu, sigma) family admits no solution.
  CHECK(solve_rll_parameters(r, js, js_parameter_family(js)).kind == ParameterSolution::Kind::none);
  // x1 = -1 branch: x2 = 1/2, x3 = -beta/2 and x4 fixed.
  AffineFamily fam = quadratic_generator_family(js);
  const ScalarMatrix g = generator_matrix(js);
  const ScalarMatrix one = ScalarMatrix::identity(g.rows());
  const Scalar m2 = m2_of(so4, 1);
  const LOperator q = quadratic_evaluation_l(js, m2);
  CHECK(q.coeff(2) == one);
  CHECK(q.coeff(1) == -g);
  CHECK(q.coeff(0) == (g * g - g * beta(so4)) * Scalar(1, 2) + one * Scalar(-3, 4));
}

TEST_CASE("shift automorphism preserves RLL") {
  Metric so4 = make_metric(AlgebraKind::so(), 4);
  Metric sp2 = make_metric(AlgebraKind::sp(), 2);
  CHECK(rll_report(fundamental_r(so4), shifted(linear_l(spinor_rep(oscillators(so4, OscillatorKind::fermionic))),
                                                Scalar(3, 5)))
            .zero);
  CHECK(rll_report(fundamental_r(sp2), shifted(fundamental_quadratic_l(sp2), Scalar(-2, 7))).zero);
}
