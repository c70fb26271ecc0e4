#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ylab/fundamental_r.hpp"
#include "ylab/representations.hpp"

using namespace ylab;

namespace {

Scalar eps_of(const Metric& m) { return Scalar(m.epsilon()); }

std::vector<bool> all_states(std::size_t d) { return std::vector<bool>(d, true); }

Representation harmonic(const Metric& m, int degree) {
  return restrict_rep(js_rep(m, degree), harmonic_subspace(m, degree), "harmonic");
}

}  // namespace

TEST_CASE("fermionic oscillators satisfy the Clifford relations") {
  for (int n : {2, 3, 4, 5, 6}) {
    Metric m = make_metric(AlgebraKind::so(), n);
    OscillatorSet osc = oscillators(m, OscillatorKind::fermionic);
    CHECK(osc.dim() == (std::size_t{1} << ((n / 2) + (n % 2))));
    const ScalarMatrix one = ScalarMatrix::identity(osc.dim());
    for (std::size_t a = 0; a < m.n(); ++a)
      for (std::size_t b = 0; b < m.n(); ++b)
        CHECK(commutator(osc.c(a), osc.c(b), -1) == one * m.upper(a, b));
  }
  Metric so2 = make_metric(AlgebraKind::so(), 2);
  OscillatorSet osc = oscillators(so2, OscillatorKind::fermionic);
  const std::size_t plus = so2.index_of(1), minus = so2.index_of(-1);
  CHECK(osc.c(plus) * osc.c(minus) + osc.c(minus) * osc.c(plus) == ScalarMatrix::identity(2));
  CHECK((osc.c(plus) * osc.c(plus)).is_zero());
}

TEST_CASE("odd orthogonal extra generator squares to one half") {
  Metric m = make_metric(AlgebraKind::so(), 5);
  OscillatorSet osc = oscillators(m, OscillatorKind::fermionic);
  const ScalarMatrix& c0 = osc.c(m.index_of(0));
  CHECK(c0 * c0 == ScalarMatrix::identity(osc.dim()) * Scalar(1, 2));
}

TEST_CASE("bosonic oscillators: pair relation exact below the cutoff") {
  Metric m = make_metric(AlgebraKind::sp(), 2);
  OscillatorSet osc = oscillators(m, OscillatorKind::bosonic, 5);
  const std::size_t p = m.index_of(1), q = m.index_of(-1);
  const ScalarMatrix comm = commutator(osc.c(p), osc.c(q));
  const ScalarMatrix expect = ScalarMatrix::identity(osc.dim()) * m.upper(p, q);
  const auto band = osc.band(1);
  CHECK(summarize(comm - expect, &band).zero);
  // The top state is outside the exact band and shows the truncation.
  CHECK_FALSE(summarize(comm - expect).zero);
  CHECK_THROWS(oscillators(make_metric(AlgebraKind::so(), 4), OscillatorKind::bosonic, 3));
}

TEST_CASE("fundamental representation") {
  Metric so4 = make_metric(AlgebraKind::so(), 4);
  CHECK(casimir(fundamental_rep(so4)) * Scalar(1, 2) == ScalarMatrix::identity(4) * Scalar(3));

  for (auto [kind, n] : {std::pair{AlgebraKind::so(), 3}, {AlgebraKind::sp(), 4}, {AlgebraKind::so(), 5}}) {
    Metric m = make_metric(kind, n);
    IPK x = build_ipk(m);
    const ScalarMatrix g = generator_matrix(fundamental_rep(m));
    CHECK(g == -(x.p_op - x.k_op * eps_of(m)));
    CHECK(g * g == x.i_op + x.k_op * Scalar(static_cast<long>(n) * m.epsilon() - 2));
    CHECK(check_lie_relations(fundamental_rep(m)).zero);
  }

  // G^3 - (n - eps) G^2 - G + (n - eps) = 0 for both families; the variant with
  // coefficient (1 - n eps) agrees for so and corresponds to -G for sp.
  for (auto [kind, n] : {std::pair{AlgebraKind::so(), 4}, {AlgebraKind::sp(), 4}}) {
    Metric m = make_metric(kind, n);
    const ScalarMatrix g = generator_matrix(fundamental_rep(m));
    const ScalarMatrix one = ScalarMatrix::identity(g.rows());
    const Scalar c(static_cast<long>(n) - m.epsilon());
    const Scalar d = Scalar(1) - Scalar(static_cast<long>(n) * m.epsilon());
    CHECK((g * g * g - g * g * c - g + one * c).is_zero());
    CHECK((g * g * g + g * g * d - g - one * d).is_zero() == kind.orthogonal());
    const ScalarMatrix h = -g;
    CHECK((h * h * h + h * h * d - h - one * d).is_zero() == !kind.orthogonal());
    CHECK(check_characteristic(fundamental_rep(m), CharacteristicKind::cubic).zero);
  }
}

TEST_CASE("spinor representation") {
  for (int n : {2, 3, 4, 5, 6}) {
    Metric m = make_metric(AlgebraKind::so(), n);
    Representation s = spinor_rep(oscillators(m, OscillatorKind::fermionic));
    CHECK(check_lie_relations(s).zero);
    CHECK(check_characteristic(s, CharacteristicKind::quadratic).zero);
    CHECK(check_characteristic(s, CharacteristicKind::anticommutator).zero);
    CHECK(trace_generator(s).is_zero());
    auto c2 = scalar_value(casimir(s), all_states(s.dim));
    REQUIRE(c2.has_value());
    CHECK(*c2 == Scalar(n * (n - 1), 4));
  }
  // F^2 - beta F = (n eps - 1)/4 on so(4), with the Casimir 3.
  Metric so4 = make_metric(AlgebraKind::so(), 4);
  Representation s = spinor_rep(oscillators(so4, OscillatorKind::fermionic));
  const ScalarMatrix f = generator_matrix(s);
  CHECK(f * f - f * beta(so4) == ScalarMatrix::identity(f.rows()) * Scalar(3, 4));
  CHECK(casimir(s) == ScalarMatrix::identity(s.dim) * Scalar(3));

  Metric sp2 = make_metric(AlgebraKind::sp(), 2);
  Representation b = spinor_rep(oscillators(sp2, OscillatorKind::bosonic, 6));
  CHECK(check_lie_relations(b).zero);
  CHECK(check_characteristic(b, CharacteristicKind::quadratic).zero);
  auto c2 = scalar_value(casimir(b), b.band(1));
  REQUIRE(c2.has_value());
  CHECK(*c2 == Scalar(-3, 2));

  Metric sp4 = make_metric(AlgebraKind::sp(), 4);
  CHECK(check_lie_relations(spinor_rep(oscillators(sp4, OscillatorKind::bosonic, 5))).zero);
}

TEST_CASE("Jordan-Schwinger representations") {
  Metric so3 = make_metric(AlgebraKind::so(), 3);
  CHECK(harmonic_subspace(so3, 1).cols() == 3);
  CHECK(harmonic_subspace(so3, 2).cols() == 5);

  Metric so4 = make_metric(AlgebraKind::so(), 4);
  CHECK(js_rep(so4, 2).dim == 10);
  CHECK(check_defR5(js_rep(so4, 2)).zero);
  CHECK(check_characteristic(js_rep(so4, 2), CharacteristicKind::cubic).zero);
  CHECK_FALSE(check_characteristic(js_rep(so4, 2), CharacteristicKind::quadratic).zero);
  CHECK(check_characteristic(js_rep(so4, 1), CharacteristicKind::cubic).zero);

  Representation trivial = js_rep(so4, 0);
  CHECK(trivial.dim == 1);
  for (const auto& g : trivial.gens) CHECK(g.is_zero());

  Metric sp4 = make_metric(AlgebraKind::sp(), 4);
  CHECK(js_rep(sp4, 2).dim == 6);
  CHECK_THROWS_AS(js_rep(sp4, 5), std::invalid_argument);

  for (auto [kind, n] : {std::pair{AlgebraKind::so(), 3}, {AlgebraKind::so(), 4}, {AlgebraKind::so(), 5},
                         {AlgebraKind::sp(), 2}, {AlgebraKind::sp(), 4}}) {
    Metric m = make_metric(kind, n);
    const long eps = m.epsilon();
    for (int d = 1; d <= 3; ++d) {
      if (!kind.orthogonal() && 2 * d > n) continue;
      Representation h = d == 1 ? js_rep(m, 1) : harmonic(m, d);
      CAPTURE(m.name());
      CAPTURE(d);
      CHECK(check_lie_relations(h).zero);
      CHECK(trace_generator(h).is_zero());
      // Half-Casimir (n - 2 eps) m + eps m^2.
      const Scalar half((static_cast<long>(n) - 2 * eps) * d + eps * d * d);
      CHECK(casimir(h) * Scalar(1, 2) == ScalarMatrix::identity(h.dim) * half);
      CHECK(check_cubic_with_value(h, half * Scalar(2)).zero);
      CHECK(check_cubic_factorized(h, d).zero);
      CHECK(check_defR5(h).zero);
      CHECK(check_cycl(h).zero);
    }
  }
  // n = 4, m = 2: (n - 2) m + m^2 = 8.
  CHECK(casimir(harmonic(so4, 2)) * Scalar(1, 2) == ScalarMatrix::identity(9) * Scalar(8));
}

TEST_CASE("defR5 implies the cubic identity") {
  Metric so4 = make_metric(AlgebraKind::so(), 4);
  Metric sp4 = make_metric(AlgebraKind::sp(), 4);
  std::vector<Representation> zoo{fundamental_rep(so4),
                                  js_rep(so4, 1),
                                  js_rep(so4, 2),
                                  js_rep(so4, 3),
                                  spinor_rep(oscillators(so4, OscillatorKind::fermionic)),
                                  direct_sum(js_rep(so4, 1), js_rep(so4, 2)),
                                  tensor_product(js_rep(so4, 1), js_rep(so4, 1)),
                                  fundamental_rep(sp4),
                                  js_rep(sp4, 1),
                                  js_rep(sp4, 2)};
  int with_defr5 = 0;
  for (const auto& rep : zoo) {
    CAPTURE(rep.label);
    if (!check_defR5(rep).zero) continue;
    ++with_defr5;
    CHECK(check_characteristic(rep, CharacteristicKind::cubic).zero);
  }
  CHECK(with_defr5 >= 6);
  // Block-diagonal sums inherit the quadratic relation from each block.
  CHECK(check_defR5(direct_sum(js_rep(so4, 1), js_rep(so4, 2))).zero);
  CHECK_FALSE(check_defR5(tensor_product(js_rep(so4, 1), js_rep(so4, 1))).zero);
  CHECK_FALSE(check_defR5(spinor_rep(oscillators(so4, OscillatorKind::fermionic))).zero);
}

TEST_CASE("negative controls") {
  Metric so5 = make_metric(AlgebraKind::so(), 5);
  Representation flipped = sign_flipped(fundamental_rep(so5), 0, 1);
  CHECK_FALSE(check_lie_relations(flipped).zero);
  Metric so4 = make_metric(AlgebraKind::so(), 4);
  CHECK_FALSE(check_characteristic(js_rep(so4, 2), CharacteristicKind::quadratic).zero);
  // Odd-n spinor representations violate defR5.
  CHECK_FALSE(check_defR5(spinor_rep(oscillators(so5, OscillatorKind::fermionic))).zero);
}
