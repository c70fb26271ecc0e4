#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ylab/cli.hpp"
#include "ylab/fusion.hpp"
#include "ylab/spinorial_r.hpp"

using namespace ylab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Accumulates sub-results of one criterion.
struct Tally {
  bool pass = true;
  std::vector<std::string> failures;
  int checked = 0;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  std::string summary() const {
    std::ostringstream s;
    s << checked << " checks";
    if (!failures.empty()) {
      s << ", " << failures.size() << " failed:";
      for (std::size_t i = 0; i < failures.size() && i < 6; ++i) s << " " << failures[i] << ";";
      if (failures.size() > 6) s << " ...";
    }
    return s.str();
  }
};

int failed_criteria = 0;

void report(int id, const std::string& title, const Tally& t) {
  if (!t.pass) ++failed_criteria;
  std::cout << "criterion " << id << ": " << (t.pass ? "PASS" : "FAIL") << "  " << title << "  (" << t.summary()
            << ")" << std::endl;
}

void diagnostic(const std::string& title, const Tally& t) {
  std::cout << "  diagnostic: " << (t.pass ? "PASS" : "FAIL") << "  " << title << "  (" << t.summary() << ")"
            << std::endl;
}

Metric so(int n, Basis b = Basis::split) { return make_metric(AlgebraKind::so(), n, b); }
Metric sp(int n) { return make_metric(AlgebraKind::sp(), n); }

Scalar m2_of(const Metric& m, int degree) {
  const long eps = m.epsilon();
  return Scalar(2L * degree * (degree * eps + static_cast<long>(m.n()) - 2 * eps));
}

Representation harmonic(const Metric& m, int degree) {
  if (degree < 2) return js_rep(m, degree);
  return restrict_rep(js_rep(m, degree), harmonic_subspace(m, degree), "harmonic");
}

OscillatorSet spinor_oscillators(const Metric& m, int cutoff = 8) {
  return m.kind().orthogonal() ? oscillators(m, OscillatorKind::fermionic)
                               : oscillators(m, OscillatorKind::bosonic, cutoff);
}

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

std::vector<Metric> all_configs() {
  std::vector<Metric> out;
  for (int n = 2; n <= 6; ++n) {
    out.push_back(so(n));
    out.push_back(so(n, Basis::delta));
  }
  for (int n : {2, 4, 6}) out.push_back(sp(n));
  return out;
}

void criterion1() {
  Tally t;
  double worst = 0;
  for (const Metric& m : all_configs()) {
    const auto t0 = Clock::now();
    const bool zero = check_ybe(fundamental_r(m)).is_zero();
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    t.expect(zero && s <= 60, m.name());
  }
  std::ostringstream title;
  title << "YBE exact for so n=2..6 (both bases), sp n=2,4,6; slowest " << worst << " s";
  report(1, title.str(), t);
}

void criterion2() {
  Tally t;
  for (const Metric& m : all_configs()) {
    const long n = static_cast<long>(m.n());
    const Scalar expected = m.kind().orthogonal() ? Scalar(n - 2, 2) : Scalar(n / 2 + 1);
    t.expect(beta(m) == expected, m.name() + " beta");
    const ScalarMatrix half = casimir(fundamental_rep(m)) * Scalar(1, 2);
    t.expect(half == ScalarMatrix::identity(m.n()) * Scalar(n - m.epsilon()), m.name() + " half-Casimir");
  }
  report(2, "beta = n/2 - eps and half-Casimir n - eps of the fundamental rep", t);
}

void criterion3() {
  Tally t;
  std::vector<Metric> ms;
  for (int n = 2; n <= 8; ++n) ms.push_back(so(n));
  ms.push_back(sp(2));
  ms.push_back(sp(4));
  for (const Metric& m : ms) {
    const Representation s = spinor_rep(spinor_oscillators(m));
    const long n = static_cast<long>(m.n());
    t.expect(rll_report(fundamental_r(m), linear_l(s)).zero, m.name() + " linear RLL");
    t.expect(check_characteristic(s, CharacteristicKind::quadratic).zero, m.name() + " quadratic identity");
    const auto band = s.band(1);
    const ScalarMatrix d = casimir(s) - ScalarMatrix::identity(s.dim) * Scalar(n * (n * m.epsilon() - 1), 4);
    t.expect(summarize(d, &band).zero, m.name() + " Casimir");
  }
  report(3, "linear evaluation, spinor quadratic identity and Casimir (so n=2..8, sp n=2,4 cutoff 8)", t);
}

void criterion4() {
  Tally t;
  const Metric m = so(4);
  const Representation js = js_rep(m, 2);
  const ResidualReport q = check_characteristic(js, CharacteristicKind::quadratic);
  const ResidualReport r = rll_report(fundamental_r(m), linear_l(js));
  t.expect(!q.zero && q.max_terms > 0, "quadratic identity should fail");
  t.expect(!r.zero && r.max_terms > 0, "linear RLL should fail");
  report(4, "JS m=2 violates the quadratic identity and linear RLL with nonzero residuals", t);
}

void criterion5() {
  Tally t;
  for (const Metric& m : {so(3), so(4), so(5), sp(2), sp(4)}) {
    const PolyMatrix d = fundamental_quadratic_l(m).at(Poly2::u()) - fundamental_r(m).matrix();
    t.expect(d.is_zero(), m.name() + " quadratic L = R");
    t.expect(check_characteristic(fundamental_rep(m), CharacteristicKind::cubic).zero, m.name() + " fundamental cubic");
    for (int deg = 1; deg <= 3; ++deg) {
      if (!m.kind().orthogonal() && 2 * deg > static_cast<int>(m.n())) continue;
      const Representation h = harmonic(m, deg);
      const std::string tag = m.name() + " m=" + std::to_string(deg);
      t.expect(check_cubic_with_value(h, m2_of(m, deg)).zero, tag + " JS cubic");
      t.expect(check_cubic_factorized(h, deg).zero, tag + " JS factorized cubic");
      const long n = static_cast<long>(m.n()), eps = m.epsilon();
      const Scalar spectrum((n - 2 * eps) * deg + eps * deg * deg);
      t.expect(casimir(h) * Scalar(1, 2) == ScalarMatrix::identity(h.dim) * spectrum, tag + " Casimir spectrum");
    }
  }
  report(5, "quadratic evaluation of the fundamental rep, cubic identities, JS Casimir spectrum", t);
}

void criterion6() {
  Tally t;
  const std::vector<Scalar> us{Scalar(1, 7), Scalar(-5, 3), Scalar(11, 4)};
  Tally product;
  for (const Metric& m : {so(3), so(4), so(5), sp(2), sp(4)})
    for (const Scalar& u : us) {
      const auto r = r_coefficients(m, u, 12);
      for (int k = 0; k <= 12; ++k) {
        const Scalar gamma_form = k % 2 == 0 ? r_closed_form(m, u, k) : r_odd_gamma_literal(m, u, k / 2);
        t.expect(r[k] == gamma_form, m.name() + " r_" + std::to_string(k) + " at u=" + u.to_string());
        if (k % 2 == 1) product.expect(r[k] == r_closed_form(m, u, k), m.name() + " odd product");
      }
    }

  const Scalar u(2, 7);
  for (int n : {3, 4, 5}) {
    const Metric m = so(n);
    const OscillatorSet osc = oscillators(m, OscillatorKind::fermionic);
    const auto series = assemble_spinorial_r(osc, u, n);
    t.expect(check_sym(series, osc).zero, m.name() + " invariance");
    for (const Representation& rep : {fundamental_rep(m), js_rep(m, 1)}) {
      const SpinorialLPair l = spinorial_l(osc, rep);
      const bool ok = n % 2 == 0 ? check_spinorial_rll(series, l.l).is_zero()
                                 : check_spinorial_rll(series, l.tilde, true).is_zero();
      t.expect(ok, m.name() + " RLL " + rep.label);
    }
    const auto basis = symmetrized_basis_for(osc);
    t.expect(spinorial_r_order(*basis, n + 1).is_zero() && spinorial_r_order(*basis, n + 2).is_zero(),
             m.name() + " termination");
  }

  const Metric m = sp(2);
  const OscillatorSet osc = oscillators(m, OscillatorKind::bosonic, 8);
  const int k_max = 6;
  const auto series = assemble_spinorial_r(osc, u, k_max);
  t.expect(check_sym(series, osc).zero, "sp2 invariance");
  const Representation f = fundamental_rep(m);
  const auto vacuum = occupation_band(osc, f.dim, 0);
  t.expect(summarize(check_spinorial_rll(series, spinorial_l(osc, f).l), &vacuum).zero, "sp2 RLL on the vacuum band");
  const auto band = occupation_band(osc, 1, 0);
  const ScalarMatrix d = assemble_spinorial_r(osc, u, k_max + 2).assembled - series.assembled;
  t.expect(summarize(d, &band).zero, "sp2 k-stability");
  report(6, "spinorial R: recurrence vs product form, invariance, RLL, termination, bosonic stability", t);

  diagnostic("odd r_k against the product with denominator j + 3/2 - eps(u+n)/2", product);
  Tally weyl;
  for (const Metric& w : {sp(2), sp(4)})
    for (const Representation& rep : {fundamental_rep(w), js_rep(w, 1)}) {
      const int k = w.n() == 2 ? 8 : 6;
      weyl.expect(check_spinorial_rll_weyl(w, rep, u, k, r_coefficients_signed(w, u, k)).residual.zero,
                  w.name() + " " + rep.label + " signed");
      weyl.expect(!check_spinorial_rll_weyl(w, rep, u, k, r_coefficients(w, u, k)).residual.zero,
                  w.name() + " " + rep.label + " unsigned fails");
    }
  diagnostic("sp RLL in the Weyl algebra holds with r_{k+2} = 4 eps (k + eps u)/(k + 2 - eps(u+n)) r_k", weyl);
}

void criterion7() {
  Tally t;
  std::vector<Representation> zoo;
  for (const Metric& m : {so(3), so(4), so(5), sp(2), sp(4)}) {
    t.expect(check_defR5(fundamental_rep(m)).zero, m.name() + " fundamental");
    t.expect(check_defR5(js_rep(m, 1)).zero, m.name() + " JS m=1");
    zoo.push_back(fundamental_rep(m));
    zoo.push_back(js_rep(m, 1));
    if (m.kind().orthogonal() || m.n() >= 4) zoo.push_back(harmonic(m, 2));
  }
  const Metric so4 = so(4);
  zoo.push_back(spinor_rep(oscillators(so4, OscillatorKind::fermionic)));
  zoo.push_back(tensor_product(js_rep(so4, 1), js_rep(so4, 1)));
  zoo.push_back(direct_sum(js_rep(so4, 1), harmonic(so4, 2)));
  for (const auto& rep : zoo)
    if (check_defR5(rep).zero)
      t.expect(check_characteristic(rep, CharacteristicKind::cubic).zero, rep.metric.name() + " " + rep.label);
  report(7, "defR5 for fundamental and JS reps; defR5 implies the cubic identity", t);
}

void criterion8() {
  Tally t;
  Tally corrected;
  for (const Metric& m : {so(3), so(4), sp(2), sp(4)}) {
    const long eps = m.epsilon(), n = static_cast<long>(m.n());
    const PolyMatrix r = fundamental_r(m).matrix();
    const Scalar product(eps * n - 3, 4);
    const auto roots = rational_roots(Scalar(2 - eps * n, 2), product);
    t.expect(roots.has_value(), m.name() + " rational shifts");
    if (roots) t.expect(proportionality(fuse_spinor_pair(m, roots->first, roots->second).matrix, r).has_value(),
                        m.name() + " proportional");
    t.expect(!proportionality(fuse_spinor_pair(m, Scalar(0), Scalar(1)).matrix, r), m.name() + " generic shifts fail");

    const auto fixed = rational_roots(-beta(m), product);
    corrected.expect(fixed.has_value(), m.name() + " rational shifts");
    if (fixed) {
      const auto c = proportionality(fuse_spinor_pair(m, fixed->first, fixed->second).matrix, r);
      corrected.expect(c.has_value() && *c == Scalar(eps), m.name() + " factor eps");
    }
  }
  report(8, "fused spinor pair proportional to R at lambda + mu = (2 - eps n)/2, lambda mu = (eps n - 3)/4", t);
  diagnostic("proportional with factor eps at lambda + mu = -beta, lambda mu = (eps n - 3)/4", corrected);
}

void criterion9() {
  Tally t;
  Tally derived;
  const Metric m = so(4);
  for (int deg : {1, 2}) {
    const Representation js = harmonic(m, deg);
    const std::string tag = "m=" + std::to_string(deg);
    const LOperator fused = fuse_js(js, Scalar(0), Scalar(0)).as_l();
    t.expect(same_l(fused, lgn_l(js, m2_of(m, deg))), tag + " equals u^2 + uG + N");
    t.expect(rll_report(fundamental_r(m), fused).zero, tag + " RLL");
    derived.expect(same_l(fused, quadratic_evaluation_l(js, m2_of(m, deg))), tag);
  }
  for (const Metric& w : {so(3), so(5), sp(4)}) {
    const Scalar lam(static_cast<long>(w.n()) - 4 * w.epsilon(), 4);
    const Representation js = js_rep(w, 1);
    derived.expect(same_l(fuse_js(js, lam, -lam).as_l(), quadratic_evaluation_l(js, m2_of(w, 1)), Scalar(w.epsilon())),
                   w.name() + " m=1");
  }
  report(9, "fused JS operator equals u^2 + uG + N and satisfies RLL (so n=4, m=1,2)", t);
  diagnostic("eps times the fused JS operator equals u^2 - uG + (G^2 - beta G)/2 + c", derived);
}

void criterion10() {
  Tally t;
  cli::RunConfig c;
  c.suite = "all";
  const auto t0 = Clock::now();
  const cli::Report timed = cli::run(c);
  const double s = seconds_since(t0);
  t.expect(s <= 300, "runtime");
  c.timing = false;
  const std::string a = cli::to_json(cli::run(c));
  c.jobs = 4;
  const std::string b = cli::to_json(cli::run(c));
  t.expect(a == b, "byte-identical reports");
  int failing = 0;
  for (const auto& r : timed.checks) failing += r.pass ? 0 : 1;
  std::ostringstream title;
  title << "run --suite all (so, n=4) in " << s << " s, deterministic reports; " << failing << " of "
        << timed.checks.size() << " checks fail";
  report(10, title.str(), t);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  for (const auto& c : criteria) c();
  std::cout << (10 - failed_criteria) << " of 10 criteria pass" << std::endl;
  return failed_criteria == 0 ? 0 : 1;
}
