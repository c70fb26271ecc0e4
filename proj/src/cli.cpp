#include "ylab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "ylab/fusion.hpp"
#include "ylab/spinorial_r.hpp"

namespace ylab::cli {

namespace {

Metric metric_of(const RunConfig& c) { return make_metric(c.kind, c.n, c.basis); }

/// Fock constructions label modes by split-basis pairs.
Metric osc_metric_of(const RunConfig& c) { return make_metric(c.kind, c.n, Basis::split); }

Scalar parse_scalar(const std::string& text, const std::string& what) {
  try {
    return Scalar::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(what + ": cannot parse '" + text + "'");
  }
}

OscillatorSet spinor_oscillators(const RunConfig& c, int cutoff) {
  const Metric m = osc_metric_of(c);
  return c.kind.orthogonal() ? oscillators(m, OscillatorKind::fermionic) : oscillators(m, OscillatorKind::bosonic, cutoff);
}

/// The irreducible (harmonic) part of the degree-m JS representation.
Representation js_of(const Metric& m, int degree) {
  Representation js = js_rep(m, degree);
  if (degree < 2) return js;
  return restrict_rep(js, harmonic_subspace(m, degree), "harmonic js(m=" + std::to_string(degree) + ")");
}

/// 2m(m eps + n - 2 eps).
Scalar js_m2(const Metric& m, int degree) {
  const long eps = m.epsilon();
  return Scalar(2L * degree * (degree * eps + static_cast<long>(m.n()) - 2 * eps));
}

Outcome of(const ResidualReport& r, std::string detail = {}) { return Outcome{r, std::move(detail)}; }

Check on_fock(const RunConfig& c, Check check) {
  if (c.basis == Basis::split) return check;
  auto inner = std::move(check.run);
  check.run = [inner] {
    Outcome o = inner();
    o.detail = o.detail.empty() ? "split basis" : o.detail + "; split basis";
    return o;
  };
  return check;
}

Outcome zero_matrix(const ScalarMatrix& m, const std::vector<bool>* mask = nullptr) { return of(summarize(m, mask)); }

Outcome compare_l(const LOperator& a, const LOperator& b, const Scalar& factor = Scalar(1)) {
  ResidualReport r;
  const int deg = std::max(a.degree(), b.degree());
  for (int k = 0; k <= deg; ++k) r.merge(summarize(a.coeff(k) * factor - b.coeff(k)));
  return of(r);
}

Outcome compare_scalars(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  ScalarMatrix d(1, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d(0, i) = a[i] - b[i];
  return zero_matrix(d);
}

/// fused - c R with c the ratio of leading u coefficients at the first nonzero entry of R.
Outcome proportional_outcome(const PolyMatrix& fused, const PolyMatrix& r) {
  std::optional<Scalar> factor;
  for (std::size_t i = 0; i < r.rows() && !factor; ++i)
    for (std::size_t j = 0; j < r.cols() && !factor; ++j) {
      if (r(i, j).is_zero()) continue;
      const int d = r(i, j).degree_u();
      factor = fused(i, j).coeff(d, 0) / r(i, j).coeff(d, 0);
    }
  PolyMatrix residual = fused;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) residual(i, j) -= r(i, j) * *factor;
  ResidualReport rep = summarize(residual);
  return of(rep, rep.zero ? "factor=" + factor->to_string() : "");
}

std::pair<Scalar, Scalar> spinor_pair_shifts(const RunConfig& c, const Metric& m) {
  if (c.lambda && c.mu) return {parse_scalar(*c.lambda, "--lambda"), parse_scalar(*c.mu, "--mu")};
  const long eps = m.epsilon(), n = static_cast<long>(m.n());
  auto roots = rational_roots(Scalar(2 - eps * n, 2), Scalar(eps * n - 3, 4));
  if (!roots) throw ConfigError("fusion shifts are irrational; pass --lambda and --mu");
  return *roots;
}

std::pair<Scalar, Scalar> js_fusion_shifts(const RunConfig& c, const Metric& m) {
  if (c.lambda && c.mu) return {parse_scalar(*c.lambda, "--lambda"), parse_scalar(*c.mu, "--mu")};
  const Scalar lam(static_cast<long>(m.n()) - 4, 4);
  return {lam, -lam};
}

std::vector<Check> ybe_checks(const RunConfig& c) {
  return {{"ybe", "Yang-Baxter equation for R(u)", [c] { return of(summarize(check_ybe(fundamental_r(metric_of(c))))); }}};
}

std::vector<Check> rll_linear_checks(const RunConfig& c) {
  return {on_fock(c, {"rll-linear-spinor", "RLL for the linear evaluation u - F on the spinor representation", [c] {
             const Metric m = osc_metric_of(c);
             return of(rll_report(fundamental_r(m), linear_l(spinor_rep(spinor_oscillators(c, c.cutoff)))));
           }})};
}

std::vector<Check> rll_quadratic_checks(const RunConfig& c) {
  return {
      {"quadratic-fundamental-equals-r", "u^2-cleared quadratic evaluation on the fundamental rep equals R(u)",
       [c] {
         const Metric m = metric_of(c);
         const PolyMatrix d = fundamental_quadratic_l(m).at(Poly2::u()) - fundamental_r(m).matrix();
         return of(summarize(d));
       }},
      {"rll-quadratic-fundamental", "RLL for the quadratic evaluation on the fundamental rep",
       [c] {
         const Metric m = metric_of(c);
         return of(rll_report(fundamental_r(m), fundamental_quadratic_l(m)));
       }},
      {"rll-quadratic-js-lgn", "RLL for u^2 + uG + N, N = (G^2 - beta G)/2 - beta^2/4 - m2/8, on the JS rep",
       [c] {
         const Metric m = metric_of(c);
         return of(rll_report(fundamental_r(m), lgn_l(js_of(m, c.js_degree), js_m2(m, c.js_degree))));
       }},
      {"rll-quadratic-js-derived", "RLL for u^2 - uG + (G^2 - beta G)/2 + c on the JS rep (solved constant)",
       [c] {
         const Metric m = metric_of(c);
         return of(rll_report(fundamental_r(m), quadratic_evaluation_l(js_of(m, c.js_degree), js_m2(m, c.js_degree))));
       }},
  };
}

std::vector<Check> characteristic_checks(const RunConfig& c) {
  return {
      on_fock(c, {"quadratic-identity-spinor", "F^2 - beta F = (n eps - 1)/4 on the spinor representation",
                  [c] {
                    return of(check_characteristic(spinor_rep(spinor_oscillators(c, c.cutoff)),
                                                   CharacteristicKind::quadratic));
                  }}),
      {"cubic-identity-fundamental", "cubic characteristic identity, fundamental rep",
       [c] { return of(check_characteristic(fundamental_rep(metric_of(c)), CharacteristicKind::cubic)); }},
      {"cubic-identity-js", "cubic characteristic identity with Tr G^2 = m2, JS rep",
       [c] {
         const Metric m = metric_of(c);
         return of(check_cubic_with_value(js_of(m, c.js_degree), js_m2(m, c.js_degree)));
       }},
      {"cubic-factorized-js", "(G + eps m)(G - eps m - n + 2 eps)(G - eps) = 0, JS rep",
       [c] { return of(check_cubic_factorized(js_of(metric_of(c), c.js_degree), c.js_degree)); }},
      {"defR5-fundamental", "symmetrized anticommutator relation, fundamental rep",
       [c] { return of(check_defR5(fundamental_rep(metric_of(c)))); }},
      {"defR5-js", "symmetrized anticommutator relation, JS rep",
       [c] { return of(check_defR5(js_of(metric_of(c), c.js_degree))); }},
  };
}

std::vector<Check> casimir_checks(const RunConfig& c) {
  return {
      {"casimir-fundamental", "Tr G^2 = 2(n - eps) on the fundamental rep",
       [c] {
         const Metric m = metric_of(c);
         const ScalarMatrix cas = casimir(fundamental_rep(m));
         return zero_matrix(cas - ScalarMatrix::identity(cas.rows()) * Scalar(2L * (static_cast<long>(m.n()) - m.epsilon())));
       }},
      on_fock(c, {"casimir-spinor", "Tr F^2 = n(n eps - 1)/4 on the spinor representation",
                  [c] {
                    const Representation s = spinor_rep(spinor_oscillators(c, c.cutoff));
                    const long n = c.n;
                    const ScalarMatrix cas = casimir(s);
                    const auto mask = s.band(1);
                    const Scalar value(n * (n * c.kind.epsilon() - 1), 4);
                    return zero_matrix(cas - ScalarMatrix::identity(cas.rows()) * value, &mask);
                  }}),
      {"casimir-js-spectrum", "Tr G^2 = 2((n - 2 eps) m + eps m^2) on the harmonic JS rep",
       [c] {
         const Metric m = metric_of(c);
         const ScalarMatrix cas = casimir(js_of(m, c.js_degree));
         return zero_matrix(cas - ScalarMatrix::identity(cas.rows()) * js_m2(m, c.js_degree));
       }},
  };
}

std::vector<Check> spinor_r_checks(const RunConfig& c) {
  std::vector<Check> out{
      {"r-recurrence-even-closed-form", "even r_k: recurrence against the finite-product form",
       [c] {
         const Metric m = osc_metric_of(c);
         const Scalar u = parse_scalar(c.u, "--u");
         const auto r = r_coefficients(m, u, c.k_max);
         std::vector<Scalar> a, b;
         for (int k = 0; k <= c.k_max; k += 2) {
           a.push_back(r[k]);
           b.push_back(r_closed_form(m, u, k));
         }
         return compare_scalars(a, b);
       }},
      {"r-recurrence-odd-gamma-form", "odd r_k: recurrence against the Gamma-ratio form",
       [c] {
         const Metric m = osc_metric_of(c);
         const Scalar u = parse_scalar(c.u, "--u");
         const auto r = r_coefficients(m, u, c.k_max);
         std::vector<Scalar> a, b;
         for (int k = 1; k <= c.k_max; k += 2) {
           a.push_back(r[k]);
           b.push_back(r_odd_gamma_literal(m, u, k / 2));
         }
         return compare_scalars(a, b);
       }},
      {"r-recurrence-odd-product", "odd r_k: recurrence against the product with denominator j + 3/2 - eps(u+n)/2",
       [c] {
         const Metric m = osc_metric_of(c);
         const Scalar u = parse_scalar(c.u, "--u");
         const auto r = r_coefficients(m, u, c.k_max);
         std::vector<Scalar> a, b;
         for (int k = 1; k <= c.k_max; k += 2) {
           a.push_back(r[k]);
           b.push_back(r_closed_form(m, u, k));
         }
         return compare_scalars(a, b);
       }},
      {"spinor-r-invariance", "[F1 + F2, R] = 0",
       [c] {
         const Metric m = osc_metric_of(c);
         const OscillatorSet osc = spinor_oscillators(c, c.cutoff);
         return of(check_sym(assemble_spinorial_r(osc, parse_scalar(c.u, "--u"), c.k_max), osc));
       }},
  };
  if (c.kind.orthogonal()) {
    out.push_back({"spinor-r-terminates", "fermionic series: orders above n vanish", [c] {
                     const Metric m = osc_metric_of(c);
                     const auto basis = symmetrized_basis_for(oscillators(m, OscillatorKind::fermionic));
                     ResidualReport r = summarize(spinorial_r_order(*basis, c.n + 1));
                     r.merge(summarize(spinorial_r_order(*basis, c.n + 2)));
                     return of(r);
                   }});
  } else {
    out.push_back({"spinor-r-k-stability", "bosonic series: orders k_max+1, k_max+2 vanish on the vacuum band", [c] {
                     const Metric m = osc_metric_of(c);
                     const OscillatorSet osc = spinor_oscillators(c, c.cutoff);
                     const Scalar u = parse_scalar(c.u, "--u");
                     const ScalarMatrix d = assemble_spinorial_r(osc, u, c.k_max + 2).assembled -
                                            assemble_spinorial_r(osc, u, c.k_max).assembled;
                     const auto mask = occupation_band(osc, 1, 0);
                     return zero_matrix(d, &mask);
                   }});
  }
  for (auto& check : out)
    if (check.name.starts_with("spinor-")) check = on_fock(c, std::move(check));
  return out;
}

std::vector<Check> spinor_rll_checks(const RunConfig& c) {
  std::vector<Check> out;
  const std::vector<std::pair<std::string, int>> reps{{"fundamental", 0}, {"js", c.js_degree}};
  if (c.kind.orthogonal()) {
    for (const auto& [tag, degree] : reps)
      out.push_back({"spinor-rll-" + tag, "RLL for the spinorial R with L = u + F G/2 on Fock x Fock x rep", [c, degree] {
                       const Metric m = osc_metric_of(c);
                       const OscillatorSet osc = oscillators(m, OscillatorKind::fermionic);
                       const Representation rep = degree == 0 ? fundamental_rep(m) : js_of(m, degree);
                       const auto series = assemble_spinorial_r(osc, parse_scalar(c.u, "--u"), c.n);
                       return of(summarize(check_spinorial_rll(series, spinorial_l(osc, rep).l)));
                     }});
    for (auto& check : out) check = on_fock(c, std::move(check));
    return out;
  }
  if (c.n == 2)
    out.push_back({"spinor-rll-truncated-fundamental", "RLL for the truncated bosonic series on the vacuum band", [c] {
                     const Metric m = osc_metric_of(c);
                     const OscillatorSet osc = spinor_oscillators(c, c.cutoff);
                     const Representation rep = fundamental_rep(m);
                     const auto series = assemble_spinorial_r(osc, parse_scalar(c.u, "--u"), c.k_max);
                     const auto mask = occupation_band(osc, rep.dim, 0);
                     return of(summarize(check_spinorial_rll(series, spinorial_l(osc, rep).l), &mask));
                   }});
  for (bool signed_chain : {false, true})
    for (const auto& [tag, degree] : reps)
      out.push_back({"spinor-rll-weyl-" + tag + (signed_chain ? "-signed-recurrence" : ""),
                     signed_chain ? "RLL in the Weyl algebra, r_{k+2} = 4 eps (k + eps u)/(k + 2 - eps(u + n)) r_k"
                                  : "RLL in the Weyl algebra, r_{k+2} = 4 (k + eps u)/(k + 2 - eps(u + n)) r_k",
                     [c, degree, signed_chain] {
                       const Metric m = osc_metric_of(c);
                       const Representation rep = degree == 0 ? fundamental_rep(m) : js_of(m, degree);
                       const Scalar u = parse_scalar(c.u, "--u");
                       const int k = c.weyl_order;
                       const auto r = signed_chain ? r_coefficients_signed(m, u, k) : r_coefficients(m, u, k);
                       const WeylRllReport w = check_spinorial_rll_weyl(m, rep, u, k, r);
                       return of(w.residual, "symbol degree <= " + std::to_string(w.exact_degree));
                     }});
  for (auto& check : out) check = on_fock(c, std::move(check));
  return out;
}

std::vector<Check> fuse_prop8_checks(const RunConfig& c) {
  std::vector<Check> out{
      {"fused-spinor-pair-proportional-to-r", "spinor pair fused over the fundamental rep is a constant multiple of R(u)",
       [c] {
         const Metric m = metric_of(c);
         const auto [l, mu] = spinor_pair_shifts(c, m);
         return proportional_outcome(fuse_spinor_pair(m, l, mu).matrix, fundamental_r(m).matrix());
       }},
      {"fused-spinor-pair-closed-form", "fused spinor pair equals its closed I, P, K form",
       [c] {
         const Metric m = metric_of(c);
         const auto [l, mu] = spinor_pair_shifts(c, m);
         return of(summarize(fuse_spinor_pair(m, l, mu).matrix - spinor_pair_closed_form(m, l, mu)));
       }},
  };
  if (c.kind.orthogonal())
    out.push_back(on_fock(c, {"fused-explicit-clifford", "trace recursion agrees with explicit Clifford matrices", [c] {
                     const Metric m = osc_metric_of(c);
                     const auto [l, mu] = spinor_pair_shifts(c, m);
                     const Representation f = fundamental_rep(m);
                     return of(summarize(fuse_explicit(f, l, mu).matrix - fuse(f, l, mu).matrix));
                   }}));
  return out;
}

std::vector<Check> fuse_prop9_checks(const RunConfig& c) {
  return {
      {"fused-js-rll", "fused spinor pair over the JS rep satisfies RLL",
       [c] {
         const Metric m = metric_of(c);
         const auto [l, mu] = js_fusion_shifts(c, m);
         return of(rll_report(fundamental_r(m), fuse_js(js_of(m, c.js_degree), l, mu).as_l()));
       }},
      {"fused-js-equals-lgn", "fused JS operator equals u^2 + uG + N, N = (G^2 - beta G)/2 - beta^2/4 - m2/8",
       [c] {
         const Metric m = metric_of(c);
         const auto [l, mu] = js_fusion_shifts(c, m);
         const Representation js = js_of(m, c.js_degree);
         return compare_l(fuse_js(js, l, mu).as_l(), lgn_l(js, js_m2(m, c.js_degree)));
       }},
      {"fused-js-equals-derived", "eps times the fused JS operator equals u^2 - uG + (G^2 - beta G)/2 + c",
       [c] {
         const Metric m = metric_of(c);
         const auto [l, mu] = js_fusion_shifts(c, m);
         const Representation js = js_of(m, c.js_degree);
         return compare_l(fuse_js(js, l, mu).as_l(), quadratic_evaluation_l(js, js_m2(m, c.js_degree)),
                          Scalar(m.epsilon()));
       }},
  };
}

using SuiteFn = std::vector<Check> (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"ybe", ybe_checks},
      {"rll-linear", rll_linear_checks},
      {"rll-quadratic", rll_quadratic_checks},
      {"characteristic", characteristic_checks},
      {"casimir", casimir_checks},
      {"spinor-r", spinor_r_checks},
      {"spinor-rll", spinor_rll_checks},
      {"fuse-prop8", fuse_prop8_checks},
      {"fuse-prop9", fuse_prop9_checks},
  };
  return s;
}

nlohmann::ordered_json scalar_json(const std::optional<std::string>& s) {
  if (!s) return nullptr;
  return Scalar::parse(*s).to_string();
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suites()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

void validate(const RunConfig& c) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end()) throw ConfigError("unknown suite '" + c.suite + "'");
  if (c.n < 2) throw ConfigError("n must be at least 2");
  if (!c.kind.orthogonal() && c.n % 2 != 0) throw ConfigError("sp requires even n");
  if (!c.kind.orthogonal() && c.basis == Basis::delta) throw ConfigError("the delta basis is only available for so");
  if (c.cutoff < 1) throw ConfigError("cutoff must be positive");
  if (c.js_degree < 1) throw ConfigError("js-degree must be positive");
  if (!c.kind.orthogonal() && 2 * c.js_degree > c.n) throw ConfigError("sp requires js-degree <= n/2");
  if (c.k_max < 0) throw ConfigError("k-max must be non-negative");
  if (c.weyl_order < 2) throw ConfigError("weyl-order must be at least 2");
  if (c.jobs < 1) throw ConfigError("jobs must be positive");
  if (c.lambda.has_value() != c.mu.has_value()) throw ConfigError("--lambda and --mu must be given together");
  parse_scalar(c.u, "--u");
  if (c.lambda) parse_scalar(*c.lambda, "--lambda");
  if (c.mu) parse_scalar(*c.mu, "--mu");
  try {
    r_coefficients(metric_of(c), parse_scalar(c.u, "--u"), std::max(c.k_max + 2, c.weyl_order));
  } catch (const PoleError& e) {
    throw ConfigError(std::string("u hits a pole of the coefficient recurrence: ") + e.what());
  }
}

std::vector<Check> suite_checks(const RunConfig& c) {
  std::vector<Check> out;
  for (const auto& [name, fn] : suites()) {
    if (c.suite != "all" && c.suite != name) continue;
    auto part = fn(c);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

Report run(const RunConfig& config) {
  validate(config);
  if (config.suite == "fuse-prop8" || config.suite == "all") spinor_pair_shifts(config, metric_of(config));
  const std::vector<Check> checks = suite_checks(config);
  Report report{config, std::vector<CheckRecord>(checks.size())};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      Outcome o;
      try {
        o = checks[i].run();
      } catch (const std::exception& e) {
        o.residual.zero = false;
        o.detail = std::string("error: ") + e.what();
      }
      const auto t1 = std::chrono::steady_clock::now();
      CheckRecord& rec = report.checks[i];
      rec.name = checks[i].name;
      rec.ref = checks[i].ref;
      rec.pass = o.residual.zero;
      rec.residual_max_terms = o.residual.max_terms;
      rec.witness = o.residual.witness;
      rec.detail = o.detail;
      rec.wall_ms = config.timing ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), checks.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

std::string to_json(const Report& report) {
  const RunConfig& c = report.config;
  nlohmann::ordered_json cfg{
      {"kind", c.kind.short_name()},
      {"n", c.n},
      {"basis", to_string(c.basis)},
      {"cutoff", c.cutoff},
      {"js_degree", c.js_degree},
      {"u", Scalar::parse(c.u).to_string()},
      {"k_max", c.k_max},
      {"weyl_order", c.weyl_order},
      {"suite", c.suite},
      {"lambda", scalar_json(c.lambda)},
      {"mu", scalar_json(c.mu)},
  };
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : report.checks) {
    nlohmann::ordered_json j{
        {"name", r.name},
        {"paper_ref", r.ref},
        {"status", r.pass ? "pass" : "fail"},
        {"residual_max_terms", r.residual_max_terms},
        {"witness", r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr)},
        {"wall_ms", r.wall_ms},
    };
    if (!r.detail.empty()) j["detail"] = r.detail;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json doc{{"config", cfg}, {"checks", checks}};
  return doc.dump(2) + "\n";
}

int exit_code(const Report& report) { return report.passed() ? 0 : 1; }

}  // namespace ylab::cli
