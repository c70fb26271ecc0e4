#include "ylab/fusion.hpp"

#include <stdexcept>

namespace ylab {

Scalar GammaTraces::operator()(const std::vector<std::size_t>& word) const {
  if (word.size() % 2 == 1) return Scalar(0);
  if (word.empty()) return Scalar(1);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;
  }
  const Scalar minus_eps(-metric_.epsilon());
  Scalar total(0), sign(1);
  for (std::size_t j = 1; j < word.size(); ++j) {
    const Scalar& e = metric_.upper(word[0], word[j]);
    if (!e.is_zero()) {
      std::vector<std::size_t> rest;
      for (std::size_t i = 1; i < word.size(); ++i)
        if (i != j) rest.push_back(word[i]);
      total += sign * e * (*this)(rest);
    }
    sign *= minus_eps;
  }
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(word, total);
  return total;
}

Scalar gamma_trace(const Metric& metric, const GammaWord& word) { return GammaTraces(metric)(word); }

Scalar explicit_gamma_trace(const OscillatorSet& osc, const std::vector<std::size_t>& word) {
  if (osc.bosonic()) throw std::invalid_argument("explicit_gamma_trace: fermionic oscillators only");
  if (word.size() % 2 == 1) return Scalar(0);
  ScalarMatrix prod = osc.product(word);
  Scalar scale(1);
  for (std::size_t i = 0; i < word.size() / 2; ++i) scale *= Scalar(2);
  return prod.trace() * scale / Scalar(static_cast<long>(osc.dim()));
}

namespace {

struct PhiTerm {
  std::vector<std::size_t> word;
  ScalarMatrix op;
};

// Phi = -(1/2) sum F^a_b (x) G^b_a with F^a_b = (1/2) g^a g_b - (eps/2) delta^a_b.
std::vector<PhiTerm> coupling_terms(const Representation& rep) {
  const Metric& m = rep.metric;
  const std::size_t n = m.n(), d = rep.dim;
  std::vector<PhiTerm> terms;
  ScalarMatrix trace_part(d, d);
  for (std::size_t a = 0; a < n; ++a) trace_part += rep.g(a, a);
  trace_part *= Scalar(m.epsilon(), 4);
  terms.push_back({{}, trace_part});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t e = 0; e < n; ++e) {
      ScalarMatrix op(d, d);
      for (std::size_t b = 0; b < n; ++b)
        if (!m.lower(b, e).is_zero()) op += rep.g(b, a) * m.lower(b, e);
      if (op.is_zero()) continue;
      terms.push_back({{a, e}, op * Scalar(-1, 4)});
    }
  return terms;
}

ScalarMatrix explicit_gamma_word(const OscillatorSet& osc, const std::vector<std::size_t>& word) {
  ScalarMatrix out = osc.product(word);
  for (std::size_t i = 0; i < word.size() / 2; ++i) out *= Scalar(2);
  return out;
}

template <typename Trace>
PolyMatrix fuse_with(const Representation& rep, const Scalar& lambda, const Scalar& mu, const Trace& trace) {
  const Metric& m = rep.metric;
  const std::size_t n = m.n(), d = rep.dim;
  const auto phi = coupling_terms(rep);
  const Poly2 u = Poly2::u();
  const PolyMatrix id = to_poly(ScalarMatrix::identity(d));
  // Left factor (u - lambda) - Phi, right factor (u - mu) + Phi.
  std::vector<std::pair<std::vector<std::size_t>, PolyMatrix>> left, right;
  for (const auto& t : phi) {
    PolyMatrix op = to_poly(t.op);
    if (t.word.empty()) {
      left.emplace_back(t.word, scale(id, u - Poly2(lambda)) - op);
      right.emplace_back(t.word, scale(id, u - Poly2(mu)) + op);
    } else {
      left.emplace_back(t.word, op * Scalar(-1));
      right.emplace_back(t.word, op);
    }
  }
  PolyMatrix out(n * d, n * d);
  for (const auto& [wl, ol] : left)
    for (const auto& [wr, orr] : right) {
      const PolyMatrix prod = ol * orr;
      if (prod.is_zero()) continue;
      // Input vector gamma^e, output coordinate read off with gamma_f = eps_fg gamma^g.
      for (std::size_t e = 0; e < n; ++e)
        for (std::size_t f = 0; f < n; ++f) {
          Scalar coef(0);
          for (std::size_t g = 0; g < n; ++g) {
            if (m.lower(f, g).is_zero()) continue;
            std::vector<std::size_t> word = wl;
            word.push_back(e);
            word.insert(word.end(), wr.begin(), wr.end());
            word.push_back(g);
            coef += m.lower(f, g) * trace(word);
          }
          if (coef.is_zero()) continue;
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
              if (!prod(i, j).is_zero()) out(f * d + i, e * d + j) += prod(i, j) * coef;
        }
    }
  // gamma^e spans the invariant subspace with a lower fundamental index; raise it.
  const PolyMatrix lower = to_poly(kron(m.lower_matrix(), ScalarMatrix::identity(d)));
  const PolyMatrix upper = to_poly(kron(m.upper_matrix(), ScalarMatrix::identity(d)));
  return lower * out * upper;
}

}  // namespace

LOperator FusedOperator::as_l(const std::string& label) const {
  const std::size_t dim = matrix.rows();
  std::vector<ScalarMatrix> coeffs(3, ScalarMatrix(dim, dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& t : matrix(i, j).terms()) {
        if (t.dv != 0 || t.du > 2) throw std::logic_error("fused operator is not quadratic in u");
        coeffs[t.du](i, j) = t.coeff;
      }
  return LOperator{metric, rep, coeffs, 2, label};
}

FusedOperator fuse(const Representation& rep, const Scalar& lambda, const Scalar& mu) {
  GammaTraces traces(rep.metric);
  return FusedOperator{rep.metric, std::make_shared<const Representation>(rep), lambda, mu,
                       fuse_with(rep, lambda, mu, [&](const std::vector<std::size_t>& w) { return traces(w); })};
}

FusedOperator fuse_spinor_pair(const Metric& metric, const Scalar& lambda, const Scalar& mu) {
  return fuse(fundamental_rep(metric), lambda, mu);
}

FusedOperator fuse_js(const Representation& rep, const Scalar& lambda, const Scalar& mu) {
  const ResidualReport defr5 = check_defR5(rep);
  if (!defr5.zero)
    throw std::invalid_argument("fuse_js: representation " + rep.label + " violates the three-index anticommutator condition (" +
                                std::to_string(defr5.nonzero_entries) + " nonzero entries)");
  return fuse(rep, lambda, mu);
}

FusedOperator fuse_explicit(const Representation& rep, const Scalar& lambda, const Scalar& mu) {
  if (!rep.metric.kind().orthogonal()) throw std::invalid_argument("fuse_explicit: orthogonal family only");
  const OscillatorSet osc(rep.metric, OscillatorKind::fermionic);
  auto trace = [&](const std::vector<std::size_t>& w) { return explicit_gamma_trace(osc, w); };
  return FusedOperator{rep.metric, std::make_shared<const Representation>(rep), lambda, mu,
                       fuse_with(rep, lambda, mu, trace)};
}

PolyMatrix spinor_pair_closed_form(const Metric& metric, const Scalar& lambda, const Scalar& mu) {
  const IPK ipk = build_ipk(metric);
  const Scalar eps(metric.epsilon()), en = eps * Scalar(static_cast<long>(metric.n()));
  const Poly2 u = Poly2::u(), half_sum = Poly2((lambda + mu) / Scalar(2));
  const Poly2 ci = (u - Poly2(lambda)) * (u - Poly2(mu)) - Poly2((en - Scalar(3)) / Scalar(4));
  const Poly2 cp = u - half_sum + Poly2((en - Scalar(2)) / Scalar(4));
  const Poly2 ck = (u - half_sum - Poly2((en - Scalar(2)) / Scalar(4))) * eps;
  return scale(ipk.i_op, ci) + scale(ipk.p_op, cp) - scale(ipk.k_op, ck);
}

std::optional<std::pair<Scalar, Scalar>> rational_roots(const Scalar& s, const Scalar& p) {
  if (!s.is_real() || !p.is_real()) return std::nullopt;
  const mpq_class disc = s.re() * s.re() - 4 * p.re();
  if (sgn(disc) < 0) return std::nullopt;
  mpz_class num = disc.get_num(), den = disc.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  const mpq_class root(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
  return std::make_pair(Scalar(mpq_class((s.re() + root) / 2)), Scalar(mpq_class((s.re() - root) / 2)));
}

}  // namespace ylab
