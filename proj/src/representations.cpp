#include "ylab/representations.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "ylab/linalg.hpp"

namespace ylab {

Representation::Representation(Metric m, std::string lbl, std::size_t d)
    : metric(std::move(m)), label(std::move(lbl)), dim(d), gens(metric.n() * metric.n(), ScalarMatrix(d, d)) {}

ScalarMatrix Representation::lower(std::size_t a, std::size_t b) const {
  ScalarMatrix out(dim, dim);
  for (std::size_t d = 0; d < n(); ++d)
    if (!metric.lower(a, d).is_zero()) out += g(d, b) * metric.lower(a, d);
  return out;
}

ScalarMatrix Representation::upper(std::size_t a, std::size_t b) const {
  ScalarMatrix out(dim, dim);
  for (std::size_t d = 0; d < n(); ++d)
    if (!metric.upper(d, b).is_zero()) out += g(a, d) * metric.upper(d, b);
  return out;
}

std::vector<bool> Representation::band(int depth) const {
  std::vector<bool> mask(dim, true);
  if (!cutoff) return mask;
  const int limit = *cutoff - depth * gen_raise;
  for (std::size_t i = 0; i < dim; ++i) mask[i] = grading[i] <= limit;
  return mask;
}

std::vector<bool> lift_mask(const std::vector<bool>& rep_mask, std::size_t outer_dim) {
  std::vector<bool> out;
  out.reserve(outer_dim * rep_mask.size());
  for (std::size_t k = 0; k < outer_dim; ++k) out.insert(out.end(), rep_mask.begin(), rep_mask.end());
  return out;
}

// ---------------------------------------------------------------- oscillators

namespace {

/// Jordan-Wigner fermions on `modes` modes, bit j of the index = occupation of mode j.
std::pair<std::vector<ScalarMatrix>, std::vector<ScalarMatrix>> fermion_modes(std::size_t modes) {
  const std::size_t dim = std::size_t{1} << modes;
  std::vector<ScalarMatrix> ann(modes, ScalarMatrix(dim, dim)), cre(modes, ScalarMatrix(dim, dim));
  for (std::size_t j = 0; j < modes; ++j)
    for (std::size_t s = 0; s < dim; ++s) {
      const int below = __builtin_popcountll(s & ((std::size_t{1} << j) - 1));
      const long sign = below % 2 == 0 ? 1 : -1;
      if (s & (std::size_t{1} << j))
        ann[j](s & ~(std::size_t{1} << j), s) = Scalar(sign);
      else
        cre[j](s | (std::size_t{1} << j), s) = Scalar(sign);
    }
  return {ann, cre};
}

void enumerate_occupations(std::size_t modes, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == modes) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    enumerate_occupations(modes, total - k, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> occupation_basis(std::size_t modes, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int t = 0; t <= max_total; ++t) {
    if (modes == 0) {
      if (t == 0) out.emplace_back();
      continue;
    }
    enumerate_occupations(modes, t, cur, out);
  }
  return out;
}

}  // namespace

std::vector<ScalarMatrix> OscillatorSet::build_bosonic(std::size_t modes, int cutoff, std::vector<int>& grading) {
  auto basis = occupation_basis(modes, cutoff);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  grading.clear();
  for (auto& b : basis) {
    int t = 0;
    for (int x : b) t += x;
    grading.push_back(t);
  }
  const std::size_t dim = basis.size();
  // Order: c^{-m}..c^{-1} (creators a_m^+..a_1^+), then c^1..c^m (a_1..a_m).
  std::vector<ScalarMatrix> c(2 * modes, ScalarMatrix(dim, dim));
  for (std::size_t j = 0; j < modes; ++j) {
    ScalarMatrix& cre = c[modes - 1 - j];
    ScalarMatrix& ann = c[modes + j];
    for (std::size_t s = 0; s < dim; ++s) {
      std::vector<int> occ = basis[s];
      if (occ[j] > 0) {
        std::vector<int> lower = occ;
        --lower[j];
        ann(index.at(lower), s) = Scalar(occ[j]);
      }
      if (grading[s] < cutoff) {
        std::vector<int> upper = occ;
        ++upper[j];
        cre(index.at(upper), s) = Scalar(1);
      }
    }
  }
  return c;
}

OscillatorSet::OscillatorSet(const Metric& metric, OscillatorKind kind, int cutoff)
    : metric_(metric), kind_(kind), cutoff_(cutoff) {
  if (metric.basis() != Basis::split) throw std::invalid_argument("oscillators need the split basis");
  if ((kind == OscillatorKind::fermionic) != metric.kind().orthogonal())
    throw std::invalid_argument("fermionic oscillators pair with so, bosonic with sp");
  const std::size_t n = metric.n(), m = n / 2;
  if (kind == OscillatorKind::bosonic) {
    if (cutoff < 1) throw std::invalid_argument("bosonic cutoff must be at least 1");
    c_ = build_bosonic(m, cutoff, grading_);
    return;
  }
  cutoff_ = 0;
  auto [ann, cre] = fermion_modes(m);
  const std::size_t pdim = std::size_t{1} << m;
  c_.assign(n, ScalarMatrix());
  for (std::size_t j = 0; j < m; ++j) {
    c_[metric.index_of(-static_cast<int>(j + 1))] = cre[j];
    c_[metric.index_of(static_cast<int>(j + 1))] = ann[j];
  }
  for (std::size_t s = 0; s < pdim; ++s) grading_.push_back(__builtin_popcountll(s));
  if (n % 2 == 1) {
    ScalarMatrix parity(pdim, pdim);
    for (std::size_t s = 0; s < pdim; ++s) parity(s, s) = Scalar(grading_[s] % 2 == 0 ? 1 : -1);
    ScalarMatrix extra(2, 2);
    extra(0, 1) = Scalar(1);     // b
    extra(1, 0) = Scalar(1, 2);  // b^+ / 2
    const ScalarMatrix one2 = ScalarMatrix::identity(2);
    for (auto& x : c_)
      if (x.rows() != 0) x = kron(x, one2);
    c_[metric.index_of(0)] = kron(parity, extra);
    std::vector<int> g;
    for (int x : grading_) {
      g.push_back(x);
      g.push_back(x + 1);
    }
    grading_ = g;
  }
}

const std::vector<ScalarMatrix>& OscillatorSet::extended(int extra) const {
  auto it = extended_.find(extra);
  if (it != extended_.end()) return it->second;
  std::vector<int> g;
  return extended_.emplace(extra, build_bosonic(metric_.n() / 2, cutoff_ + extra, g)).first->second;
}

ScalarMatrix OscillatorSet::product(const std::vector<std::size_t>& idx) const {
  const std::size_t d = dim();
  if (idx.empty()) return ScalarMatrix::identity(d);
  if (!bosonic()) {
    ScalarMatrix out = c_[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) out = out * c_[idx[k]];
    return out;
  }
  const auto& big = extended(static_cast<int>(idx.size()) - 1);
  ScalarMatrix out = big[idx[0]];
  for (std::size_t k = 1; k < idx.size(); ++k) out = out * big[idx[k]];
  ScalarMatrix block(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) block(i, j) = out(i, j);
  return block;
}

ScalarMatrix OscillatorSet::mixed_pair(std::size_t a, std::size_t b) const {
  ScalarMatrix out(dim(), dim());
  for (std::size_t d = 0; d < metric_.n(); ++d)
    if (!metric_.lower(b, d).is_zero()) out += product({a, d}) * metric_.lower(b, d);
  return out;
}

std::vector<bool> OscillatorSet::band(int raise) const {
  std::vector<bool> mask(dim(), true);
  if (!bosonic()) return mask;
  for (std::size_t i = 0; i < dim(); ++i) mask[i] = grading_[i] <= cutoff_ - raise;
  return mask;
}

std::string OscillatorSet::describe() const {
  return std::string(bosonic() ? "bosonic" : "fermionic") + " oscillators on " + metric_.name() +
         (bosonic() ? ", cutoff " + std::to_string(cutoff_) : "") + ", dim " + std::to_string(dim());
}

OscillatorSet oscillators(const Metric& metric, OscillatorKind kind, int cutoff) {
  return OscillatorSet(metric, kind, cutoff);
}

// ------------------------------------------------------------ constructors

Representation fundamental_rep(const Metric& metric) {
  const std::size_t n = metric.n();
  Representation rep(metric, "fundamental", n);
  const Scalar eps(metric.epsilon());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ScalarMatrix& g = rep.g(a, b);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Scalar x(0);
          if (a == d && c == b) x -= Scalar(1);
          x += eps * metric.upper(a, c) * metric.lower(b, d);
          if (!x.is_zero()) g(c, d) = x;
        }
    }
  return rep;
}

Representation spinor_rep(const OscillatorSet& osc) {
  const Metric& metric = osc.metric();
  const std::size_t n = metric.n();
  Representation rep(metric, osc.bosonic() ? "metaplectic" : "spinor", osc.dim());
  const Scalar half_eps(metric.epsilon(), 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      rep.g(a, b) = osc.mixed_pair(a, b);
      if (a == b) rep.g(a, b) -= ScalarMatrix::identity(osc.dim()) * half_eps;
    }
  if (osc.bosonic()) {
    rep.grading = osc.grading();
    rep.cutoff = osc.cutoff();
    rep.gen_raise = 2;
  }
  return rep;
}

namespace {

/// Degree-k basis of the x-algebra: exponent vectors (commuting) or 0/1
/// vectors (anticommuting), in a fixed order.
std::vector<std::vector<int>> js_basis(std::size_t n, int k, bool grassmann) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == n) {
      if (!grassmann || left <= 1) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int e = grassmann ? std::min(left, 1) : left; e >= 0; --e) {
      cur.push_back(e);
      rec(pos + 1, left - e);
      cur.pop_back();
    }
  };
  rec(0, k);
  return out;
}

struct JsMaps {
  std::vector<ScalarMatrix> x;  // x_a : V_{k-1} -> V_k
  std::vector<ScalarMatrix> d;  // d_a = eps_ab d/dy_b : V_k -> V_{k-1}
};

JsMaps js_maps(const Metric& metric, int k) {
  const std::size_t n = metric.n();
  const bool grassmann = !metric.kind().orthogonal();
  auto hi = js_basis(n, k, grassmann), lo = js_basis(n, k - 1, grassmann);
  std::map<std::vector<int>, std::size_t> hi_idx, lo_idx;
  for (std::size_t i = 0; i < hi.size(); ++i) hi_idx[hi[i]] = i;
  for (std::size_t i = 0; i < lo.size(); ++i) lo_idx[lo[i]] = i;
  JsMaps maps{std::vector<ScalarMatrix>(n, ScalarMatrix(hi.size(), lo.size())),
              std::vector<ScalarMatrix>(n, ScalarMatrix(lo.size(), hi.size()))};
  std::vector<ScalarMatrix> dy(n, ScalarMatrix(lo.size(), hi.size()));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t s = 0; s < lo.size(); ++s) {
      std::vector<int> e = lo[s];
      if (grassmann && e[a] == 1) continue;
      long sign = 1;
      if (grassmann)
        for (std::size_t t = 0; t < a; ++t)
          if (e[t]) sign = -sign;
      ++e[a];
      maps.x[a](hi_idx.at(e), s) = Scalar(sign);
    }
    for (std::size_t s = 0; s < hi.size(); ++s) {
      std::vector<int> e = hi[s];
      if (e[a] == 0) continue;
      long coeff = e[a];
      if (grassmann)
        for (std::size_t t = 0; t < a; ++t)
          if (e[t]) coeff = -coeff;
      --e[a];
      dy[a](lo_idx.at(e), s) = Scalar(coeff);
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!metric.lower(a, b).is_zero()) maps.d[a] += dy[b] * metric.lower(a, b);
  return maps;
}

}  // namespace

Representation js_rep(const Metric& metric, int degree, int sign) {
  const std::size_t n = metric.n();
  const bool grassmann = !metric.kind().orthogonal();
  if (degree < 0) throw std::invalid_argument("JS degree must be non-negative");
  if (grassmann && degree > static_cast<int>(n)) throw std::invalid_argument("Grassmann degree exceeds n");
  const std::size_t dim = js_basis(n, degree, grassmann).size();
  Representation rep(metric, "js(m=" + std::to_string(degree) + ")", dim);
  if (degree == 0) return rep;
  const JsMaps maps = js_maps(metric, degree);
  const Scalar eps(metric.epsilon());
  // M_ab = eps x_a d_b - x_b d_a
  std::vector<ScalarMatrix> mlow(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mlow[a * n + b] = maps.x[a] * maps.d[b] * eps - maps.x[b] * maps.d[a];
  const Scalar s(sign);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ScalarMatrix& g = rep.g(a, b);
      for (std::size_t d = 0; d < n; ++d)
        if (!metric.upper(a, d).is_zero()) g += mlow[d * n + b] * (metric.upper(a, d) * s);
    }
  return rep;
}

ScalarMatrix js_laplacian(const Metric& metric, int degree) {
  const bool grassmann = !metric.kind().orthogonal();
  const std::size_t n = metric.n();
  const std::size_t hi = js_basis(n, degree, grassmann).size();
  if (degree < 2) return ScalarMatrix(0, hi);
  const JsMaps top = js_maps(metric, degree), mid = js_maps(metric, degree - 1);
  ScalarMatrix out(js_basis(n, degree - 2, grassmann).size(), hi);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!metric.upper(a, b).is_zero()) out += mid.d[a] * top.d[b] * metric.upper(a, b);
  return out;
}

ScalarMatrix harmonic_subspace(const Metric& metric, int degree) {
  ScalarMatrix lap = js_laplacian(metric, degree);
  if (lap.rows() == 0) return ScalarMatrix::identity(lap.cols());
  return nullspace(lap);
}

Representation restrict_rep(const Representation& rep, const ScalarMatrix& basis, const std::string& label) {
  if (rep.truncated()) throw std::invalid_argument("restriction of truncated representations is not supported");
  Representation out(rep.metric, label, basis.cols());
  for (std::size_t k = 0; k < rep.gens.size(); ++k) out.gens[k] = restrict_to(rep.gens[k], basis);
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.metric == b.metric)) throw std::invalid_argument("direct_sum: metric mismatch");
  if (a.truncated() || b.truncated()) throw std::invalid_argument("direct_sum of truncated representations");
  Representation out(a.metric, a.label + "+" + b.label, a.dim + b.dim);
  for (std::size_t k = 0; k < a.gens.size(); ++k) {
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) out.gens[k](i, j) = a.gens[k](i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) out.gens[k](a.dim + i, a.dim + j) = b.gens[k](i, j);
  }
  return out;
}

Representation tensor_product(const Representation& a, const Representation& b) {
  if (!(a.metric == b.metric)) throw std::invalid_argument("tensor_product: metric mismatch");
  if (a.truncated() || b.truncated()) throw std::invalid_argument("tensor_product of truncated representations");
  Representation out(a.metric, a.label + "*" + b.label, a.dim * b.dim);
  const ScalarMatrix ia = ScalarMatrix::identity(a.dim), ib = ScalarMatrix::identity(b.dim);
  for (std::size_t k = 0; k < a.gens.size(); ++k) out.gens[k] = kron(a.gens[k], ib) + kron(ia, b.gens[k]);
  return out;
}

Representation sign_flipped(const Representation& rep, std::size_t a, std::size_t b) {
  Representation out = rep;
  out.label += "(flipped)";
  out.g(a, b) = -out.g(a, b);
  return out;
}

// ------------------------------------------------------------------ checks

ScalarMatrix generator_matrix(const Representation& rep) {
  const std::size_t n = rep.n();
  ScalarMatrix out(n * rep.dim, n * rep.dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const ScalarMatrix& g = rep.g(a, b);
      for (std::size_t i = 0; i < rep.dim; ++i)
        for (std::size_t j = 0; j < rep.dim; ++j)
          if (!g(i, j).is_zero()) out(a * rep.dim + i, b * rep.dim + j) = g(i, j);
    }
  return out;
}

ScalarMatrix casimir(const Representation& rep) {
  ScalarMatrix out(rep.dim, rep.dim);
  for (std::size_t a = 0; a < rep.n(); ++a)
    for (std::size_t b = 0; b < rep.n(); ++b) out += rep.g(a, b) * rep.g(b, a);
  return out;
}

ScalarMatrix trace_generator(const Representation& rep) {
  ScalarMatrix out(rep.dim, rep.dim);
  for (std::size_t a = 0; a < rep.n(); ++a) out += rep.g(a, a);
  return out;
}

std::optional<Scalar> scalar_value(const ScalarMatrix& op, const std::vector<bool>& mask) {
  std::optional<Scalar> value;
  for (std::size_t j = 0; j < op.cols(); ++j) {
    if (!mask[j]) continue;
    for (std::size_t i = 0; i < op.rows(); ++i) {
      if (i == j) continue;
      if (!op(i, j).is_zero()) return std::nullopt;
    }
    if (!value) value = op(j, j);
    else if (!(*value == op(j, j))) return std::nullopt;
  }
  return value;
}

ResidualReport check_lie_relations(const Representation& rep) {
  const std::size_t n = rep.n();
  const Metric& m = rep.metric;
  const Scalar eps(m.epsilon());
  const std::vector<bool> mask = rep.band(1);
  std::vector<ScalarMatrix> low(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) low[a * n + b] = rep.lower(a, b);
  auto G = [&](std::size_t a, std::size_t b) -> const ScalarMatrix& { return low[a * n + b]; };

  ResidualReport report;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      report.merge(summarize(G(a, b) + G(b, a) * eps, &mask));
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          ScalarMatrix res = commutator(G(a, b), G(c, d));
          if (!m.lower(c, b).is_zero()) res -= G(a, d) * m.lower(c, b);
          if (!m.lower(d, b).is_zero()) res -= G(c, a) * m.lower(d, b);
          if (!m.lower(c, a).is_zero()) res -= G(d, b) * m.lower(c, a);
          if (!m.lower(d, a).is_zero()) res -= G(b, c) * m.lower(d, a);
          report.merge(summarize(res, &mask));
        }
    }
  return report;
}

namespace {

ScalarMatrix id_kron(std::size_t n, const ScalarMatrix& op) { return kron(ScalarMatrix::identity(n), op); }

}  // namespace

ResidualReport check_characteristic(const Representation& rep, CharacteristicKind kind) {
  const std::size_t n = rep.n();
  const Scalar eps(rep.metric.epsilon());
  const Scalar b = beta(rep.metric);
  const ScalarMatrix gm = generator_matrix(rep);
  const ScalarMatrix c2 = id_kron(n, casimir(rep));
  const ScalarMatrix one = ScalarMatrix::identity(gm.rows());
  const ScalarMatrix g2 = gm * gm;
  switch (kind) {
    case CharacteristicKind::quadratic: {
      const auto mask = lift_mask(rep.band(1), n);
      return summarize(g2 - gm * b - c2 * Scalar(1, static_cast<long>(n)), &mask);
    }
    case CharacteristicKind::cubic: {
      const auto mask = lift_mask(rep.band(2), n);
      ScalarMatrix res = g2 * gm + g2 * (eps - Scalar(static_cast<long>(n))) + gm * (eps * Scalar(static_cast<long>(n)) - Scalar(2));
      res += c2 * (one - gm * eps) * Scalar(1, 2);
      return summarize(res, &mask);
    }
    case CharacteristicKind::anticommutator: {
      // (1/2) sum_c [G^a_c, G^c_b]_+ - (1/n) C2 delta^a_b
      const auto mask = lift_mask(rep.band(1), n);
      ScalarMatrix res(gm.rows(), gm.cols());
      const ScalarMatrix c2r = casimir(rep) * Scalar(1, static_cast<long>(n));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t bb = 0; bb < n; ++bb) {
          ScalarMatrix blk(rep.dim, rep.dim);
          for (std::size_t c = 0; c < n; ++c) blk += commutator(rep.g(a, c), rep.g(c, bb), -1);
          blk *= Scalar(1, 2);
          if (a == bb) blk -= c2r;
          for (std::size_t i = 0; i < rep.dim; ++i)
            for (std::size_t j = 0; j < rep.dim; ++j) res(a * rep.dim + i, bb * rep.dim + j) = blk(i, j);
        }
      return summarize(res, &mask);
    }
  }
  throw std::logic_error("unknown characteristic kind");
}

ResidualReport check_cubic_with_value(const Representation& rep, const Scalar& m2) {
  const std::size_t n = rep.n();
  const Scalar eps(rep.metric.epsilon()), nn(static_cast<long>(n));
  const ScalarMatrix gm = generator_matrix(rep);
  const ScalarMatrix g2 = gm * gm;
  ScalarMatrix res = g2 * gm + g2 * (eps - nn) + gm * (eps * nn - Scalar(2) - eps * m2 * Scalar(1, 2));
  res += ScalarMatrix::identity(gm.rows()) * (m2 * Scalar(1, 2));
  const auto mask = lift_mask(rep.band(2), n);
  return summarize(res, &mask);
}

ResidualReport check_cubic_factorized(const Representation& rep, int m) {
  const std::size_t n = rep.n();
  const Scalar eps(rep.metric.epsilon()), mm(m), nn(static_cast<long>(n));
  const ScalarMatrix gm = generator_matrix(rep);
  const ScalarMatrix one = ScalarMatrix::identity(gm.rows());
  ScalarMatrix res = (gm + one * (eps * mm)) * (gm - one * (eps * mm + nn - Scalar(2) * eps)) * (gm - one * eps);
  const auto mask = lift_mask(rep.band(2), n);
  return summarize(res, &mask);
}

ResidualReport check_defR5(const Representation& rep) {
  const std::size_t n = rep.n();
  const int eps = rep.metric.epsilon();
  const std::vector<bool> mask = rep.band(1);
  std::vector<ScalarMatrix> low(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) low[a * n + b] = rep.lower(a, b);
  // Anticommutators [G_ae, G_fb]_+ on demand.
  auto anti = [&](std::size_t a, std::size_t e, std::size_t f, std::size_t b) {
    return commutator(low[a * n + e], low[f * n + b], -1);
  };
  static const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  ResidualReport report;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t f = 0; f < n; ++f)
        for (std::size_t b = 0; b < n; ++b) {
          const std::array<std::size_t, 3> idx{a, e, f};
          ScalarMatrix res(rep.dim, rep.dim);
          for (std::size_t p = 0; p < perms.size(); ++p) {
            const bool odd = p >= 3;
            const Scalar w(odd ? -eps : 1);
            res += anti(idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]], b) * w;
          }
          report.merge(summarize(res, &mask));
        }
  return report;
}

ResidualReport check_cycl(const Representation& rep) {
  const std::size_t n = rep.n();
  const Metric& m = rep.metric;
  const std::vector<bool> mask = rep.band(1);
  std::vector<ScalarMatrix> low(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) low[a * n + b] = rep.lower(a, b);
  auto G = [&](std::size_t a, std::size_t b) -> const ScalarMatrix& { return low[a * n + b]; };
  ResidualReport report;
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = 0; c2 < n; ++c2) {
          ScalarMatrix res = G(a2, a1) * G(c1, c2) + G(a1, c1) * G(a2, c2) + G(c1, a2) * G(a1, c2);
          if (!m.lower(c2, a1).is_zero()) res -= G(c1, a2) * m.lower(c2, a1);
          if (!m.lower(c2, a2).is_zero()) res -= G(a1, c1) * m.lower(c2, a2);
          if (!m.lower(c2, c1).is_zero()) res -= G(a2, a1) * m.lower(c2, c1);
          report.merge(summarize(res, &mask));
        }
  return report;
}

}  // namespace ylab
