#include "ylab/spinorial_r.hpp"

#include <algorithm>
#include <numeric>
#include <functional>
#include <tuple>

#include "ylab/tensor.hpp"

namespace ylab {

namespace {

struct Entry {
  std::size_t index;
  Scalar value;
};

/// Nonzero entries of every column, in row order.
using SparseColumns = std::vector<std::vector<Entry>>;

SparseColumns column_entries(const ScalarMatrix& m) {
  SparseColumns cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) cols[j].push_back({i, m(i, j)});
  return cols;
}

/// s * a * b on column lists.
SparseColumns sparse_product(const SparseColumns& a, const SparseColumns& b, const Scalar& s) {
  SparseColumns out(b.size());
  std::map<std::size_t, Scalar> acc;
  for (std::size_t j = 0; j < b.size(); ++j) {
    acc.clear();
    for (const auto& [k, bkj] : b[j])
      for (const auto& [i, aik] : a[k]) acc[i].add_product(aik, bkj);
    for (auto& [i, x] : acc)
      if (!x.is_zero()) out[j].push_back({i, x * s});
  }
  return out;
}

void add_into(SparseColumns& acc, const SparseColumns& x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (const auto& e : x[j]) {
      auto it = std::find_if(acc[j].begin(), acc[j].end(), [&](const Entry& y) { return y.index == e.index; });
      if (it == acc[j].end()) acc[j].push_back(e);
      else it->value += e.value;
    }
    std::erase_if(acc[j], [](const Entry& y) { return y.value.is_zero(); });
  }
}

void multisets(std::size_t n, int k, bool strict, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t a = start; a < n; ++a) {
    cur.push_back(a);
    multisets(n, k - 1, strict, strict ? a + 1 : a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SymmetrizedBasis::SymmetrizedBasis(const OscillatorSet& osc) : osc_(osc) {}

std::vector<std::vector<std::size_t>> SymmetrizedBasis::indices(int k) const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  const std::size_t n = osc_.metric().n();
  if (!osc_.bosonic() && k > static_cast<int>(n)) return out;
  multisets(n, k, !osc_.bosonic(), 0, cur, out);
  return out;
}

void SymmetrizedBasis::build_order(int k) const {
  if (static_cast<int>(built_.size()) > k && built_[k]) return;
  const std::size_t d = osc_.dim();
  const auto idx = indices(k);
  if (k == 0) {
    cache_[{}] = ScalarMatrix::identity(d);
  } else if (!osc_.bosonic()) {
    // A(S) = sum_i (-1)^i c^{s_i} A(S \ s_i); lower orders are already cached.
    build_order(k - 1);
    for (const auto& s : idx) {
      ScalarMatrix acc(d, d);
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<std::size_t> rest = s;
        rest.erase(rest.begin() + static_cast<long>(i));
        ScalarMatrix term = osc_.c(s[i]) * cache_.at(rest);
        if (i % 2 == 0) acc += term;
        else acc -= term;
      }
      cache_[s] = std::move(acc);
    }
  } else {
    // S(M) = sum_{distinct a} mult_a c^a S(M \ a), evaluated on a space large
    // enough that the order-k words are exact, then compressed.
    OscillatorSet big(osc_.metric(), OscillatorKind::bosonic, osc_.cutoff() + k);
    const std::size_t bd = big.dim();
    std::vector<SparseColumns> cs;
    for (std::size_t a = 0; a < osc_.metric().n(); ++a) cs.push_back(column_entries(big.c(a)));
    std::map<std::vector<std::size_t>, SparseColumns> memo;
    memo[{}] = column_entries(ScalarMatrix::identity(bd));
    std::function<const SparseColumns&(const std::vector<std::size_t>&)> sym =
        [&](const std::vector<std::size_t>& m) -> const SparseColumns& {
      auto it = memo.find(m);
      if (it != memo.end()) return it->second;
      SparseColumns acc(bd);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0 && m[i] == m[i - 1]) continue;
        std::size_t mult = 0;
        while (i + mult < m.size() && m[i + mult] == m[i]) ++mult;
        std::vector<std::size_t> rest = m;
        rest.erase(rest.begin() + static_cast<long>(i));
        add_into(acc, sparse_product(cs[m[i]], sym(rest), Scalar(static_cast<long>(mult))));
      }
      return memo.emplace(m, std::move(acc)).first->second;
    };
    for (const auto& s : idx) {
      const SparseColumns& full = sym(s);
      ScalarMatrix block(d, d);
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& [i, x] : full[j])
          if (i < d) block(i, j) = x;
      cache_[s] = std::move(block);
    }
  }
  if (static_cast<int>(built_.size()) <= k) built_.resize(k + 1, false);
  built_[k] = true;
}

const ScalarMatrix& SymmetrizedBasis::element(const std::vector<std::size_t>& sorted) const {
  std::lock_guard<std::mutex> lock(mutex_);
  build_order(static_cast<int>(sorted.size()));
  return cache_.at(sorted);
}

ScalarMatrix SymmetrizedBasis::symmetrized(std::vector<std::size_t> tuple) const {
  int sign = 1;
  // Bubble sort tracks the permutation parity.
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = 0; j + 1 < tuple.size() - i; ++j)
      if (tuple[j] > tuple[j + 1]) {
        std::swap(tuple[j], tuple[j + 1]);
        sign = -sign;
      }
  const std::size_t d = osc_.dim();
  if (!osc_.bosonic()) {
    for (std::size_t i = 1; i < tuple.size(); ++i)
      if (tuple[i] == tuple[i - 1]) return ScalarMatrix(d, d);
    const ScalarMatrix& e = element(tuple);
    return sign == 1 ? e : -e;
  }
  return element(tuple);
}

std::shared_ptr<const SymmetrizedBasis> symmetrized_basis_for(const OscillatorSet& osc) {
  static std::mutex mutex;
  static std::map<std::tuple<int, std::size_t, int, int>, std::shared_ptr<const SymmetrizedBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_tuple(static_cast<int>(osc.kind()), osc.metric().n(), osc.cutoff(),
                                   static_cast<int>(osc.metric().basis()));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const SymmetrizedBasis>(osc);
  cache[key] = basis;
  return basis;
}

std::vector<SymmetrizedBasisElement> symmetrized_basis(const OscillatorSet& osc, int k) {
  auto basis = symmetrized_basis_for(osc);
  std::vector<SymmetrizedBasisElement> out;
  for (auto& idx : basis->indices(k)) out.push_back({k, idx, basis->element(idx)});
  return out;
}

// ------------------------------------------------------------ coefficients

std::vector<Scalar> r_coefficients(const Metric& metric, const Scalar& u, int k_max, const Scalar& odd_ratio) {
  const Scalar eps(metric.epsilon()), n(static_cast<long>(metric.n()));
  std::vector<Scalar> r;
  r.push_back(Scalar(1));
  if (k_max >= 1) r.push_back(odd_ratio);
  for (int k = 0; k + 2 <= k_max; ++k) {
    const Scalar den = Scalar(k + 2) - eps * (u + n);
    if (den.is_zero())
      throw PoleError("r_coefficients: pole at k = " + std::to_string(k) + " (u = " + u.to_string() + ")", k);
    r.push_back(Scalar(4) * (Scalar(k) + eps * u) / den * r[k]);
  }
  return r;
}

std::vector<Scalar> r_coefficients_signed(const Metric& metric, const Scalar& u, int k_max, const Scalar& odd_ratio) {
  std::vector<Scalar> r = r_coefficients(metric, u, k_max, odd_ratio);
  for (int k = 2; k <= k_max; ++k)
    if ((k / 2) % 2 == 1) r[k] *= Scalar(metric.epsilon());
  return r;
}

Scalar r_closed_form(const Metric& metric, const Scalar& u, int k) {
  const Scalar eps(metric.epsilon()), n(static_cast<long>(metric.n()));
  const int m = k / 2;
  Scalar out(1);
  for (int j = 0; j < m; ++j) {
    out *= Scalar(4);
    if (k % 2 == 0) {
      out *= Scalar(j) + eps * u / Scalar(2);
      out /= Scalar(j + 1) - eps * (u + n) / Scalar(2);
    } else {
      out *= Scalar(2 * j + 1, 2) + eps * u / Scalar(2);
      out /= Scalar(2 * j + 3, 2) - eps * (u + n) / Scalar(2);
    }
  }
  return out;
}

Scalar r_odd_gamma_literal(const Metric& metric, const Scalar& u, int m) {
  const Scalar eps(metric.epsilon()), n(static_cast<long>(metric.n()));
  Scalar out(1);
  for (int j = 0; j < m; ++j) {
    out *= Scalar(4);
    out *= Scalar(2 * j + 1, 2) + eps * u / Scalar(2);
    out /= Scalar(2 * j + 1, 2) - eps * (u + n) / Scalar(2);
  }
  return out;
}

// ---------------------------------------------------------------- assembly

namespace {

/// out += w * (a (x) b) without forming the Kronecker product.
void add_kron(ScalarMatrix& out, const ScalarMatrix& a, const ScalarMatrix& b, const Scalar& w) {
  std::vector<std::pair<std::size_t, std::size_t>> bnz;
  for (std::size_t k = 0; k < b.rows(); ++k)
    for (std::size_t l = 0; l < b.cols(); ++l)
      if (!b(k, l).is_zero()) bnz.emplace_back(k, l);
  if (bnz.empty()) return;
  const std::size_t br = b.rows(), bc = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      const Scalar aw = a(i, j) * w;
      for (const auto& [k, l] : bnz) out(i * br + k, j * bc + l).add_product(aw, b(k, l));
    }
}

/// Residual of [a, b] restricted to the masked columns.
ResidualReport masked_commutator(const SparseColumns& a_cols, const SparseColumns& b_cols, const std::vector<bool>& mask) {
  ResidualReport report;
  std::map<std::size_t, Scalar> col;
  for (std::size_t j = 0; j < a_cols.size(); ++j) {
    if (!mask[j]) continue;
    col.clear();
    for (const auto& [k, bkj] : b_cols[j])
      for (const auto& [i, aik] : a_cols[k]) col[i].add_product(aik, bkj);
    for (const auto& [k, akj] : a_cols[j]) {
      const Scalar neg = -akj;
      for (const auto& [i, bik] : b_cols[k]) col[i].add_product(bik, neg);
    }
    for (const auto& [i, x] : col) {
      if (x.is_zero()) continue;
      const bool earlier = !report.witness || i < (*report.witness)[0] || (i == (*report.witness)[0] && j < (*report.witness)[1]);
      if (earlier) {
        report.witness = std::vector<std::size_t>{i, j};
        report.first_value = x.to_string();
      }
      report.zero = false;
      ++report.nonzero_entries;
      ++report.nonzero_terms;
      report.max_terms = 1;
    }
  }
  return report;
}

}  // namespace

ScalarMatrix spinorial_r_order(const SymmetrizedBasis& basis, int k) {
  const OscillatorSet& osc = basis.oscillators();
  const Metric& metric = osc.metric();
  const std::size_t d = osc.dim(), n = metric.n();
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> partners(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!metric.lower(a, b).is_zero()) partners[a].emplace_back(b, metric.lower(a, b));

  ScalarMatrix out(d * d, d * d);
  for (const auto& a : basis.indices(k)) {
    // Tuples with the same multiset of a-indices contribute equally: k!/prod(mult!).
    Scalar count(1);
    for (int j = 2; j <= k; ++j) count *= Scalar(j);
    for (std::size_t i = 0; i < a.size();) {
      std::size_t mult = 0;
      while (i + mult < a.size() && a[i + mult] == a[i]) ++mult;
      for (std::size_t j = 2; j <= mult; ++j) count /= Scalar(static_cast<long>(j));
      i += mult;
    }
    const ScalarMatrix& left = basis.element(a);
    // Sum over the partner tuples b.
    std::vector<std::size_t> choice(a.size(), 0);
    for (;;) {
      Scalar w = count;
      std::vector<std::size_t> b(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        b[i] = partners[a[i]][choice[i]].first;
        w *= partners[a[i]][choice[i]].second;
      }
      const ScalarMatrix right = basis.symmetrized(b);
      add_kron(out, left, right, w);
      std::size_t pos = 0;
      while (pos < a.size() && ++choice[pos] == partners[a[pos]].size()) choice[pos++] = 0;
      if (pos == a.size()) break;
    }
  }
  return out;
}

SpinorialRSeries assemble_spinorial_r(const OscillatorSet& osc, const Scalar& u, int k_max, std::vector<Scalar> r,
                                      BasisNormalization norm) {
  SpinorialRSeries s{osc.metric(), u, k_max, {}, {}, osc.dim(), osc.cutoff(), osc.bosonic(), norm};
  s.r = r.empty() ? r_coefficients(osc.metric(), u, k_max) : std::move(r);
  if (static_cast<int>(s.r.size()) < k_max + 1) throw std::invalid_argument("assemble_spinorial_r: too few coefficients");
  auto basis = symmetrized_basis_for(osc);
  const std::size_t d = osc.dim();
  s.assembled = ScalarMatrix(d * d, d * d);
  Scalar fact(1);
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) fact *= Scalar(k);
    if (s.r[k].is_zero()) continue;
    if (!osc.bosonic() && k > static_cast<int>(osc.metric().n())) break;
    Scalar w = s.r[k] / fact;
    if (norm == BasisNormalization::averaged) w /= fact * fact;
    s.assembled += spinorial_r_order(*basis, k) * w;
  }
  return s;
}

// ------------------------------------------------------------ L operators

PolyMatrix SpinorialL::at(const Poly2& x) const {
  return scale(ScalarMatrix::identity(space_dim()), x) + to_poly(coupling);
}

SpinorialLPair spinorial_l(const OscillatorSet& osc, const Representation& rep) {
  if (!(osc.metric() == rep.metric)) throw std::invalid_argument("spinorial_l: metric mismatch");
  const Representation f = spinor_rep(osc);
  const std::size_t n = rep.n(), fd = osc.dim();
  auto shared = std::make_shared<const Representation>(rep);
  SpinorialLPair out{{fd, shared, ScalarMatrix(fd * rep.dim, fd * rep.dim)}, {fd, shared, ScalarMatrix(fd * rep.dim, fd * rep.dim)}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      out.l.coupling += kron(f.g(a, b), rep.g(b, a));
      out.tilde.coupling -= kron(f.g(a, b).transpose(), rep.g(b, a));
    }
  out.l.coupling *= Scalar(1, 2);
  out.tilde.coupling *= Scalar(1, 2);
  return out;
}

PolyMatrix check_spinorial_rll(const ScalarMatrix& r_check, const Scalar& u, const SpinorialL& l) {
  const std::vector<std::size_t> dims{l.fock_dim, l.fock_dim, l.rep->dim};
  const PolyMatrix r12 = to_poly(embed(r_check, dims, {0, 1}));
  const Poly2 v = Poly2::v(), uv = Poly2(u) + v;
  const PolyMatrix l1_uv = embed(l.at(uv), dims, {0, 2}), l2_v = embed(l.at(v), dims, {1, 2});
  const PolyMatrix l1_v = embed(l.at(v), dims, {0, 2}), l2_uv = embed(l.at(uv), dims, {1, 2});
  return r12 * l1_uv * l2_v - l1_v * l2_uv * r12;
}

PolyMatrix check_spinorial_rll(const SpinorialRSeries& series, const SpinorialL& l, bool transpose_r) {
  return check_spinorial_rll(transpose_r ? series.assembled.transpose() : series.assembled, series.u, l);
}

std::vector<bool> occupation_band(const OscillatorSet& osc, std::size_t rep_dim, int bound) {
  const std::size_t d = osc.dim();
  std::vector<bool> mask(d * d * rep_dim, true);
  if (!osc.bosonic()) return mask;
  const auto& g = osc.grading();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t w = 0; w < rep_dim; ++w) mask[(i * d + j) * rep_dim + w] = g[i] <= bound && g[j] <= bound;
  return mask;
}

ResidualReport check_sym(const SpinorialRSeries& series, const OscillatorSet& osc) {
  const Representation f = spinor_rep(osc);
  const std::size_t d = osc.dim(), n = f.n();
  const ScalarMatrix one = ScalarMatrix::identity(d);
  std::vector<ScalarMatrix> totals;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) totals.push_back(kron(f.g(a, b), one) + kron(one, f.g(a, b)));
  ResidualReport report;
  if (!osc.bosonic()) {
    for (const auto& t : totals) report.merge(summarize(commutator(t, series.assembled)));
    return report;
  }
  // Truncated orders are compared separately, each on the states where the
  // compression is exact: order k raises either occupation by at most k.
  auto basis = symmetrized_basis_for(osc);
  const auto& g = osc.grading();
  std::vector<SparseColumns> total_cols;
  for (const auto& t : totals) total_cols.push_back(column_entries(t));
  for (int k = 0; k <= series.k_max; ++k) {
    const int bound = osc.cutoff() - k - 2;
    if (bound < 0) break;
    std::vector<bool> mask(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) mask[i * d + j] = g[i] <= bound && g[j] <= bound;
    const auto term_cols = column_entries(spinorial_r_order(*basis, k));
    for (const auto& t : total_cols) report.merge(masked_commutator(t, term_cols, mask));
  }
  return report;
}

// ------------------------------------------------------------ Weyl symbols

namespace {

void add_to(WeylElement& e, const WeylMonomial& m, const PolyMatrix& x) {
  if (x.is_zero()) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) e.erase(it);
}

int degree(const WeylMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Derivative multiplicity of z^m along the listed variables, and the reduced monomial.
bool differentiate(WeylMonomial& m, const std::vector<std::size_t>& vars, long& factor) {
  for (auto v : vars) {
    if (m[v] == 0) return false;
    factor *= m[v];
    --m[v];
  }
  return true;
}

}  // namespace

WeylElement weyl_star(const WeylElement& f, const WeylElement& g, const ScalarMatrix& c, int max_order) {
  const std::size_t nv = c.rows();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j)
      if (!c(i, j).is_zero()) pairs.emplace_back(i, j);
  WeylElement out;
  for (const auto& [mf, xf] : f)
    for (const auto& [mg, xg] : g) {
      const PolyMatrix prod = xf * xg;
      // order j: (1/j!) (1/2)^j c^{i1 j1}...c^{ik jk} d_i.. f d_j.. g
      std::vector<std::size_t> choice;
      Scalar pref(1);
      for (int order = 0; order <= max_order; ++order) {
        if (order > 0) pref *= Scalar(1, 2 * order);
        std::vector<std::size_t> idx(order, 0);
        if (order > 0 && pairs.empty()) break;
        for (;;) {
          std::vector<std::size_t> left, right;
          Scalar w = pref;
          for (auto p : idx) {
            left.push_back(pairs[p].first);
            right.push_back(pairs[p].second);
            w *= c(pairs[p].first, pairs[p].second);
          }
          WeylMonomial a = mf, b = mg;
          long fa = 1, fb = 1;
          if (differentiate(a, left, fa) && differentiate(b, right, fb)) {
            WeylMonomial m(nv);
            for (std::size_t v = 0; v < nv; ++v) m[v] = a[v] + b[v];
            add_to(out, m, prod * (w * Scalar(fa * fb)));
          }
          std::size_t pos = 0;
          while (pos < idx.size() && ++idx[pos] == pairs.size()) idx[pos++] = 0;
          if (pos == idx.size()) break;
        }
      }
    }
  return out;
}

WeylElement spinorial_rll_weyl_residual(const Metric& metric, const Representation& rep, const Scalar& u, int k_max,
                                        std::vector<Scalar> r) {
  if (metric.kind().orthogonal()) throw std::invalid_argument("check_spinorial_rll_weyl: bosonic (symplectic) only");
  const std::size_t n = metric.n(), w = rep.dim, nv = 2 * n;
  if (r.empty()) r = r_coefficients(metric, u, k_max);
  // [z^a, z^b] read off the oscillator realization.
  const OscillatorSet osc(metric, OscillatorKind::bosonic, 2);
  ScalarMatrix c(nv, nv);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar k = (osc.c(a) * osc.c(b) - osc.c(b) * osc.c(a))(0, 0);
      c(a, b) = k;
      c(n + a, n + b) = k;
    }
  const PolyMatrix id = to_poly(ScalarMatrix::identity(w));
  auto unit = [&](int copy, std::vector<std::size_t> vars) {
    WeylMonomial m(nv, 0);
    for (auto v : vars) ++m[copy * n + v];
    return m;
  };

  // L_copy(x) = x + (1/2) F^a_b G^b_a, F^a_b = c^a eps_bd c^d - (eps/2) delta^a_b,
  // c^a c^d = z^a z^d + [c^a, c^d]/2.
  auto l_op = [&](int copy, const Poly2& x) {
    WeylElement e;
    add_to(e, WeylMonomial(nv, 0), scale(id, x));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const PolyMatrix gen = to_poly(rep.g(b, a) * Scalar(1, 2));
        Scalar constant = a == b ? Scalar(-metric.epsilon(), 2) : Scalar(0);
        for (std::size_t d = 0; d < n; ++d) {
          const Scalar& e_bd = metric.lower(b, d);
          if (e_bd.is_zero()) continue;
          add_to(e, unit(copy, {a, d}), gen * e_bd);
          constant += e_bd * c(a, d) / Scalar(2);
        }
        add_to(e, WeylMonomial(nv, 0), gen * constant);
      }
    return e;
  };

  // R = sum_k r_k/k! eps_{a1 b1}..eps_{ak bk} z1^{a1..ak} z2^{b1..bk}.
  WeylElement rr;
  std::vector<std::vector<std::size_t>> partners(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!metric.lower(a, b).is_zero()) partners[a].push_back(b);
  Scalar fact(1);
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) fact *= Scalar(k);
    std::vector<std::size_t> a(k, 0);
    for (;;) {
      Scalar weight = r[k] / fact;
      std::vector<std::size_t> b;
      for (auto x : a) {
        b.push_back(partners[x][0]);
        weight *= metric.lower(x, partners[x][0]);
      }
      WeylMonomial m = unit(0, a);
      const WeylMonomial mb = unit(1, b);
      for (std::size_t v = 0; v < nv; ++v) m[v] += mb[v];
      add_to(rr, m, id * weight);
      std::size_t pos = 0;
      while (pos < a.size() && ++a[pos] == n) a[pos++] = 0;
      if (pos == a.size()) break;
    }
  }

  const Poly2 v = Poly2::v(), uv = Poly2(u) + v;
  const WeylElement lhs = weyl_star(weyl_star(rr, l_op(0, uv), c), l_op(1, v), c);
  const WeylElement rhs = weyl_star(l_op(0, v), weyl_star(l_op(1, uv), rr, c), c);
  WeylElement diff = lhs;
  for (const auto& [m, x] : rhs) add_to(diff, m, x * Scalar(-1));
  for (auto it = diff.begin(); it != diff.end();)
    it = degree(it->first) > 2 * k_max - 4 ? diff.erase(it) : std::next(it);
  return diff;
}

WeylRllReport check_spinorial_rll_weyl(const Metric& metric, const Representation& rep, const Scalar& u, int k_max,
                                       std::vector<Scalar> r) {
  WeylRllReport report;
  report.exact_degree = 2 * k_max - 4;
  for (const auto& [m, x] : spinorial_rll_weyl_residual(metric, rep, u, k_max, std::move(r)))
    report.residual.merge(summarize(x));
  return report;
}

}  // namespace ylab
