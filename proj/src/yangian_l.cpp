#include "ylab/yangian_l.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ylab/linalg.hpp"
#include "ylab/tensor.hpp"

namespace ylab {

PolyMatrix LOperator::at(const Poly2& x) const {
  PolyMatrix out(space_dim(), space_dim());
  Poly2 power(1);
  for (const auto& c : coeffs) {
    if (!c.is_zero()) out += scale(c, power);
    power *= x;
  }
  return out;
}

ScalarMatrix LOperator::coeff(int k) const {
  if (k < 0 || k > degree()) return ScalarMatrix(space_dim(), space_dim());
  return coeffs[k];
}

LOperator linear_l(const Representation& rep) {
  auto r = std::make_shared<const Representation>(rep);
  const std::size_t d = rep.n() * rep.dim;
  return LOperator{rep.metric, r, {-generator_matrix(rep), ScalarMatrix::identity(d)}, 1, "linear(" + rep.label + ")"};
}

LOperator fundamental_quadratic_l(const Metric& metric) {
  Representation rep = fundamental_rep(metric);
  const ScalarMatrix g = generator_matrix(rep);
  const ScalarMatrix one = ScalarMatrix::identity(g.rows());
  const Scalar b = beta(metric);
  ScalarMatrix c0 = (g * g - g * (Scalar(2) * b) - one) * Scalar(1, 2);
  ScalarMatrix c1 = one * b - g;
  return LOperator{metric, std::make_shared<const Representation>(rep), {c0, c1, one}, 2, "quadratic(fundamental)"};
}

LOperator js_quadratic_l(const Representation& rep, const Scalar& lambda, const Scalar& mu, const Scalar& sigma) {
  const ScalarMatrix m = generator_matrix(rep);
  const ScalarMatrix one = ScalarMatrix::identity(m.rows());
  ScalarMatrix c0 = one * (lambda * mu) - m * sigma + m * m;
  ScalarMatrix c1 = m - one * (lambda + mu);
  return LOperator{rep.metric, std::make_shared<const Representation>(rep), {c0, c1, one}, 2,
                   "js-quadratic(" + rep.label + ")"};
}

LOperator lgn_l(const Representation& rep, const Scalar& m2) {
  const ScalarMatrix g = generator_matrix(rep);
  const ScalarMatrix one = ScalarMatrix::identity(g.rows());
  const Scalar b = beta(rep.metric);
  ScalarMatrix n = (g * g - g * b) * Scalar(1, 2) - one * (b * b * Scalar(1, 4) + m2 * Scalar(1, 8));
  return LOperator{rep.metric, std::make_shared<const Representation>(rep), {n, g, one}, 2, "lgn(" + rep.label + ")"};
}

LOperator quadratic_evaluation_l(const Representation& rep, const Scalar& m2) {
  const ScalarMatrix g = generator_matrix(rep);
  const ScalarMatrix one = ScalarMatrix::identity(g.rows());
  const Scalar b = beta(rep.metric);
  const Scalar c = -b * b * Scalar(1, 4) - m2 * Scalar(1, 8) +
                   Scalar(static_cast<long>(rep.n()) - rep.metric.epsilon() - 2, 4);
  ScalarMatrix n = (g * g - g * b) * Scalar(1, 2) + one * c;
  return LOperator{rep.metric, std::make_shared<const Representation>(rep), {n, -g, one}, 2,
                   "quadratic(" + rep.label + ")"};
}

LOperator shifted(const LOperator& l, const Scalar& a) {
  LOperator out = l;
  out.coeffs.assign(l.coeffs.size() + 1, ScalarMatrix(l.space_dim(), l.space_dim()));
  for (std::size_t k = 0; k < l.coeffs.size(); ++k) {
    out.coeffs[k + 1] += l.coeffs[k];
    out.coeffs[k] -= l.coeffs[k] * a;
  }
  out.label = "shifted(" + l.label + ")";
  return out;
}

namespace {

struct RllFrame {
  std::vector<std::size_t> dims;
  PolyMatrix r12;
};

RllFrame rll_frame(const FundamentalR& r, std::size_t rep_dim) {
  const std::size_t n = r.metric().n();
  RllFrame f{{n, n, rep_dim}, PolyMatrix()};
  f.r12 = embed(r.at(Poly2::u() - Poly2::v()), f.dims, {0, 1});
  return f;
}

PolyMatrix rll_residual(const RllFrame& f, const PolyMatrix& lu, const PolyMatrix& lv) {
  const PolyMatrix l1 = embed(lu, f.dims, {0, 2});
  const PolyMatrix l2 = embed(lv, f.dims, {1, 2});
  return f.r12 * l1 * l2 - l2 * l1 * f.r12;
}

}  // namespace

PolyMatrix check_rll(const FundamentalR& r, const LOperator& l) {
  if (!(r.metric() == l.metric)) throw ShapeError("check_rll: metric mismatch");
  const RllFrame f = rll_frame(r, l.rep->dim);
  return rll_residual(f, l.at(Poly2::u()), l.at(Poly2::v()));
}

std::vector<bool> rll_mask(const LOperator& l) {
  const std::size_t n = l.metric.n();
  return lift_mask(l.rep->band(2 * l.gen_degree - 1), n * n);
}

ResidualReport rll_report(const FundamentalR& r, const LOperator& l) {
  const auto mask = rll_mask(l);
  return summarize(check_rll(r, l), &mask);
}

ScalarMatrix yangian_relation(const Metric& metric, std::size_t rep_dim, const ScalarMatrix& l1, const ScalarMatrix& l2,
                              int j, int k) {
  const std::size_t n = metric.n();
  const std::vector<std::size_t> dims{n, n, rep_dim};
  const std::size_t total = n * n * rep_dim;
  const IPK ipk = build_ipk(metric);
  const ScalarMatrix p = embed(ipk.p_op, dims, {0, 1});
  const ScalarMatrix kk = embed(ipk.k_op, dims, {0, 1});
  const Scalar b = beta(metric);
  const Scalar eps(metric.epsilon());

  auto gen = [&](int i, const std::vector<std::size_t>& sites) -> ScalarMatrix {
    if (i == 0) return ScalarMatrix::identity(total);
    if (i == 1) return embed(l1, dims, sites);
    if (i == 2) return embed(l2, dims, sites);
    return ScalarMatrix(total, total);
  };
  auto L1 = [&](int i) { return gen(i, {0, 2}); };
  auto L2 = [&](int i) { return gen(i, {1, 2}); };

  ScalarMatrix res = commutator(L1(k), L2(j - 2)) - commutator(L1(k - 1), L2(j - 1)) * Scalar(2) +
                     commutator(L1(k - 2), L2(j));
  res += (commutator(L1(k - 1), L2(j - 2)) - commutator(L1(k - 2), L2(j - 1))) * b;
  res += p * (L1(k - 1) * L2(j - 2) - L1(k - 2) * L2(j - 1) + L1(k - 2) * L2(j - 2) * b);
  res -= (L2(j - 2) * L1(k - 1) - L2(j - 1) * L1(k - 2) + L2(j - 2) * L1(k - 2) * b) * p;
  res += (kk * (L1(k - 2) * L2(j - 1) - L1(k - 1) * L2(j - 2)) - (L2(j - 1) * L1(k - 2) - L2(j - 2) * L1(k - 1)) * kk) * eps;
  return res;
}

ScalarMatrix linear_obstruction(const Representation& rep) {
  const std::size_t n = rep.n();
  const std::vector<std::size_t> dims{n, n, rep.dim};
  const ScalarMatrix g = generator_matrix(rep);
  const ScalarMatrix g1 = embed(g, dims, {0, 2}), g2 = embed(g, dims, {1, 2});
  const ScalarMatrix k12 = embed(build_ipk(rep.metric).k_op, dims, {0, 1});
  const Scalar b = beta(rep.metric);
  return k12 * (g1 * g2 + g2 * b) - (g2 * g1 + g2 * b) * k12;
}

// ------------------------------------------------------------ parameter solve

namespace {

/// Polynomial in the family parameters: exponent vector -> coefficient.
using Exp = std::vector<int>;
using MPoly = std::map<Exp, Scalar>;

void add_to(MPoly& a, const Exp& e, const Scalar& c) {
  Scalar& x = a[e];
  x += c;
  if (x.is_zero()) a.erase(e);
}

MPoly mul(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exp e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      add_to(out, e, ca * cb);
    }
  return out;
}

MPoly substitute(const MPoly& poly, std::size_t var, const MPoly& value) {
  MPoly out;
  for (const auto& [e, c] : poly) {
    Exp rest = e;
    rest[var] = 0;
    MPoly term{{rest, c}};
    for (int k = 0; k < e[var]; ++k) term = mul(term, value);
    for (const auto& [x, y] : term) add_to(out, x, y);
  }
  return out;
}

int degree(const Exp& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

std::string poly_string(const MPoly& poly, const std::vector<std::string>& names) {
  if (poly.empty()) return "0";
  std::string out;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t v = 0; v < names.size(); ++v)
      for (int k = 0; k < it->first[v]; ++k) mono += (mono.empty() ? "" : "*") + names[v];
    if (mono.empty()) out += it->second.to_string();
    else if (it->second.is_one()) out += mono;
    else out += "(" + it->second.to_string() + ")*" + mono;
  }
  return out;
}

}  // namespace

std::string ParameterSolution::to_string() const {
  if (kind == Kind::none) return "no admissible parameters";
  std::string out;
  for (const auto& [name, expr] : solved) out += (out.empty() ? "" : ", ") + name + " = " + expr;
  for (const auto& c : constraints) out += (out.empty() ? "" : ", ") + c;
  return out;
}

std::optional<Scalar> ParameterSolution::value(const std::string& name) const {
  for (const auto& [n, v] : values)
    if (n == name) return v;
  return std::nullopt;
}

ParameterSolution solve_rll_parameters(const FundamentalR& r, const Representation& rep, const AffineFamily& family) {
  const std::size_t nv = family.names.size();
  std::vector<std::function<PolyMatrix(const Poly2&)>> parts{family.base};
  std::vector<MPoly> weight{MPoly{{Exp(nv, 0), Scalar(1)}}};
  for (std::size_t k = 0; k < nv; ++k) {
    parts.push_back(family.directions[k]);
    Exp e(nv, 0);
    e[k] = 1;
    weight.push_back(MPoly{{e, Scalar(1)}});
  }

  const RllFrame frame = rll_frame(r, rep.dim);
  const std::size_t n = r.metric().n();
  const std::vector<bool> mask = lift_mask(rep.band(2 * family.gen_degree - 1), n * n);
  const Poly2 u = Poly2::u(), v = Poly2::v();
  std::vector<PolyMatrix> at_u, at_v;
  for (const auto& f : parts) {
    at_u.push_back(f(u));
    at_v.push_back(f(v));
  }

  std::map<std::pair<std::size_t, std::pair<int, int>>, MPoly> eqs;
  for (std::size_t x = 0; x < parts.size(); ++x)
    for (std::size_t y = 0; y < parts.size(); ++y) {
      const PolyMatrix res = rll_residual(frame, at_u[x], at_v[y]);
      const MPoly w = mul(weight[x], weight[y]);
      for (std::size_t i = 0; i < res.rows(); ++i)
        for (std::size_t j = 0; j < res.cols(); ++j) {
          if (!mask[j] || res(i, j).is_zero()) continue;
          for (const auto& t : res(i, j).terms()) {
            MPoly& e = eqs[{i * res.cols() + j, {t.du, t.dv}}];
            for (const auto& [ex, c] : w) add_to(e, ex, c * t.coeff);
          }
        }
    }

  ParameterSolution sol;
  sol.names = family.names;
  std::vector<MPoly> system;
  for (auto& [key, poly] : eqs)
    if (!poly.empty()) system.push_back(std::move(poly));
  sol.equations = system.size();

  std::map<std::size_t, MPoly> fixed;
  std::vector<std::size_t> remaining;
  for (std::size_t k = 0; k < nv; ++k) remaining.push_back(k);
  for (;;) {
    std::set<Exp> monos;
    for (const auto& e : system)
      for (const auto& [x, c] : e) monos.insert(x);
    std::vector<Exp> cols(monos.begin(), monos.end());
    std::stable_sort(cols.begin(), cols.end(), [](const Exp& a, const Exp& b) { return degree(a) > degree(b); });
    std::map<Exp, std::size_t> col_of;
    for (std::size_t k = 0; k < cols.size(); ++k) col_of[cols[k]] = k;

    std::set<std::string> seen;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& e : system) {
      std::vector<Scalar> row(cols.size(), Scalar(0));
      for (const auto& [x, c] : e) row[col_of[x]] = c;
      Scalar lead(0);
      for (const auto& c : row)
        if (!c.is_zero()) {
          lead = c;
          break;
        }
      std::string key;
      for (auto& c : row) {
        c /= lead;
        key += c.to_string() + ",";
      }
      if (seen.insert(key).second) rows.push_back(row);
    }
    ScalarMatrix a(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) a(i, j) = rows[i][j];
    const RowEchelon ech = row_reduce(a);

    std::vector<MPoly> reduced;
    std::optional<std::size_t> linear_var;
    MPoly linear_value;
    for (std::size_t rr = 0; rr < ech.pivots.size(); ++rr) {
      const Exp& pe = cols[ech.pivots[rr]];
      if (degree(pe) == 0) return sol;
      MPoly row;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!ech.reduced(rr, c).is_zero()) row[cols[c]] = ech.reduced(rr, c);
      if (degree(pe) == 1 && !linear_var) {
        linear_var = static_cast<std::size_t>(std::find(pe.begin(), pe.end(), 1) - pe.begin());
        for (const auto& [x, c] : row)
          if (x != pe) linear_value[x] = -c;
      }
      reduced.push_back(std::move(row));
    }
    if (linear_var) {
      for (auto& [var, expr] : fixed) expr = substitute(expr, *linear_var, linear_value);
      fixed[*linear_var] = linear_value;
      std::erase(remaining, *linear_var);
      std::vector<MPoly> next;
      for (const auto& e : reduced) {
        MPoly s = substitute(e, *linear_var, linear_value);
        if (!s.empty()) next.push_back(std::move(s));
      }
      system = std::move(next);
      continue;
    }
    for (const auto& [var, expr] : fixed) {
      sol.solved.emplace_back(family.names[var], poly_string(expr, family.names));
      if (expr.empty()) sol.values.emplace_back(family.names[var], Scalar(0));
      else if (expr.size() == 1 && degree(expr.begin()->first) == 0) sol.values.emplace_back(family.names[var], expr.begin()->second);
    }
    for (const auto& e : reduced) sol.constraints.push_back(poly_string(e, family.names) + " = 0");
    for (std::size_t v : remaining) sol.constraints.push_back(family.names[v] + " free");
    sol.kind = reduced.empty() && remaining.empty() ? ParameterSolution::Kind::unique : ParameterSolution::Kind::family;
    return sol;
  }
}

AffineFamily js_parameter_family(const Representation& rep) {
  const ScalarMatrix m = generator_matrix(rep);
  const ScalarMatrix one = ScalarMatrix::identity(m.rows());
  const ScalarMatrix m2 = m * m;
  AffineFamily f;
  f.names = {"s", "p", "sigma"};
  f.base = [one, m, m2](const Poly2& x) { return scale(one, x * x) + scale(m, x) + to_poly(m2); };
  f.directions = {[one](const Poly2& x) { return scale(one, -x); }, [one](const Poly2&) { return to_poly(one); },
                  [m](const Poly2&) { return to_poly(-m); }};
  return f;
}

AffineFamily quadratic_generator_family(const Representation& rep) {
  const ScalarMatrix g = generator_matrix(rep);
  const ScalarMatrix one = ScalarMatrix::identity(g.rows());
  const ScalarMatrix g2 = g * g;
  AffineFamily f;
  f.names = {"x1", "x2", "x3", "x4"};
  f.base = [one](const Poly2& x) { return scale(one, x * x); };
  f.directions = {[g](const Poly2& x) { return scale(g, x); }, [g2](const Poly2&) { return to_poly(g2); },
                  [g](const Poly2&) { return to_poly(g); }, [one](const Poly2&) { return to_poly(one); }};
  return f;
}

}  // namespace ylab
