#include "ylab/poly2.hpp"

#include <algorithm>

namespace ylab {

namespace {

bool key_less(const Poly2::Term& a, const Poly2::Term& b) {
  return a.du != b.du ? a.du < b.du : a.dv < b.dv;
}

bool same_key(const Poly2::Term& a, const Poly2::Term& b) { return a.du == b.du && a.dv == b.dv; }

// Merges `src` (negated when asked) into the sorted term list `dst`.
void merge_into(std::vector<Poly2::Term>& dst, const std::vector<Poly2::Term>& src, bool negate) {
  if (src.empty()) return;
  if (dst.empty()) {
    dst = src;
    if (negate)
      for (auto& t : dst) t.coeff = -t.coeff;
    return;
  }
  std::vector<Poly2::Term> out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && key_less(*a, *b))) {
      out.push_back(std::move(*a++));
    } else if (a == dst.end() || key_less(*b, *a)) {
      out.push_back(*b);
      if (negate) out.back().coeff = -out.back().coeff;
      ++b;
    } else {
      Poly2::Term t = std::move(*a++);
      if (negate)
        t.coeff -= b->coeff;
      else
        t.coeff += b->coeff;
      ++b;
      if (!t.coeff.is_zero()) out.push_back(std::move(t));
    }
  }
  dst = std::move(out);
}

// Adds a*b * u^du v^dv to the sorted term list.
void accumulate(std::vector<Poly2::Term>& dst, std::uint16_t du, std::uint16_t dv, const Scalar& a, const Scalar& b) {
  Poly2::Term key{du, dv, {}};
  auto it = std::lower_bound(dst.begin(), dst.end(), key, key_less);
  if (it != dst.end() && same_key(*it, key)) {
    it->coeff.add_product(a, b);
    if (it->coeff.is_zero()) dst.erase(it);
  } else {
    key.coeff = a * b;
    if (!key.coeff.is_zero()) dst.insert(it, std::move(key));
  }
}

}  // namespace

Poly2::Poly2(const Scalar& c) {
  if (!c.is_zero()) terms_.push_back({0, 0, c});
}

Poly2 Poly2::u() { return monomial(1, 0, Scalar(1)); }
Poly2 Poly2::v() { return monomial(0, 1, Scalar(1)); }

Poly2 Poly2::monomial(std::uint16_t du, std::uint16_t dv, const Scalar& c) {
  Poly2 p;
  if (!c.is_zero()) p.terms_.push_back({du, dv, c});
  return p;
}

bool Poly2::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].du == 0 && terms_[0].dv == 0); }

Scalar Poly2::coeff(std::uint16_t du, std::uint16_t dv) const {
  Term key{du, dv, {}};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
  if (it != terms_.end() && same_key(*it, key)) return it->coeff;
  return Scalar(0);
}

int Poly2::degree_u() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.du);
  return d;
}

int Poly2::degree_v() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.dv);
  return d;
}

int Poly2::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.du + t.dv);
  return d;
}

Scalar Poly2::evaluate(const Scalar& u, const Scalar& v) const {
  Scalar acc(0);
  for (const auto& t : terms_) {
    Scalar term = t.coeff;
    for (int k = 0; k < t.du; ++k) term *= u;
    for (int k = 0; k < t.dv; ++k) term *= v;
    acc += term;
  }
  return acc;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  merge_into(terms_, o.terms_, false);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  merge_into(terms_, o.terms_, true);
  return *this;
}

Poly2& Poly2::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& o) {
  *this = *this * o;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  out.add_product(a, b);
  return out;
}

void Poly2::add_product(const Poly2& a, const Poly2& b) {
  if (a.terms_.empty() || b.terms_.empty()) return;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    const auto& x = a.terms_[0];
    const auto& y = b.terms_[0];
    accumulate(terms_, x.du + y.du, x.dv + y.dv, x.coeff, y.coeff);
    return;
  }
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) accumulate(terms_, x.du + y.du, x.dv + y.dv, x.coeff, y.coeff);
}

void Poly2::add_scaled(const Scalar& s, const Poly2& a) {
  if (s.is_zero()) return;
  for (const auto& x : a.terms_) accumulate(terms_, x.du, x.dv, s, x.coeff);
}

Poly2 Poly2::operator-() const {
  Poly2 p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::vector<std::string> factors;
    if (!t.coeff.is_one() || t.du + t.dv == 0)
      factors.push_back(t.coeff.is_real() ? t.coeff.to_string() : "(" + t.coeff.to_string() + ")");
    if (t.du > 0) factors.push_back(t.du == 1 ? "u" : "u^" + std::to_string(t.du));
    if (t.dv > 0) factors.push_back(t.dv == 1 ? "v" : "v^" + std::to_string(t.dv));
    if (!out.empty()) out += " + ";
    for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  }
  return out;
}

}  // namespace ylab
