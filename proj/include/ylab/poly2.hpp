#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ylab/scalar.hpp"

namespace ylab {

/// Polynomial in the two spectral variables u, v with Scalar coefficients.
///
/// Terms are kept sorted by (deg_u, deg_v) with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
class Poly2 {
 public:
  struct Term {
    std::uint16_t du = 0;
    std::uint16_t dv = 0;
    Scalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly2() = default;
  Poly2(const Scalar& c);  // NOLINT(google-explicit-constructor)
  Poly2(long c) : Poly2(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly2 u();
  static Poly2 v();
  static Poly2 monomial(std::uint16_t du, std::uint16_t dv, const Scalar& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of u^du v^dv (zero when absent).
  Scalar coeff(std::uint16_t du, std::uint16_t dv) const;
  /// Constant term.
  Scalar constant() const { return coeff(0, 0); }

  int degree_u() const;
  int degree_v() const;
  int total_degree() const;

  Scalar evaluate(const Scalar& u, const Scalar& v) const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const Scalar& s);

  /// this += a * b.
  void add_product(const Poly2& a, const Poly2& b);
  /// this += s * a.
  void add_scaled(const Scalar& s, const Poly2& a);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Scalar& s) { return a *= s; }
  friend Poly2 operator*(const Scalar& s, Poly2 a) { return a *= s; }
  Poly2 operator-() const;

  friend bool operator==(const Poly2&, const Poly2&) = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace ylab
