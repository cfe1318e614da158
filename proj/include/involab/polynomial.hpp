#pragma once

#include <string>
#include <utility>
#include <vector>

#include "involab/series.hpp"

namespace involab {

// Dense polynomial, no trailing zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int exponent);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(int i) const;
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& k, const Polynomial& a);
  Polynomial operator-() const;

  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial substitute(const Rational& a, int m) const;  // p(a x^m)
  Series to_series(int order) const;
  std::string to_string(char var = 'x') const;

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);  // monic

// num/den kept reduced; den is normalized to constant term 1 when that term
// is nonzero, else to a monic leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial::constant(1)) {}  // NOLINT
  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }
  static RationalFunction x_power(int k);  // x^k, k may be negative

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }

  RationalFunction substitute(const Rational& a, int m) const;  // f(a x^m)
  RationalFunction even_part() const;                           // (f(x) + f(-x)) / 2
  RationalFunction odd_part() const;
  Series to_series(int order) const;  // needs den(0) != 0
  std::string to_string() const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  Polynomial num_, den_;
};

// U_r(t) by U_r = 2t U_{r-1} - U_{r-2}.
Polynomial chebyshev_U(int r);
// U_m(1/(2x)) as a rational function of x.
RationalFunction chebyshev_U_reciprocal(int m);
// R_k by R_k = 1/(1 - x R_{k-1}), R_0 = 0.
RationalFunction r_k(int k);
// R_k from the quotient of Chebyshev polynomials at 1/(2 sqrt x).
RationalFunction r_k_from_chebyshev(int k);
// R^e_k(x), R^o_k(x)
RationalFunction r_k_even(int k);
RationalFunction r_k_odd(int k);

}  // namespace involab
