#include "involab/polynomial.hpp"

#include "involab/errors.hpp"

namespace involab {

Polynomial chebyshev_U(int r) {
  if (r < 0) throw DomainError("negative Chebyshev index");
  Polynomial a = Polynomial::constant(1);
  if (r == 0) return a;
  Polynomial b = Polynomial::monomial(2, 1);
  const Polynomial two_t = Polynomial::monomial(2, 1);
  for (int i = 2; i <= r; ++i) {
    Polynomial c = two_t * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

namespace {

// V_m(s) = s^m U_m(1/(2s)), a polynomial in s.
Polynomial reciprocal_numerator(int m) {
  const Polynomial u = chebyshev_U(m);
  std::vector<Rational> v(m + 1, Rational(0));
  Rational half_pow = 1;
  for (int i = 0; i <= m; ++i) {
    v[m - i] = u.coefficient(i) * half_pow;
    half_pow /= 2;
  }
  return Polynomial(std::move(v));
}

}  // namespace

RationalFunction chebyshev_U_reciprocal(int m) {
  return RationalFunction(reciprocal_numerator(m), Polynomial::monomial(1, m));
}

RationalFunction r_k(int k) {
  if (k < 0) throw DomainError("negative index");
  RationalFunction r;  // R_0 = 0
  const RationalFunction one = RationalFunction::constant(1);
  const RationalFunction x = RationalFunction::x_power(1);
  for (int i = 1; i <= k; ++i) r = one / (one - x * r);
  return r;
}

RationalFunction r_k_from_chebyshev(int k) {
  if (k < 1) throw DomainError("R_k needs k >= 1");
  // U_{k-1}(1/(2s)) / (s U_k(1/(2s))) = V_{k-1}(s) / V_k(s), even in s
  auto halve = [](const Polynomial& p) {
    std::vector<Rational> v;
    for (int i = 0; i <= p.degree(); i += 2) v.push_back(p.coefficient(i));
    for (int i = 1; i <= p.degree(); i += 2)
      if (sgn(p.coefficient(i)) != 0) throw DomainError("unexpected odd term");
    return Polynomial(std::move(v));
  };
  return RationalFunction(halve(reciprocal_numerator(k - 1)), halve(reciprocal_numerator(k)));
}

RationalFunction r_k_even(int k) { return r_k(k).even_part(); }
RationalFunction r_k_odd(int k) { return r_k(k).odd_part(); }

}  // namespace involab
