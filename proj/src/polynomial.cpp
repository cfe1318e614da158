#include "involab/polynomial.hpp"

#include <algorithm>

#include "involab/errors.hpp"

namespace involab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int exponent) {
  std::vector<Rational> v(exponent + 1, Rational(0));
  v[exponent] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[i];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& k, const Polynomial& a) {
  auto v = a.c_;
  for (auto& x : v) x *= k;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  std::vector<Rational> q(std::max(0, degree() - d.degree() + 1), Rational(0));
  for (int i = degree(); i >= d.degree(); --i) {
    if (sgn(rem[i]) == 0) continue;
    const Rational f = rem[i] / d.leading();
    q[i - d.degree()] = f;
    for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= f * d.c_[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::substitute(const Rational& a, int m) const {
  if (m < 0) throw DomainError("negative substitution exponent");
  if (is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree()) * m + 1, Rational(0));
  Rational p = 1;
  for (int i = 0; i <= degree(); ++i) {
    v[static_cast<std::size_t>(i) * m] += c_[i] * p;
    p *= a;
  }
  return Polynomial(std::move(v));
}

Series Polynomial::to_series(int order) const { return Series(order, c_); }

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    const bool one = a == 1;
    if (i == 0 || !one) s += a.get_str();
    if (i > 0) {
      if (!one) s += '*';
      s += var;
      if (i > 1) s += '^' + std::to_string(i);
    }
  }
  return s;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (1 / a.leading()) * a;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Rational scale = sgn(den_.coefficient(0)) != 0 ? den_.coefficient(0) : den_.leading();
  num_ = (1 / scale) * num_;
  den_ = (1 / scale) * den_;
}

RationalFunction RationalFunction::x_power(int k) {
  if (k >= 0) return RationalFunction(Polynomial::monomial(1, k));
  return RationalFunction(Polynomial::constant(1), Polynomial::monomial(1, -k));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw DomainError("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::substitute(const Rational& a, int m) const {
  return RationalFunction(num_.substitute(a, m), den_.substitute(a, m));
}

RationalFunction RationalFunction::even_part() const {
  return (*this + substitute(-1, 1)) * constant(Rational(1, 2));
}

RationalFunction RationalFunction::odd_part() const {
  return (*this - substitute(-1, 1)) * constant(Rational(1, 2));
}

Series RationalFunction::to_series(int order) const {
  if (sgn(den_.coefficient(0)) == 0) throw DomainError("denominator vanishes at 0");
  return num_.to_series(order) / den_.to_series(order);
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial::constant(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace involab
