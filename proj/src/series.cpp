#include "involab/series.hpp"

#include <algorithm>

#include "involab/errors.hpp"

namespace involab {

Series::Series(int order) {
  if (order < 0) throw DomainError("negative truncation order");
  c_.assign(order + 1, Rational(0));
}

Series::Series(int order, std::vector<Rational> coeffs) : Series(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) {
    c_[i] = coeffs[i];
    c_[i].canonicalize();  // mpq_class(a, b) is not reduced on construction
  }
}

Series Series::constant(const Rational& c, int order) {
  Series s(order);
  s.c_[0] = c;
  s.c_[0].canonicalize();
  return s;
}

Series Series::monomial(const Rational& c, int exponent, int order) {
  Series s(order);
  if (exponent >= 0 && exponent <= order) {
    s.c_[exponent] = c;
    s.c_[exponent].canonicalize();
  }
  return s;
}

Series Series::geometric(const Rational& a, int m, int order) {
  Series s(order);
  Rational p = 1;
  for (int e = 0; e <= order; e += m) {
    s.c_[e] = p;
    p *= a;
    if (m == 0) break;
  }
  return s;
}

Rational Series::coefficient(int n) const {
  if (n < 0 || n > order()) return 0;
  return c_[n];
}

void Series::set(int n, const Rational& v) {
  if (n < 0 || n > order()) throw DomainError("coefficient index past truncation order");
  c_[n] = v;
  c_[n].canonicalize();
}

Series& Series::operator+=(const Series& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Series& Series::operator*=(const Rational& a) {
  for (auto& v : c_) v *= a;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      if (sgn(b.c_[j]) != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

Series Series::operator-() const {
  Series r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Series Series::inverse() const {
  if (sgn(c_[0]) == 0) throw DomainError("division by a series with zero constant term");
  const int n = order();
  Series r(n);
  const Rational inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j)
      if (sgn(c_[j]) != 0) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc * inv0;
  }
  return r;
}

Series Series::sqrt() const {
  if (c_[0] != 1) throw DomainError("sqrt needs constant term 1");
  const int n = order();
  Series s(n);
  s.c_[0] = 1;
  // one new coefficient per step: 2 s_k = f_k - sum_{0<i<k} s_i s_{k-i}
  for (int k = 1; k <= n; ++k) {
    Rational acc = c_[k];
    for (int i = 1; i < k; ++i) acc -= s.c_[i] * s.c_[k - i];
    s.c_[k] = acc / 2;
  }
  return s;
}

Series Series::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Series r = constant(1, order());
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Series Series::substitute(const Rational& a, int m) const {
  if (m < 1) throw DomainError("substitution needs a positive exponent");
  Series r(order());
  Rational p = 1;
  for (int i = 0; i * m <= order(); ++i) {
    r.c_[i * m] = c_[i] * p;
    p *= a;
  }
  return r;
}

Series Series::even_part() const {
  Series r = *this;
  for (int i = 1; i <= order(); i += 2) r.c_[i] = 0;
  return r;
}

Series Series::odd_part() const {
  Series r = *this;
  for (int i = 0; i <= order(); i += 2) r.c_[i] = 0;
  return r;
}

Series Series::shift(int k) const {
  Series r(order());
  for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
  return r;
}

Series Series::divide_by_x_power(int k) const {
  if (k > order()) throw DomainError("nothing left after dividing by x^k");
  for (int i = 0; i < k; ++i)
    if (sgn(c_[i]) != 0) throw DomainError("series not divisible by x^" + std::to_string(k));
  Series r(order() - k);
  for (int i = 0; i <= r.order(); ++i) r.c_[i] = c_[i + k];
  return r;
}

Series Series::truncate(int order) const {
  if (order > this->order()) throw DomainError("cannot extend a truncated series");
  return Series(order, {c_.begin(), c_.begin() + order + 1});
}

bool Series::is_nonnegative_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return sgn(v) >= 0 && v.get_den() == 1; });
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

std::vector<std::string> Series::to_strings() const {
  std::vector<std::string> out;
  for (const auto& v : c_) out.push_back(v.get_str());
  return out;
}

Series catalan_series(int order) {
  const Series x = Series::x(order);
  Series c = Series::constant(1, order);
  for (int i = 0; i < order; ++i) c = Series::constant(1, order) + x * c * c;
  return c;
}

Series catalan_series_by_sqrt(int order) {
  // (1 - sqrt(1-4x)) / 2x, computed one order higher then divided by x
  const int n = order + 1;
  Series root = (Series::constant(1, n) - Series::monomial(4, 1, n)).sqrt();
  Series num = Series::constant(1, n) - root;
  return (num * Rational(1, 2)).divide_by_x_power(1);
}

Series central_binomial_series(int order) {
  Series root = (Series::constant(1, order) - Series::monomial(4, 2, order)).sqrt();
  Series den = Series::constant(1, order) - Series::monomial(2, 1, order) + root;
  return Series::constant(2, order) / den;
}

Series fibonacci_series(int order) {
  return (Series::constant(1, order) - Series::monomial(1, 1, order) - Series::monomial(1, 2, order)).inverse();
}

}  // namespace involab
