#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace involab {

using Rational = mpq_class;

// Power series truncated after x^order, exact rational coefficients.
class Series {
 public:
  explicit Series(int order = 0);
  Series(int order, std::vector<Rational> coeffs);  // missing coefficients are 0
  static Series constant(const Rational& c, int order);
  static Series monomial(const Rational& c, int exponent, int order);  // c x^exponent
  static Series x(int order) { return monomial(1, 1, order); }
  static Series geometric(const Rational& a, int m, int order);  // 1/(1 - a x^m)

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int n) const { return c_[n]; }
  Rational coefficient(int n) const;  // zero past the order
  void set(int n, const Rational& v);
  const std::vector<Rational>& coefficients() const { return c_; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& a);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& k) { return a *= k; }
  friend Series operator*(const Rational& k, Series a) { return a *= k; }
  friend Series operator/(const Series& a, const Series& b);
  Series operator-() const;

  Series inverse() const;  // needs a nonzero constant term
  Series sqrt() const;     // needs constant term 1
  Series pow(int e) const;
  // f(a x^m); order is kept, terms past it are dropped.
  Series substitute(const Rational& a, int m) const;
  Series even_part() const;
  Series odd_part() const;
  Series shift(int k) const;              // times x^k, same order
  Series divide_by_x_power(int k) const;  // exact; order drops by k
  Series truncate(int order) const;

  bool is_nonnegative_integral() const;
  bool is_zero() const;
  std::vector<std::string> to_strings() const;

  bool operator==(const Series& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

Series catalan_series(int order);         // fixed point of C = 1 + x C^2
Series catalan_series_by_sqrt(int order);  // (1 - sqrt(1-4x)) / 2x
Series central_binomial_series(int order);  // 2 / (1 - 2x + sqrt(1 - 4x^2))
Series fibonacci_series(int order);       // 1 / (1 - x - x^2)

// Bivariate series truncated to the box x^0..x^nx, y^0..y^ny.
class BivariateSeries {
 public:
  BivariateSeries(int nx = 0, int ny = 0);
  static BivariateSeries constant(const Rational& c, int nx, int ny);
  static BivariateSeries monomial(const Rational& c, int a, int b, int nx, int ny);
  static BivariateSeries from_x(const Series& s, int ny);  // no y dependence

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  const Rational& at(int i, int j) const { return c_[index(i, j)]; }
  Rational coefficient(int i, int j) const;
  void set(int i, int j, const Rational& v) {
    c_[index(i, j)] = v;
    c_[index(i, j)].canonicalize();
  }

  BivariateSeries& operator+=(const BivariateSeries& o);
  BivariateSeries& operator-=(const BivariateSeries& o);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  BivariateSeries inverse() const;  // needs a nonzero constant term
  BivariateSeries times_monomial(const Rational& c, int a, int b) const;
  BivariateSeries truncate(int nx, int ny) const;

  // Sum over the y exponents kept in the box.
  Series at_y_equals_one() const;
  Series row(int i) const;  // coefficients of x^i as a series in y
  bool is_nonnegative_integral() const;

  bool operator==(const BivariateSeries& o) const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * (ny_ + 1) + j; }
  int nx_, ny_;
  std::vector<Rational> c_;
};

}  // namespace involab
