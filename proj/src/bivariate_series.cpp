#include "involab/series.hpp"

#include <algorithm>

#include "involab/errors.hpp"

namespace involab {

BivariateSeries::BivariateSeries(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 0 || ny < 0) throw DomainError("negative truncation order");
  c_.assign(static_cast<std::size_t>(nx + 1) * (ny + 1), Rational(0));
}

BivariateSeries BivariateSeries::constant(const Rational& c, int nx, int ny) {
  BivariateSeries s(nx, ny);
  s.set(0, 0, c);
  return s;
}

BivariateSeries BivariateSeries::monomial(const Rational& c, int a, int b, int nx, int ny) {
  BivariateSeries s(nx, ny);
  if (a <= nx && b <= ny) s.set(a, b, c);
  return s;
}

BivariateSeries BivariateSeries::from_x(const Series& s, int ny) {
  BivariateSeries r(s.order(), ny);
  for (int i = 0; i <= s.order(); ++i) r.set(i, 0, s[i]);
  return r;
}

Rational BivariateSeries::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i > nx_ || j > ny_) return 0;
  return at(i, j);
}

BivariateSeries BivariateSeries::truncate(int nx, int ny) const {
  if (nx > nx_ || ny > ny_) throw DomainError("cannot extend a truncated series");
  BivariateSeries r(nx, ny);
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j) r.set(i, j, at(i, j));
  return r;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  if (o.nx_ < nx_ || o.ny_ < ny_) *this = truncate(std::min(nx_, o.nx_), std::min(ny_, o.ny_));
  for (int i = 0; i <= nx_; ++i)
    for (int j = 0; j <= ny_; ++j) c_[index(i, j)] += o.at(i, j);
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
  if (o.nx_ < nx_ || o.ny_ < ny_) *this = truncate(std::min(nx_, o.nx_), std::min(ny_, o.ny_));
  for (int i = 0; i <= nx_; ++i)
    for (int j = 0; j <= ny_; ++j) c_[index(i, j)] -= o.at(i, j);
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const int nx = std::min(a.nx_, b.nx_), ny = std::min(a.ny_, b.ny_);
  BivariateSeries r(nx, ny);
  // sparse pass over b's nonzero terms
  std::vector<std::pair<int, int>> nz;
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j)
      if (sgn(b.at(i, j)) != 0) nz.emplace_back(i, j);
  mpq_class t;
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j) {
      const auto& av = a.at(i, j);
      if (sgn(av) == 0) continue;
      for (auto [k, l] : nz) {
        if (i + k > nx || j + l > ny) continue;
        mpq_mul(t.get_mpq_t(), av.get_mpq_t(), b.at(k, l).get_mpq_t());
        r.c_[r.index(i + k, j + l)] += t;
      }
    }
  return r;
}

BivariateSeries BivariateSeries::inverse() const {
  if (sgn(c_[0]) == 0) throw DomainError("division by a series with zero constant term");
  BivariateSeries r(nx_, ny_);
  const Rational inv0 = 1 / c_[0];
  std::vector<std::pair<int, int>> nz;
  for (int i = 0; i <= nx_; ++i)
    for (int j = 0; j <= ny_; ++j)
      if ((i || j) && sgn(at(i, j)) != 0) nz.emplace_back(i, j);
  // fill in graded lexicographic order so every dependency is ready
  for (int i = 0; i <= nx_; ++i)
    for (int j = 0; j <= ny_; ++j) {
      if (!i && !j) {
        r.c_[0] = inv0;
        continue;
      }
      Rational acc = 0;
      for (auto [k, l] : nz)
        if (k <= i && l <= j) acc += at(k, l) * r.at(i - k, j - l);
      r.c_[r.index(i, j)] = -acc * inv0;
    }
  return r;
}

BivariateSeries BivariateSeries::times_monomial(const Rational& c, int a, int b) const {
  BivariateSeries r(nx_, ny_);
  for (int i = 0; i + a <= nx_; ++i)
    for (int j = 0; j + b <= ny_; ++j) r.set(i + a, j + b, at(i, j) * c);
  return r;
}

Series BivariateSeries::at_y_equals_one() const {
  Series s(nx_);
  for (int i = 0; i <= nx_; ++i) {
    Rational t = 0;
    for (int j = 0; j <= ny_; ++j) t += at(i, j);
    s.set(i, t);
  }
  return s;
}

Series BivariateSeries::row(int i) const {
  Series s(ny_);
  for (int j = 0; j <= ny_; ++j) s.set(j, coefficient(i, j));
  return s;
}

bool BivariateSeries::is_nonnegative_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return sgn(v) >= 0 && v.get_den() == 1; });
}

bool BivariateSeries::operator==(const BivariateSeries& o) const {
  return nx_ == o.nx_ && ny_ == o.ny_ && c_ == o.c_;
}

}  // namespace involab
