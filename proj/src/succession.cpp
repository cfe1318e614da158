#include "involab/succession.hpp"

#include <sstream>

#include "involab/errors.hpp"

namespace involab {

SuccessionSystem fixed_point_system() {
  return {"fixed-points", {0}, [](const Label& l, int) {
            const int p = l[0];
            if (p == 0) return std::vector<Label>{{1}};
            return std::vector<Label>{{p + 1}, {p - 1}};
          }};
}

SuccessionSystem inversion_system() {
  return {"inversions", {0, 0}, [](const Label& l, int n) {
            const int p = l[0], i = l[1];
            if (p == 0) return std::vector<Label>{{1, i + n}};
            return std::vector<Label>{{p + 1, i + n - p}, {p - 1, i + n - p + 1}};
          }};
}

SuccessionSystem rise_system() {
  return {"rises", {0, 0, 0}, [](const Label& l, int) {
            const int p = l[0], r = l[1], b = l[2];
            if (p == 0) return std::vector<Label>{{1, r + b, 1}};
            return std::vector<Label>{{p + 1, r + b, 1}, {p - 1, r + 1 - b, 0}};
          }};
}

SuccessionSystem bounded_system(int k) {
  if (k < 2) throw DomainError("bounded system needs k >= 2");
  return {"bounded-" + std::to_string(k), {0}, [k](const Label& l, int) {
            const int p = l[0];
            std::vector<Label> out;
            if (p + 1 <= k - 1) out.push_back({p + 1});
            if (p >= 1) out.push_back({p - 1});
            return out;
          }};
}

std::map<Label, Count> level_counts(const SuccessionSystem& sys, int n) {
  std::map<Label, Count> cur{{sys.root, 1}};
  for (int level = 0; level < n; ++level) {
    std::map<Label, Count> next;
    for (const auto& [label, c] : cur)
      for (auto& child : sys.rules(label, level)) next[child] += c;
    cur = std::move(next);
  }
  return cur;
}

Count level_total(const SuccessionSystem& sys, int n) {
  Count t = 0;
  for (const auto& [label, c] : level_counts(sys, n)) t += c;
  return t;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class ballot_count(int n, int p) {
  if (p < 0 || p > n || (n - p) % 2) return 0;
  const int h = (n + p) / 2;
  return binomial(n, h) - binomial(n, h + 1);
}

InversionTable::InversionTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw DomainError("negative size");
  t_.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    t_[n].assign(n + 1, std::vector<Count>(static_cast<std::size_t>(n) * (n - 1) / 2 + 1, 0));
  }
  t_[0][0][0] = 1;
  for (int n = 1; n <= n_max; ++n)
    for (int p = 0; p <= n; ++p)
      for (long i = 0; i < static_cast<long>(t_[n][p].size()); ++i)
        t_[n][p][i] = at(n - 1, p - 1, i + p - n) + at(n - 1, p + 1, i + p - n + 1);
}

Count InversionTable::at(int n, int p, long i) const {
  if (n < 0 || n > n_max_ || p < 0 || p > n || i < 0) return 0;
  if (i >= static_cast<long>(t_[n][p].size())) return 0;
  return t_[n][p][i];
}

std::string InversionTable::to_csv() const {
  std::ostringstream out;
  out << "n,p,i,count\n";
  for (int n = 0; n <= n_max_; ++n)
    for (int p = 0; p <= n; ++p)
      for (std::size_t i = 0; i < t_[n][p].size(); ++i)
        if (t_[n][p][i]) out << n << ',' << p << ',' << i << ',' << t_[n][p][i] << '\n';
  return out.str();
}

RiseTable::RiseTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw DomainError("negative size");
  t_.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    t_[n].assign(n + 1, std::vector<std::array<Count, 2>>(n + 1, {0, 0}));
  t_[0][0][0][0] = 1;
  for (int n = 1; n <= n_max; ++n)
    for (int p = 0; p <= n; ++p)
      for (int r = 0; r <= n; ++r)
        for (int b = 0; b < 2; ++b)
          t_[n][p][r][b] = at(n - 1, p + 1 - 2 * b, r, 1 - b) + at(n - 1, p + 1 - 2 * b, r - 1, b);
}

Count RiseTable::at(int n, int p, int r, int b) const {
  if (n < 0 || n > n_max_ || p < 0 || p > n || r < 0 || r > n || b < 0 || b > 1) return 0;
  return t_[n][p][r][b];
}

std::string RiseTable::to_csv() const {
  std::ostringstream out;
  out << "n,p,r,b,count\n";
  for (int n = 0; n <= n_max_; ++n)
    for (int p = 0; p <= n; ++p)
      for (int r = 0; r <= n; ++r)
        for (int b = 0; b < 2; ++b)
          if (t_[n][p][r][b]) out << n << ',' << p << ',' << r << ',' << b << ',' << t_[n][p][r][b] << '\n';
  return out.str();
}

InversionTable dp_inversions(int n) { return InversionTable(n); }
RiseTable dp_rises(int n) { return RiseTable(n); }

}  // namespace involab
