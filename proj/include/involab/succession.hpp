#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace involab {

using Label = std::vector<int>;
using Count = std::uint64_t;

// Rules receive the parent's level (object size) because the inversion and
// rise systems use it.
struct SuccessionSystem {
  std::string name;
  Label root;
  std::function<std::vector<Label>(const Label&, int level)> rules;
};

SuccessionSystem fixed_point_system();   // (p) -> (p+1), (p-1)
SuccessionSystem inversion_system();     // (p,i)
SuccessionSystem rise_system();          // (p,r,b)
SuccessionSystem bounded_system(int k);  // (p) with 0 <= p <= k-1

std::map<Label, Count> level_counts(const SuccessionSystem& sys, int n);
Count level_total(const SuccessionSystem& sys, int n);

mpz_class binomial(long n, long k);  // zero outside 0 <= k <= n
mpz_class ballot_count(int n, int p);

// a'(n,p,i), dense over n <= n_max.
class InversionTable {
 public:
  explicit InversionTable(int n_max);
  int n_max() const { return n_max_; }
  Count at(int n, int p, long i) const;
  std::string to_csv() const;

 private:
  int n_max_;
  std::vector<std::vector<std::vector<Count>>> t_;  // [n][p][i]
};

// a''(n,p,r,b), dense over n <= n_max.
class RiseTable {
 public:
  explicit RiseTable(int n_max);
  int n_max() const { return n_max_; }
  Count at(int n, int p, int r, int b) const;
  std::string to_csv() const;

 private:
  int n_max_;
  std::vector<std::vector<std::vector<std::array<Count, 2>>>> t_;  // [n][p][r][b]
};

InversionTable dp_inversions(int n);
RiseTable dp_rises(int n);

}  // namespace involab
