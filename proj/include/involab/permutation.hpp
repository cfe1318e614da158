#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace involab {

// One-line notation, positions and values are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  // "4 3 5 1 2" or the compact "43512" (single digits only).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  int operator()(int pos) const { return v_[pos - 1]; }
  std::span<const int> values() const { return v_; }

  Permutation inverse() const;
  bool is_involution() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> v_;
};

// Relabel distinct integers by rank, keeping their order.
Permutation standardize(std::span<const int> letters);

std::int64_t inversions(const Permutation& p);
int rises(const Permutation& p);
int descents(const Permutation& p);
int fixed_points(const Permutation& p);
std::vector<int> fixed_point_list(const Permutation& p);
int rtl_maxima(const Permutation& p);
std::vector<int> rtl_maxima_values(const Permutation& p);  // left to right
int ltr_minima(const Permutation& p);
bool is_even(const Permutation& p);
enum class Parity { Even, Odd };
Parity parity(const Permutation& p);

struct Statistics {
  std::int64_t inversions = 0;
  int rises = 0;
  int descents = 0;
  int fixed_points = 0;
  int rtl_maxima = 0;
  int ltr_minima = 0;
};
Statistics statistics(const Permutation& p);

}  // namespace involab
