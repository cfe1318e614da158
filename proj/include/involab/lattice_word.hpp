#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace involab {

enum class Step : char { Up = 'U', Down = 'D' };

class LatticeWord {
 public:
  LatticeWord() = default;
  explicit LatticeWord(std::vector<Step> steps) : s_(std::move(steps)) {}
  static LatticeWord parse(std::string_view text);  // over {U, D}

  int size() const { return static_cast<int>(s_.size()); }
  bool empty() const { return s_.empty(); }
  Step operator[](int i) const { return s_[i]; }  // 0-based
  const std::vector<Step>& steps() const { return s_; }

  int ups() const;
  int downs() const;
  int height() const { return ups() - downs(); }
  int min_height() const;  // over all prefixes, including the empty one
  std::string to_string() const;

  auto operator<=>(const LatticeWord&) const = default;

 private:
  std::vector<Step> s_;
};

struct Classification {
  bool dyck_prefix = false;
  bool dyck_word = false;
  bool bilateral = false;
  bool other() const { return !dyck_prefix && !dyck_word && !bilateral; }
};
Classification classify(const LatticeWord& w);

bool is_dyck_prefix(const LatticeWord& w);
bool is_bilateral(const LatticeWord& w);

// Indices of the p rising separators of a Dyck prefix of height p: the last
// Up step leaving each level 0..p-1.
std::vector<int> rising_separators(const LatticeWord& w);
// w = w_0 U w_1 ... U w_p, each w_i a Dyck word.
std::vector<LatticeWord> dyck_factors(const LatticeWord& w);

LatticeWord xi(const LatticeWord& w);
LatticeWord xi_inv(const LatticeWord& b);

std::int64_t right_dyck_steps(const LatticeWord& w);
int double_step_count(const LatticeWord& b);
// Negated minimum prefix height.
int min_nonpositive_height(const LatticeWord& b);

std::pair<LatticeWord, LatticeWord> split_uv(const LatticeWord& b);
// Inverse of split_uv for a bilateral word of length |u|+|v|.
LatticeWord merge_uv(const LatticeWord& u, const LatticeWord& v);

// All words of length n (2^n of them); used by exhaustive checks.
std::vector<LatticeWord> all_words(int n);

}  // namespace involab
