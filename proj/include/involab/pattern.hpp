#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "involab/permutation.hpp"

namespace involab {

// A pattern with optional adjacency requirements.  adjacent[i] says letters
// i and i+1 must sit in consecutive positions.  Text form: "1-3-2" is
// classical, "12-43" glues 1,2 and 4,3.
class PatternSpec {
 public:
  PatternSpec() = default;
  PatternSpec(Permutation letters, std::vector<bool> adjacent);

  static PatternSpec classical(const Permutation& letters);
  static PatternSpec parse(std::string_view text);

  static PatternSpec increasing(int k);     // 12...k
  static PatternSpec swap_front(int k);     // 2134...k
  static PatternSpec rotate_left(int k);    // 23...k1
  static PatternSpec rotation(int k, int d);  // (d+1)(d+2)...k 1 2...d

  int size() const { return letters_.size(); }
  const Permutation& letters() const { return letters_; }
  const std::vector<bool>& adjacency() const { return adjacent_; }
  bool is_classical() const;
  std::string to_string() const;

  bool operator==(const PatternSpec&) const = default;

 private:
  Permutation letters_;
  std::vector<bool> adjacent_;
};

// Occurrences of the pattern in p.  With limit > 0 counting stops once the
// count reaches limit.
std::int64_t count_occurrences(const Permutation& p, const PatternSpec& t, std::int64_t limit = 0);
bool contains(const Permutation& p, const PatternSpec& t);
bool avoids(const Permutation& p, const PatternSpec& t);
bool avoids_all(const Permutation& p, const std::vector<PatternSpec>& ts);

}  // namespace involab
