#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "involab/pattern.hpp"
#include "involab/permutation.hpp"

namespace involab {

enum class ObjectClass { Permutations, Involutions };

enum class StatKind { FixedPoints, Inversions, Parity, Rises, RtlMaxima, LtrMinima, Occurrences };

struct Statistic {
  StatKind kind = StatKind::FixedPoints;
  PatternSpec pattern;  // for Occurrences
  static Statistic parse(std::string_view text);  // "rises", "occurrences:12-43", ...
  std::string name() const;
};

struct ContainConstraint {
  PatternSpec pattern;
  int count = 0;
};

struct Limits {
  int involutions = 12;
  int permutations = 9;
};

struct CountQuery {
  ObjectClass cls = ObjectClass::Involutions;
  int n = 0;
  std::vector<PatternSpec> avoid;
  std::vector<ContainConstraint> contain;
  std::vector<Statistic> stats;
  Limits limits;
};

// Throws LimitExceeded past the configured limit.
void for_each_object(const CountQuery& q, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> enumerate(const CountQuery& q);
bool qualifies(const Permutation& p, const CountQuery& q);

using StatTuple = std::vector<std::int64_t>;
using Distribution = std::map<StatTuple, std::uint64_t>;

std::int64_t evaluate(const Statistic& s, const Permutation& p);

// Joint tally of q.stats over qualifying objects.  The enumeration is split
// by the image of position 1 over `workers` threads (0 = hardware).
Distribution distribution(const CountQuery& q, int workers = 0);
std::uint64_t count(const CountQuery& q, int workers = 0);

// Sum out every statistic not listed in keep (indices into the tuple).
Distribution project(const Distribution& d, const std::vector<int>& keep);

}  // namespace involab
