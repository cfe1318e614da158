#include "involab/decompose.hpp"

#include "involab/errors.hpp"
#include "involab/pattern.hpp"

namespace involab {

namespace {

Permutation slice(const Permutation& p, int from, int to) {  // positions from..to inclusive
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(p(i));
  return standardize(v);
}

void append_shifted(std::vector<int>& out, const Permutation& block, int shift) {
  for (int x : block.values()) out.push_back(x + shift);
}

}  // namespace

BlockDecomposition block_decompose(const Permutation& p, DecomposeMode mode) {
  if (!p.is_involution()) throw DomainError("not an involution");
  const auto c = count_occurrences(p, PatternSpec::parse("1-3-2"), 2);
  if (mode == DecomposeMode::kAvoiding && c != 0) throw DomainError("contains 132");
  if (mode == DecomposeMode::kOneOccurrence && c != 1) throw DomainError("does not contain 132 exactly once");

  const int n = p.size();
  BlockDecomposition d;
  d.n = n;
  if (n == 0) return d;
  if (p(n) == n) {
    d.kind = BlockKind::kLastIsMax;
    d.j = n;
    d.inner = slice(p, 1, n - 1);
    return d;
  }
  const int j = p(n);
  d.j = j;
  if (mode == DecomposeMode::kOneOccurrence && n % 2 == 1 && j == (n + 1) / 2 && p(j - 1) == j - 1) {
    const int m = j - 1;
    d.kind = BlockKind::kCentralCycle;
    d.beta = slice(p, 1, m - 1);
    d.gamma = slice(p, m + 2, 2 * m);
  } else {
    d.kind = BlockKind::kSplit;
    if (2 * j > n) throw DomainError("no block structure");
    d.beta = slice(p, 1, j - 1);
    d.gamma = slice(p, j + 1, n - j);
    d.delta = slice(p, n - j + 1, n - 1);
  }
  if (reassemble(d) != p) throw DomainError("no block structure");
  return d;
}

Permutation reassemble(const BlockDecomposition& d) {
  const int n = d.n;
  std::vector<int> v;
  switch (d.kind) {
    case BlockKind::kLastIsMax:
      append_shifted(v, d.inner, 0);
      if (n > 0) v.push_back(n);
      break;
    case BlockKind::kSplit:
      append_shifted(v, d.beta, n - d.j);
      v.push_back(n);
      append_shifted(v, d.gamma, d.j);
      append_shifted(v, d.delta, 0);
      v.push_back(d.j);
      break;
    case BlockKind::kCentralCycle: {
      const int m = d.j - 1;
      append_shifted(v, d.beta, m + 1);
      v.push_back(m);
      v.push_back(n);
      append_shifted(v, d.gamma, 0);
      v.push_back(m + 1);
      break;
    }
  }
  if (static_cast<int>(v.size()) != n) throw DomainError("block sizes do not add up");
  return Permutation(std::move(v));
}

}  // namespace involab
