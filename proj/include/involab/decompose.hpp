#pragma once

#include "involab/permutation.hpp"

namespace involab {

enum class DecomposeMode {
  kAvoiding,       // p avoids 132
  kOneOccurrence,  // p contains 132 exactly once
};

enum class BlockKind {
  kLastIsMax,     // p = (inner, n)
  kSplit,         // p = (beta, n, gamma, delta, j), delta = beta^-1
  kCentralCycle,  // n = 2m+1, p = (beta, m, n, gamma, m+1), gamma = beta^-1
};

// Blocks are stored standardized.
struct BlockDecomposition {
  BlockKind kind = BlockKind::kLastIsMax;
  int n = 0;
  int j = 0;  // position of n
  Permutation inner;
  Permutation beta;
  Permutation gamma;
  Permutation delta;
};

// Throws DomainError unless p is an involution matching the mode.
BlockDecomposition block_decompose(const Permutation& p, DecomposeMode mode);
Permutation reassemble(const BlockDecomposition& d);

}  // namespace involab
