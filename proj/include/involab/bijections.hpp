#pragma once

#include <string>
#include <utility>
#include <vector>

#include "involab/lattice_word.hpp"
#include "involab/permutation.hpp"

namespace involab {

enum class GrowthStep { InsertFixedPoint, FixedPointToCycle };

// Children of a 132-avoiding involution / Dyck prefix in the shared
// generating tree.
Permutation grow_involution(const Permutation& p, GrowthStep s);
LatticeWord grow_word(const LatticeWord& w, GrowthStep s);

// Parent and the step that produced the input.  Input must be nonempty.
std::pair<Permutation, GrowthStep> undo_involution_growth(const Permutation& p);
std::pair<LatticeWord, GrowthStep> undo_word_growth(const LatticeWord& w);

// Steps from the root (empty object) down to the input.
std::vector<GrowthStep> growth_path(const Permutation& p);
std::vector<GrowthStep> growth_path(const LatticeWord& w);

LatticeWord phi(const Permutation& p);
Permutation phi_inv(const LatticeWord& w);

// Involutions with exactly one 132 and at least one fixed point -> I_{n-2}(132).
Permutation psi(const Permutation& p);

// Stack moves (U = push, D = pop) sorting p read from right to left.
LatticeWord stack_sort_word(const Permutation& p);
int primitive_factors(const LatticeWord& dyck_word);

enum class Direction { Forward, Inverse };
enum class RtlLemmaCase {
  EvenLength,          // I_{2k}(132), 2l+1 maxima -> 2l+3 maxima
  OddOneFixedPoint,    // I_{2k+1}(132), one fixed point -> 2l+2 maxima
  OddManyFixedPoints,  // I_{2k+1}(132), >= 3 fixed points -> 2l+3 maxima
};
struct RtlLemmaResult {
  Permutation image;
  RtlLemmaCase which = RtlLemmaCase::EvenLength;
};
// Forward: adds one point, turning the middle right-to-left maximum (a fixed
// point) into a 2-cycle.  Inverse undoes it.
RtlLemmaResult rtl_lemma_map(const Permutation& p, Direction dir);
std::string to_string(RtlLemmaCase c);

// Insert a new point at position c and pair it with the (shifted) fixed point f.
Permutation attach_cycle(const Permutation& p, int c, int f);

}  // namespace involab
