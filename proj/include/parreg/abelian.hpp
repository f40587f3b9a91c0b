#pragma once

#include <vector>

#include "parreg/int_matrix.hpp"

namespace parreg {

/// Finitely presented abelian group: free generators modulo the row span of
/// an integer relation matrix.
struct FPAbelianGroup {
  std::size_t generator_count = 0;
  IntMatrix relations;  // each row is one relation among the generators
};

/// Invariant-factor form of a quotient. factors[i] is the order of the i-th
/// cyclic factor (0 for an infinite factor); projection maps generator
/// coordinates to factor coordinates. Unit factors are dropped.
struct QuotientStructure {
  IntVector factors;
  IntMatrix projection;
};

QuotientStructure quotient(const FPAbelianGroup& g, const IntMatrix& subgroup_gens);

/// Integer covector u and modulus d >= 2 with u*rel == 0 (mod d) for every
/// relation and subgroup generator, and u*b != 0 (mod d).
struct SeparatingFunctional {
  IntVector functional;
  Int modulus;
};

/// b_coords are factor coordinates (the quotient projection applied to b).
/// Throws NotSeparable when b lies in the subgroup.
SeparatingFunctional separating_functional(const QuotientStructure& q,
                                           const IntVector& b_coords);

/// Row-style Hermite basis of the row span of m: echelon rows, positive
/// pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_row_basis(const IntMatrix& m);

/// Canonical coset representative of v modulo the row lattice of a Hermite
/// basis. Two vectors reduce to the same representative iff they differ by a
/// lattice element.
IntVector reduce_mod_lattice(const IntMatrix& hermite, IntVector v);

bool lattice_contains(const IntMatrix& hermite, const IntVector& v);

}  // namespace parreg
