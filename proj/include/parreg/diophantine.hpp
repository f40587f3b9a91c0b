#pragma once

#include <optional>
#include <vector>

#include "parreg/int_matrix.hpp"

namespace parreg {

/// Integer solutions of M*y = v: one particular solution when the system is
/// feasible over the integers, plus a basis of the kernel lattice
/// {y : M*y = 0}. Every solution is particular + integer combination of the
/// kernel basis.
struct AffineSolution {
  std::optional<IntVector> particular;
  std::vector<IntVector> kernel_basis;
};

AffineSolution solve_affine(const IntMatrix& m, const IntVector& v);

}  // namespace parreg
