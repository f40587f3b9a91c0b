#pragma once

#include "parreg/int_matrix.hpp"

namespace parreg {

/// U * M * V = D with U, V unimodular and D diagonal, nonnegative,
/// each diagonal entry dividing the next (zeros last).
struct SmithDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

SmithDecomposition snf(const IntMatrix& m);

/// Diagonal of a Smith form as a vector of length min(rows, cols).
IntVector smith_diagonal(const IntMatrix& d);

}  // namespace parreg
