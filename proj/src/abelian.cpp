#include "parreg/abelian.hpp"

#include "parreg/errors.hpp"
#include "parreg/smith.hpp"

namespace parreg {

QuotientStructure quotient(const FPAbelianGroup& g, const IntMatrix& subgroup_gens) {
  if (g.relations.rows() > 0 && g.relations.cols() != g.generator_count)
    throw InternalError("quotient: relation width mismatch");
  if (subgroup_gens.rows() > 0 && subgroup_gens.cols() != g.generator_count)
    throw InternalError("quotient: subgroup generator width mismatch");

  IntMatrix all = IntMatrix::vstack(
      g.relations.rows() ? g.relations : IntMatrix(0, g.generator_count),
      subgroup_gens.rows() ? subgroup_gens : IntMatrix(0, g.generator_count));
  if (all.cols() == 0 && g.generator_count > 0) all = IntMatrix(all.rows(), g.generator_count);

  // The quotient of Z^g by the row lattice of `all` splits along the right
  // transform of the Smith form: with U*all*V = D the map x -> V^T x carries
  // the lattice onto the span of the d_i * e_i, so coordinate i lives in a
  // cyclic factor of order d_i (0 for free coordinates past the rank).
  const SmithDecomposition s = snf(all);
  const std::size_t nmin = std::min(all.rows(), all.cols());
  const IntMatrix proj_full = s.v.transposed();

  QuotientStructure q;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < g.generator_count; ++i) {
    const Int order = i < nmin ? s.d.at(i, i) : Int(0);
    if (order == 1) continue;  // trivial factor
    q.factors.push_back(order);
    kept.push_back(i);
  }
  q.projection = IntMatrix(kept.size(), g.generator_count);
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t c = 0; c < g.generator_count; ++c)
      q.projection.at(r, c) = proj_full.at(kept[r], c);
  return q;
}

SeparatingFunctional separating_functional(const QuotientStructure& q,
                                           const IntVector& b_coords) {
  if (b_coords.size() != q.factors.size())
    throw InternalError("separating_functional: coordinate count mismatch");
  for (std::size_t i = 0; i < q.factors.size(); ++i) {
    const Int& order = q.factors[i];
    if (order != 0) {
      if (floor_mod(b_coords[i], order) != 0)
        return SeparatingFunctional{q.projection.row(i), order};
    } else if (b_coords[i] != 0) {
      // infinite factor: any modulus not dividing the coordinate works;
      // |c| + 1 is the deterministic minimal-by-construction pick
      return SeparatingFunctional{q.projection.row(i), abs(b_coords[i]) + 1};
    }
  }
  throw NotSeparable("target lies in the subgroup; no factor separates it");
}

IntMatrix hermite_row_basis(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-eliminate column c below row r
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == rows || abs(h.at(i, c)) < abs(h.at(best, c))) best = i;
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = floor_div(h.at(i, c), h.at(r, c));
        h.add_row_multiple(i, r, -q);
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) h.negate_row(r);
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, c), h.at(r, c));
      if (q != 0) h.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

IntVector reduce_mod_lattice(const IntMatrix& hermite, IntVector v) {
  if (hermite.rows() > 0 && hermite.cols() != v.size())
    throw InternalError("reduce_mod_lattice: width mismatch");
  for (std::size_t i = 0; i < hermite.rows(); ++i) {
    std::size_t pivot = 0;
    while (pivot < hermite.cols() && hermite.at(i, pivot) == 0) ++pivot;
    if (pivot == hermite.cols()) continue;
    Int q = floor_div(v[pivot], hermite.at(i, pivot));
    if (q == 0) continue;
    for (std::size_t j = pivot; j < hermite.cols(); ++j) v[j] -= q * hermite.at(i, j);
  }
  return v;
}

bool lattice_contains(const IntMatrix& hermite, const IntVector& v) {
  return is_zero_vector(reduce_mod_lattice(hermite, v));
}

}  // namespace parreg
