#include "parreg/smith.hpp"

#include "parreg/errors.hpp"

namespace parreg {

namespace {

// Location of the entry with minimal nonzero absolute value in the trailing
// submatrix starting at (t, t); false when that submatrix is zero.
bool min_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& e = d.at(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& m) {
  SmithDecomposition s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = s.d;
  IntMatrix& u = s.u;
  IntMatrix& v = s.v;

  const std::size_t nmin = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < nmin; ++t) {
    std::size_t pi, pj;
    if (!min_pivot(d, t, pi, pj)) break;  // trailing block exhausted: zeros remain

    for (;;) {
      min_pivot(d, t, pi, pj);
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      // clear the pivot column; floor division keeps remainders below |pivot|
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = floor_div(d.at(i, t), d.at(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder appeared; re-pick the pivot

      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = floor_div(d.at(t, j), d.at(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot isolated; force it to divide the rest of the trailing block
      bool divides_all = true;
      for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < d.cols() && divides_all; ++j)
          if (!divides_exactly(d.at(t, t), d.at(i, j))) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return s;
}

IntVector smith_diagonal(const IntMatrix& d) {
  const std::size_t n = std::min(d.rows(), d.cols());
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = d.at(i, i);
  return out;
}

}  // namespace parreg
