#include "parreg/diophantine.hpp"

#include "parreg/errors.hpp"
#include "parreg/smith.hpp"

namespace parreg {

AffineSolution solve_affine(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.rows()) throw InternalError("solve_affine: rhs length mismatch");
  const SmithDecomposition s = snf(m);
  const std::size_t nmin = std::min(m.rows(), m.cols());

  AffineSolution out;

  // kernel: columns of V whose diagonal entry vanishes
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j >= nmin || s.d.at(j, j) == 0) out.kernel_basis.push_back(s.v.col(j));

  // U*M*V = D turns M*y = v into D*z = U*v with y = V*z
  const IntVector w = s.u.apply(v);
  IntVector z(m.cols());
  bool feasible = true;
  for (std::size_t i = 0; i < m.rows() && feasible; ++i) {
    const Int di = i < nmin ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (w[i] != 0) feasible = false;
    } else {
      if (!divides_exactly(di, w[i]))
        feasible = false;
      else
        z[i] = w[i] / di;
    }
  }
  if (feasible) out.particular = s.v.apply(z);
  return out;
}

}  // namespace parreg
