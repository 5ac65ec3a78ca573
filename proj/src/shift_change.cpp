#include "mib/shift_change.hpp"

#include <stdexcept>

#include "mib/nullspace.hpp"

namespace mib {

ShiftChange change_shift(const PolyMatrix& P, const Shift& s, const Shift& t) {
  const std::size_t m = P.rows();
  if (P.cols() != m) throw std::invalid_argument("change_shift: matrix is not square");
  check_shift(s, m);
  check_shift(t, m);
  if (!is_reduced_s(P, s)) throw std::invalid_argument("change_shift: matrix is not s-reduced");
  const PrimeField& F = P.field();

  DegreeVector d = rdeg_s(P, s);
  PolyMatrix M = vstack(mul_x_cols(P, s), PolyMatrix(F, m, m) - PolyMatrix::identity(F, m));
  Shift u = d;
  u.insert(u.end(), t.begin(), t.end());
  NullspaceBasis nb = minimal_nullspace_basis(M, u);
  return {div_x_cols(nb.N.col_range(m, 2 * m), s), nb.N.col_range(0, m)};
}

}  // namespace mib
