#include "mib/dnc_interp.hpp"

#include <algorithm>
#include <stdexcept>

#include "mib/linearization.hpp"
#include "mib/residual.hpp"
#include "mib/shift_change.hpp"
#include "mib/unbalanced_mul.hpp"

namespace mib {

namespace {

PolyMatrix base_case(const Matrix& E, const JordanRep& J, const Shift& s) {
  const std::size_t sigma = E.cols();
  if (sigma == 0) return PolyMatrix::identity(E.field(), E.rows());
  return lin_interp_basis(E, MulMat(J), s, next_power_of_two(sigma)).P;
}

void check_instance(const Matrix& E, const JordanRep& J) {
  if (J.order() != E.cols()) throw std::invalid_argument("interpolation: Jordan order differs from the column count of E");
  for (const auto& b : J.blocks)
    if (b.eigenvalue >= E.field().modulus()) throw std::invalid_argument("interpolation: eigenvalue is not reduced");
}

}  // namespace

PolyMatrix interpolation_basis_rec(const Matrix& E, const JordanRep& J) {
  const std::size_t m = E.rows(), sigma = E.cols();
  if (sigma <= m) return base_case(E, J, uniform_shift(m));

  const std::size_t k = sigma / 2;
  Split sp = split(J, k);
  std::vector<std::size_t> lead(k);
  for (std::size_t i = 0; i < k; ++i) lead[i] = sp.perm_leading[i];
  PolyMatrix P1 = interpolation_basis_rec(permute_cols(E, lead), sp.leading);

  Matrix res = compute_residuals(J, P1, E);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (res(i, j) != 0) throw std::logic_error("interpolation: leading residual is not zero");
  std::vector<std::size_t> trail(sigma - k);
  for (std::size_t i = 0; i < sigma - k; ++i) trail[i] = k + sp.perm_trailing[i];
  PolyMatrix P2 = interpolation_basis_rec(permute_cols(res, trail), sp.trailing);

  PolyMatrix R2 = change_shift(P2, uniform_shift(m), rdeg(P1)).R;
  return unbalanced_mul(R2, P1, static_cast<Degree>(sigma));
}

PolyMatrix interpolation_basis(const Matrix& E, const JordanRep& J, const Shift& s) {
  check_instance(E, J);
  check_shift(s, E.rows());
  if (E.is_zero()) return PolyMatrix::identity(E.field(), E.rows());
  Normalized nz = normalize(J.blocks);
  Matrix En = permute_cols(E, nz.perm);
  if (E.cols() <= E.rows()) return base_case(En, nz.rep, s);
  PolyMatrix P = interpolation_basis_rec(En, nz.rep);
  Degree lo = s.empty() ? 0 : *std::min_element(s.begin(), s.end());
  Shift t = s;
  for (auto& v : t) v -= lo;
  return change_shift(P, uniform_shift(E.rows()), t).R;
}

}  // namespace mib
