#pragma once

#include "mib/jordan.hpp"
#include "mib/polymat.hpp"

namespace mib {

// s-minimal interpolation basis for (E, J); J need not be in standard form.
PolyMatrix interpolation_basis(const Matrix& E, const JordanRep& J, const Shift& s);
// 0-minimal interpolation basis with sum of row degrees at most sigma; J standard.
PolyMatrix interpolation_basis_rec(const Matrix& E, const JordanRep& J);

}  // namespace mib
