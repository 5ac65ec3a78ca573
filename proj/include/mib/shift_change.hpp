#pragma once

#include "mib/polymat.hpp"

namespace mib {

struct ShiftChange {
  PolyMatrix R;  // (s + t)-reduced
  PolyMatrix U;  // unimodular, U * P = R
};

// P square, full rank and s-reduced.
ShiftChange change_shift(const PolyMatrix& P, const Shift& s, const Shift& t);

}  // namespace mib
