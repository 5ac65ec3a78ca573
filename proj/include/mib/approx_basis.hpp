#pragma once

#include <vector>

#include "mib/polymat.hpp"

namespace mib {

// Rows p with p * F_j = 0 mod X^{orders[j]} for every column j, minimal for s.
struct ApproximantInstance {
  PolyMatrix F;
  std::vector<std::size_t> orders;
  Shift s;
};

inline constexpr std::size_t kMBasisThreshold = 32;

// Iterative order-one steps; rows processed by (current shift, index).
PolyMatrix mbasis(const ApproximantInstance& inst);
// Divide and conquer on the order, mbasis below kMBasisThreshold.
PolyMatrix pm_basis(const ApproximantInstance& inst);

// p * F_j mod X^{orders[j]} is zero for every row p and column j.
bool is_approximant_basis_of(const PolyMatrix& P, const ApproximantInstance& inst);

}  // namespace mib
