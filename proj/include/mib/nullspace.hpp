#pragma once

#include <vector>

#include "mib/polymat.hpp"

namespace mib {

struct NullspaceBasis {
  PolyMatrix N;          // (m - n) x m, N * F = 0
  DegreeVector degrees;  // rdeg_s(N)
};

// Per recursion node: column count n and row count of the non-kernel part P2.
struct NullspaceNode {
  std::size_t n, p2_rows;
};

// s-minimal left nullspace basis of a full-rank m x n matrix F (m >= n),
// where s bounds rdeg(F) entrywise. Any order of s is accepted.
NullspaceBasis minimal_nullspace_basis(const PolyMatrix& F, const Shift& s,
                                       std::vector<NullspaceNode>* trace = nullptr);

}  // namespace mib
