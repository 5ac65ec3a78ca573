#pragma once

#include <vector>

#include "mib/polymat.hpp"

namespace mib {

// Rows of B split into chunks of degree <= d; original row i equals
// sum_j X^{j(d+1)} * expanded row row_map[i][j].
struct PartialLinearization {
  PolyMatrix expanded;
  std::vector<std::vector<std::size_t>> row_map;
  std::size_t d = 0;
};

PartialLinearization partial_linearize(const PolyMatrix& B, std::size_t d);
PolyMatrix partial_compress(const PolyMatrix& prod, const PartialLinearization& lin);

struct UnbalancedBucket {
  std::vector<std::size_t> a_rows;     // rows of A (original indices)
  std::vector<std::size_t> b_nonzero;  // nonzero rows of the matching column block of B
  std::size_t degree_bound = 0;        // partial linearization degree
};
// Degree classes of the rows of A: bucket 0 holds d*m <= xi (and zero rows),
// bucket i holds 2^{i-1} xi < d*m <= 2^i xi.
std::vector<UnbalancedBucket> plan_unbalanced(const PolyMatrix& B, const PolyMatrix& A, Degree xi);

// Smallest xi for which (B, A) satisfies the preconditions of unbalanced_mul.
Degree unbalanced_xi(const PolyMatrix& B, const PolyMatrix& A);

// B * A for B k x m, A m x n, with xi >= m, sum rdeg(A) <= xi and
// sum of the nonnegative entries of rdeg_{rdeg A}(B) <= xi.
PolyMatrix unbalanced_mul(const PolyMatrix& B, const PolyMatrix& A, Degree xi);

}  // namespace mib
