#pragma once

#include <vector>

#include "mib/jordan.hpp"
#include "mib/polymat.hpp"

namespace mib {

enum class ResidualStrategy { Shifting, Crt };

struct ResidualBucket {
  // Block-size class: sizes in [2^k, 2^{k+1}); infinite marks the large-block bucket.
  std::size_t k = 0;
  bool infinite = false;
  ResidualStrategy strategy = ResidualStrategy::Crt;
  std::vector<std::size_t> blocks;  // indices into J.blocks
};

struct ResidualPlan {
  std::vector<ResidualBucket> buckets;
};

ResidualPlan plan_residuals(const JordanRep& J, std::size_t m);

// P (.) E for Jordan M; P is k x m, E is m x sigma.
Matrix compute_residuals(const JordanRep& J, const PolyMatrix& P, const Matrix& E);

// The two strategies on a bucket given as its own block list; E holds the
// bucket's columns in block order.
Matrix residual_by_shifting(const JordanRep& bucket, const PolyMatrix& P, const Matrix& E);
Matrix residual_by_crt(const JordanRep& bucket, const PolyMatrix& P, const Matrix& E);

}  // namespace mib
