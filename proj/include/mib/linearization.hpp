#pragma once

#include <utility>
#include <vector>

#include "mib/jordan.hpp"
#include "mib/polymat.hpp"

namespace mib {

// The priority order on pairs (c, d), c < m, d <= delta: sort by s[c] + d, then c.
class PriorityPermutation {
 public:
  PriorityPermutation(const std::vector<Degree>& s, std::size_t m, std::size_t delta);

  std::size_t m() const { return m_; }
  std::size_t delta() const { return delta_; }
  std::size_t size() const { return inv_.size(); }
  Degree psi(std::size_t c, std::size_t d) const { return s_[c] + static_cast<Degree>(d); }
  std::size_t phi(std::size_t c, std::size_t d) const { return phi_[c * (delta_ + 1) + d]; }
  std::pair<std::size_t, std::size_t> phi_inverse(std::size_t i) const { return inv_[i]; }

 private:
  std::vector<Degree> s_;
  std::size_t m_, delta_;
  std::vector<std::size_t> phi_;
  std::vector<std::pair<std::size_t, std::size_t>> inv_;
};

PriorityPermutation build_priority(const std::vector<Degree>& s, std::size_t m, std::size_t delta);

// Shifted expansion: row i of P becomes a scalar row of width m(delta+1) with the
// coefficient of degree d of entry c at column phi(c, d).
Matrix expand(const PolyMatrix& P, const PriorityPermutation& perm);
PolyMatrix compress(const Matrix& V, const PriorityPermutation& perm);

struct RankProfile {
  std::size_t r = 0;
  std::vector<std::size_t> row_indices;                      // in K_s(E) with degrees 0..delta
  std::vector<std::pair<std::size_t, std::size_t>> decoded;  // (c_k, d_k)
  Matrix pivot_rows;                                         // r x sigma
  std::vector<std::size_t> col_indices;                      // column rank profile of pivot_rows
};

using MinimalDegree = std::vector<std::size_t>;

bool is_power_of_two(std::size_t v);
std::size_t next_power_of_two(std::size_t v);
// Validates 1 <= delta <= 2*sigma - 1 and delta a power of two.
void check_delta(std::size_t delta, std::size_t sigma);

RankProfile krylov_rank_profile(const Matrix& E, const MulMat& M, const std::vector<Degree>& s, std::size_t delta);
MinimalDegree minimal_degree(const RankProfile& profile, std::size_t m);

struct PopovBasis {
  PolyMatrix P;
  MinimalDegree delta;
};
PopovBasis lin_interp_basis(const Matrix& E, const MulMat& M, const std::vector<Degree>& s, std::size_t delta);

}  // namespace mib
