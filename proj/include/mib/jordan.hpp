#pragma once

#include <variant>
#include <vector>

#include "mib/matrix.hpp"

namespace mib {

struct JordanBlock {
  u64 eigenvalue;
  std::size_t size;
  bool operator==(const JordanBlock& o) const { return eigenvalue == o.eigenvalue && size == o.size; }
};

// Block list with eigenvalue groups ordered by non-increasing block count
// (ties: ascending eigenvalue) and sizes non-increasing inside each group.
struct JordanRep {
  std::vector<JordanBlock> blocks;

  std::size_t order() const;
  std::vector<std::size_t> offsets() const;  // first column of each block
  bool operator==(const JordanRep& o) const { return blocks == o.blocks; }
};

struct Normalized {
  JordanRep rep;
  std::vector<std::size_t> perm;  // new column k comes from old column perm[k]
};

Normalized normalize(const std::vector<JordanBlock>& blocks);
bool is_standard(const JordanRep& J);
std::size_t minpoly_degree(const JordanRep& J);
Matrix dense(const JordanRep& J, const PrimeField& F);

// E * J, blockwise.
Matrix act(const Matrix& E, const JordanRep& J);
// E * J^k via (X + x)^k mod X^size per block.
Matrix act_power(const Matrix& E, const JordanRep& J, std::size_t k);

struct Split {
  JordanRep leading, trailing;
  std::vector<std::size_t> perm_leading;   // into columns [0, k)
  std::vector<std::size_t> perm_trailing;  // into columns [k, sigma), offset by k
};
Split split(const JordanRep& J, std::size_t k);

// new column k of the result is column perm[k] of E.
Matrix permute_cols(const Matrix& E, const std::vector<std::size_t>& perm);

struct InterpolationInstance {
  Matrix E;
  JordanRep J;
};

// Multiplication matrix of the module: a Jordan matrix or an arbitrary dense one.
class MulMat {
 public:
  MulMat(JordanRep J) : m_(std::move(J)) {}  // NOLINT(google-explicit-constructor)
  MulMat(Matrix M) : m_(std::move(M)) {}     // NOLINT(google-explicit-constructor)

  bool is_jordan() const { return std::holds_alternative<JordanRep>(m_); }
  const JordanRep& jordan() const { return std::get<JordanRep>(m_); }
  const Matrix& matrix() const { return std::get<Matrix>(m_); }
  std::size_t order() const;
  Matrix to_dense(const PrimeField& F) const;
  Matrix apply(const Matrix& E) const;  // E * M

 private:
  std::variant<JordanRep, Matrix> m_;
};

}  // namespace mib
