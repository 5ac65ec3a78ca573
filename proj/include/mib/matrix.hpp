#pragma once

#include <optional>
#include <vector>

#include "mib/field.hpp"

namespace mib {

// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const PrimeField& F, std::size_t rows, std::size_t cols)
      : F_(F), r_(rows), c_(cols), a_(rows * cols, 0) {}
  static Matrix identity(const PrimeField& F, std::size_t n);

  const PrimeField& field() const { return F_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  u64& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  u64 operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  u64* row(std::size_t i) { return a_.data() + i * c_; }
  const u64* row(std::size_t i) const { return a_.data() + i * c_; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix col_range(std::size_t lo, std::size_t hi) const;
  Matrix transpose() const;
  void add_row_multiple(std::size_t dst, const u64* src, u64 coeff);  // row dst += coeff*src

 private:
  PrimeField F_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<u64> a_;
};

Matrix operator*(const Matrix& A, const Matrix& B);
Matrix operator+(const Matrix& A, const Matrix& B);
Matrix operator-(const Matrix& A, const Matrix& B);
Matrix vstack(const Matrix& A, const Matrix& B);

struct ScalarProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> indices;  // strictly increasing
};

// Lexicographically first maximal independent set of rows (resp. columns).
ScalarProfile scalar_row_rank_profile(const Matrix& M);
ScalarProfile scalar_col_rank_profile(const Matrix& M);
std::size_t rank(const Matrix& M);

Matrix inverse(const Matrix& M);  // throws on singular input
// x with x*A = b for a row vector b, if one exists.
std::optional<std::vector<u64>> solve_left(const Matrix& A, const std::vector<u64>& b);

}  // namespace mib
