#pragma once

#include <utility>
#include <vector>

#include "mib/field.hpp"
#include "mib/matrix.hpp"

namespace mib {

// Nonnegative per-column degree weights.
using Shift = std::vector<Degree>;
// Per-row degrees; kMinusInf marks a zero row.
using DegreeVector = std::vector<Degree>;

void check_shift(const Shift& s, std::size_t len);
Shift uniform_shift(std::size_t m, Degree v = 0);
Degree sum(const std::vector<Degree>& v);  // sum of finite entries
Degree sum_nonneg(const std::vector<Degree>& v);
// Sorted copy, compared lexicographically (minimality of degree vectors).
bool sorted_degrees_leq(DegreeVector a, DegreeVector b);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const PrimeField& F, std::size_t rows, std::size_t cols)
      : F_(F), r_(rows), c_(cols), e_(rows * cols, Poly(F)) {}
  static PolyMatrix identity(const PrimeField& F, std::size_t n);
  static PolyMatrix from_constant(const Matrix& A);

  const PrimeField& field() const { return F_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Poly& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

  Degree degree() const;
  Degree row_degree(std::size_t i) const;
  bool row_is_zero(std::size_t i) const;
  bool is_zero() const;
  Matrix coeff(std::size_t k) const;  // scalar matrix of degree-k coefficients

  PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;
  PolyMatrix select_cols(const std::vector<std::size_t>& idx) const;
  PolyMatrix col_range(std::size_t lo, std::size_t hi) const;
  PolyMatrix row_range(std::size_t lo, std::size_t hi) const;

  bool operator==(const PolyMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

 private:
  PrimeField F_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Poly> e_;
};

PolyMatrix operator+(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix operator-(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix operator*(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix naive_mul(const PolyMatrix& B, const PolyMatrix& A);
PolyMatrix hstack(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix vstack(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix truncate(const PolyMatrix& A, std::size_t n);
PolyMatrix mul_x_cols(const PolyMatrix& A, const std::vector<Degree>& s);  // A * diag(X^s)
PolyMatrix div_x_cols(const PolyMatrix& A, const std::vector<Degree>& s);  // exact, throws otherwise
PolyMatrix div_x(const PolyMatrix& A, std::size_t k);                       // exact, throws otherwise

// Max-plus row degrees; s may contain kMinusInf, which masks that column.
DegreeVector rdeg_s(const PolyMatrix& M, const std::vector<Degree>& s);
DegreeVector rdeg(const PolyMatrix& M);
Matrix leading_matrix_s(const PolyMatrix& M, const std::vector<Degree>& s);
bool is_reduced_s(const PolyMatrix& M, const std::vector<Degree>& s);

struct Pivot {
  std::size_t index;
  Degree degree;  // degree of the pivot entry itself
};
Pivot pivot_s(const PolyMatrix& M, std::size_t row, const std::vector<Degree>& s);
bool is_weak_popov_s(const PolyMatrix& M, const std::vector<Degree>& s);
bool is_popov_s(const PolyMatrix& M, const std::vector<Degree>& s);

}  // namespace mib
