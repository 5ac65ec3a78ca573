#include "mib/matrix.hpp"

#include <stdexcept>

namespace mib {

Matrix Matrix::identity(const PrimeField& F, std::size_t n) {
  Matrix I(F, n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

bool Matrix::is_zero() const {
  for (u64 v : a_)
    if (v) return false;
  return true;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix R(F_, idx.size(), c_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < c_; ++j) R(k, j) = (*this)(idx[k], j);
  return R;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix R(F_, r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) R(i, k) = (*this)(i, idx[k]);
  return R;
}

Matrix Matrix::col_range(std::size_t lo, std::size_t hi) const {
  Matrix R(F_, r_, hi - lo);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = lo; j < hi; ++j) R(i, j - lo) = (*this)(i, j);
  return R;
}

Matrix Matrix::transpose() const {
  Matrix T(F_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) T(j, i) = (*this)(i, j);
  return T;
}

void Matrix::add_row_multiple(std::size_t dst, const u64* src, u64 coeff) {
  if (coeff == 0) return;
  u64* d = row(dst);
  for (std::size_t j = 0; j < c_; ++j)
    if (src[j]) d[j] = F_.add(d[j], F_.mul(coeff, src[j]));
}

Matrix operator*(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  const PrimeField& F = A.field();
  Matrix C(F, A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      u64 a = A(i, k);
      if (a) C.add_row_multiple(i, B.row(k), a);
    }
  return C;
}

Matrix operator+(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw std::invalid_argument("matrix sum: dimension mismatch");
  Matrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i) C.add_row_multiple(i, B.row(i), 1);
  return C;
}

Matrix operator-(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw std::invalid_argument("matrix difference: dimension mismatch");
  Matrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i) C.add_row_multiple(i, B.row(i), A.field().neg(1));
  return C;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix C(A.field(), A.rows() + B.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(A.rows() + i, j) = B(i, j);
  return C;
}

ScalarProfile scalar_row_rank_profile(const Matrix& M) {
  const PrimeField& F = M.field();
  std::size_t n = M.cols();
  // Echelon store: each kept row is normalized so that its pivot entry is 1.
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> pivots;
  ScalarProfile out;
  std::vector<u64> v(n);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    const u64* r = M.row(i);
    v.assign(r, r + n);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      u64 c = v[pivots[b]];
      if (c == 0) continue;
      u64 nc = F.neg(c);
      const auto& br = basis[b];
      for (std::size_t j = pivots[b]; j < n; ++j)
        if (br[j]) v[j] = F.add(v[j], F.mul(nc, br[j]));
    }
    std::size_t p = 0;
    while (p < n && v[p] == 0) ++p;
    if (p == n) continue;
    u64 inv = F.inv(v[p]);
    for (std::size_t j = p; j < n; ++j) v[j] = F.mul(v[j], inv);
    basis.push_back(v);
    pivots.push_back(p);
    out.indices.push_back(i);
    if (basis.size() == n) break;
  }
  out.rank = out.indices.size();
  return out;
}

ScalarProfile scalar_col_rank_profile(const Matrix& M) { return scalar_row_rank_profile(M.transpose()); }

std::size_t rank(const Matrix& M) { return scalar_row_rank_profile(M).rank; }

Matrix inverse(const Matrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("inverse: matrix not square");
  const PrimeField& F = M.field();
  std::size_t n = M.rows();
  Matrix A = M, I = Matrix::identity(F, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(A(p, j), A(c, j));
        std::swap(I(p, j), I(c, j));
      }
    u64 inv = F.inv(A(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      A(c, j) = F.mul(A(c, j), inv);
      I(c, j) = F.mul(I(c, j), inv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || A(i, c) == 0) continue;
      u64 f = F.neg(A(i, c));
      A.add_row_multiple(i, A.row(c), f);
      I.add_row_multiple(i, I.row(c), f);
    }
  }
  return I;
}

std::optional<std::vector<u64>> solve_left(const Matrix& A, const std::vector<u64>& b) {
  // x A = b  <=>  A^T x^T = b^T; eliminate on the augmented transpose.
  const PrimeField& F = A.field();
  std::size_t r = A.rows(), n = A.cols();
  if (b.size() != n) throw std::invalid_argument("solve_left: dimension mismatch");
  Matrix T(F, n, r + 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) T(j, i) = A(i, j);
  for (std::size_t j = 0; j < n; ++j) T(j, r) = b[j];
  std::vector<std::size_t> pivcol;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < n; ++c) {
    std::size_t p = row;
    while (p < n && T(p, c) == 0) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j <= r; ++j) std::swap(T(p, j), T(row, j));
    u64 inv = F.inv(T(row, c));
    for (std::size_t j = 0; j <= r; ++j) T(row, j) = F.mul(T(row, j), inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || T(i, c) == 0) continue;
      T.add_row_multiple(i, T.row(row), F.neg(T(i, c)));
    }
    pivcol.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (T(i, r) != 0) return std::nullopt;
  std::vector<u64> x(r, 0);
  for (std::size_t k = 0; k < pivcol.size(); ++k) x[pivcol[k]] = T(k, r);
  return x;
}

}  // namespace mib
