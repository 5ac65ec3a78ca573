#include "mib/polymat.hpp"

#include <algorithm>
#include <stdexcept>

namespace mib {

void check_shift(const Shift& s, std::size_t len) {
  if (s.size() != len) throw std::invalid_argument("shift length does not match column count");
  for (Degree v : s)
    if (v < 0) throw std::invalid_argument("shift entries must be nonnegative");
}

Shift uniform_shift(std::size_t m, Degree v) { return Shift(m, v); }

Degree sum(const std::vector<Degree>& v) {
  Degree t = 0;
  for (Degree d : v)
    if (d != kMinusInf) t += d;
  return t;
}

Degree sum_nonneg(const std::vector<Degree>& v) {
  Degree t = 0;
  for (Degree d : v)
    if (d > 0) t += d;
  return t;
}

bool sorted_degrees_leq(DegreeVector a, DegreeVector b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a <= b;
}

PolyMatrix PolyMatrix::identity(const PrimeField& F, std::size_t n) {
  PolyMatrix I(F, n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = Poly::constant(F, 1);
  return I;
}

PolyMatrix PolyMatrix::from_constant(const Matrix& A) {
  PolyMatrix P(A.field(), A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) P(i, j) = Poly::constant(A.field(), A(i, j));
  return P;
}

Degree PolyMatrix::degree() const {
  Degree d = kMinusInf;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

Degree PolyMatrix::row_degree(std::size_t i) const {
  Degree d = kMinusInf;
  for (std::size_t j = 0; j < c_; ++j) d = std::max(d, (*this)(i, j).degree());
  return d;
}

bool PolyMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < c_; ++j)
    if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

Matrix PolyMatrix::coeff(std::size_t k) const {
  Matrix C(F_, r_, c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) C(i, j) = (*this)(i, j)[k];
  return C;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMatrix R(F_, idx.size(), c_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < c_; ++j) R(k, j) = (*this)(idx[k], j);
  return R;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  PolyMatrix R(F_, r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) R(i, k) = (*this)(i, idx[k]);
  return R;
}

PolyMatrix PolyMatrix::col_range(std::size_t lo, std::size_t hi) const {
  PolyMatrix R(F_, r_, hi - lo);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = lo; j < hi; ++j) R(i, j - lo) = (*this)(i, j);
  return R;
}

PolyMatrix PolyMatrix::row_range(std::size_t lo, std::size_t hi) const {
  PolyMatrix R(F_, hi - lo, c_);
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = 0; j < c_; ++j) R(i - lo, j) = (*this)(i, j);
  return R;
}

static void check_same_shape(const PolyMatrix& A, const PolyMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw std::invalid_argument("polynomial matrix shape mismatch");
}

PolyMatrix operator+(const PolyMatrix& A, const PolyMatrix& B) {
  check_same_shape(A, B);
  PolyMatrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) += B(i, j);
  return C;
}

PolyMatrix operator-(const PolyMatrix& A, const PolyMatrix& B) {
  check_same_shape(A, B);
  PolyMatrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) -= B(i, j);
  return C;
}

PolyMatrix naive_mul(const PolyMatrix& B, const PolyMatrix& A) {
  if (B.cols() != A.rows()) throw std::invalid_argument("polynomial matrix product: dimension mismatch");
  PolyMatrix C(B.field(), B.rows(), A.cols());
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t k = 0; k < B.cols(); ++k) {
      const Poly& b = B(i, k);
      if (b.is_zero()) continue;
      for (std::size_t j = 0; j < A.cols(); ++j)
        if (!A(k, j).is_zero()) C(i, j) += poly_mul(b, A(k, j));
    }
  return C;
}

PolyMatrix operator*(const PolyMatrix& A, const PolyMatrix& B) { return naive_mul(A, B); }

PolyMatrix hstack(const PolyMatrix& A, const PolyMatrix& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("hstack: row mismatch");
  PolyMatrix C(A.field(), A.rows(), A.cols() + B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
    for (std::size_t j = 0; j < B.cols(); ++j) C(i, A.cols() + j) = B(i, j);
  }
  return C;
}

PolyMatrix vstack(const PolyMatrix& A, const PolyMatrix& B) {
  if (A.cols() != B.cols()) throw std::invalid_argument("vstack: column mismatch");
  PolyMatrix C(A.field(), A.rows() + B.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(A.rows() + i, j) = B(i, j);
  return C;
}

PolyMatrix truncate(const PolyMatrix& A, std::size_t n) {
  PolyMatrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = truncate(A(i, j), n);
  return C;
}

PolyMatrix mul_x_cols(const PolyMatrix& A, const std::vector<Degree>& s) {
  if (s.size() != A.cols()) throw std::invalid_argument("mul_x_cols: length mismatch");
  PolyMatrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = shift_up(A(i, j), static_cast<std::size_t>(s[j]));
  return C;
}

PolyMatrix div_x_cols(const PolyMatrix& A, const std::vector<Degree>& s) {
  if (s.size() != A.cols()) throw std::invalid_argument("div_x_cols: length mismatch");
  PolyMatrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      std::size_t k = static_cast<std::size_t>(s[j]);
      const Poly& p = A(i, j);
      for (std::size_t t = 0; t < k && t < p.size(); ++t)
        if (p[t] != 0) throw std::logic_error("div_x_cols: entry not divisible");
      C(i, j) = shift_down(p, k);
    }
  return C;
}

PolyMatrix div_x(const PolyMatrix& A, std::size_t k) {
  return div_x_cols(A, std::vector<Degree>(A.cols(), static_cast<Degree>(k)));
}

DegreeVector rdeg_s(const PolyMatrix& M, const std::vector<Degree>& s) {
  if (s.size() != M.cols()) throw std::invalid_argument("rdeg_s: shift length does not match column count");
  DegreeVector d(M.rows(), kMinusInf);
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) d[i] = std::max(d[i], deg_add(M(i, j).degree(), s[j]));
  return d;
}

DegreeVector rdeg(const PolyMatrix& M) { return rdeg_s(M, std::vector<Degree>(M.cols(), 0)); }

Matrix leading_matrix_s(const PolyMatrix& M, const std::vector<Degree>& s) {
  DegreeVector d = rdeg_s(M, s);
  Matrix L(M.field(), M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (d[i] == kMinusInf) throw std::invalid_argument("leading matrix of a matrix with a zero row");
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (s[j] == kMinusInf) continue;
      Degree e = d[i] - s[j];
      if (e >= 0) L(i, j) = M(i, j)[static_cast<std::size_t>(e)];
    }
  }
  return L;
}

bool is_reduced_s(const PolyMatrix& M, const std::vector<Degree>& s) {
  return rank(leading_matrix_s(M, s)) == M.rows();
}

Pivot pivot_s(const PolyMatrix& M, std::size_t row, const std::vector<Degree>& s) {
  if (s.size() != M.cols()) throw std::invalid_argument("pivot_s: shift length does not match column count");
  Degree best = kMinusInf;
  std::size_t idx = 0;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    Degree v = deg_add(M(row, j).degree(), s[j]);
    if (v != kMinusInf && v >= best) {
      best = v;
      idx = j;
    }
  }
  if (best == kMinusInf) throw std::invalid_argument("pivot of a zero row");
  return {idx, M(row, idx).degree()};
}

bool is_weak_popov_s(const PolyMatrix& M, const std::vector<Degree>& s) {
  std::vector<bool> seen(M.cols(), false);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (M.row_is_zero(i)) return false;
    std::size_t c = pivot_s(M, i, s).index;
    if (seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

bool is_popov_s(const PolyMatrix& M, const std::vector<Degree>& s) {
  if (M.rows() != M.cols()) throw std::invalid_argument("is_popov_s: matrix not square");
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (M.row_is_zero(i)) return false;
    Pivot p = pivot_s(M, i, s);
    if (p.index != i || !M(i, i).is_monic()) return false;
  }
  for (std::size_t j = 0; j < M.cols(); ++j) {
    Degree pd = M(j, j).degree();
    for (std::size_t i = 0; i < M.rows(); ++i)
      if (i != j && M(i, j).degree() >= pd) return false;
  }
  return true;
}

}  // namespace mib
