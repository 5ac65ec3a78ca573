#include "mib/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mib::oracle {

Matrix striped_krylov(const Matrix& E, const MulMat& M, const std::vector<Degree>& s, std::size_t delta) {
  const PrimeField& F = E.field();
  std::size_t m = E.rows(), n = E.cols();
  PriorityPermutation perm(s, m, delta);
  Matrix D = M.to_dense(F);
  Matrix K(F, m * (delta + 1), n);
  Matrix Ed = E;
  for (std::size_t d = 0; d <= delta; ++d) {
    for (std::size_t c = 0; c < m; ++c) std::copy(Ed.row(c), Ed.row(c) + n, K.row(perm.phi(c, d)));
    if (d < delta) Ed = Ed * D;
  }
  return K;
}

PopovBasis oracle_popov(const Matrix& E, const MulMat& M, const std::vector<Degree>& s) {
  const PrimeField& F = E.field();
  std::size_t m = E.rows(), sigma = E.cols();
  PriorityPermutation perm(s, m, sigma);
  Matrix K = striped_krylov(E, M, s, sigma);
  ScalarProfile prof = scalar_row_rank_profile(K);
  std::set<std::size_t> independent(prof.indices.begin(), prof.indices.end());
  Matrix piv = K.select_rows(prof.indices);

  MinimalDegree dl(m, 0);
  PolyMatrix P(F, m, m);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t d = 0;
    while (independent.count(perm.phi(c, d))) ++d;
    dl[c] = d;
    const u64* t = K.row(perm.phi(c, d));
    auto x = solve_left(piv, std::vector<u64>(t, t + sigma));
    if (!x) throw std::logic_error("oracle_popov: dependent row outside the pivot span");
    P(c, c) = Poly::monomial(F, 1, d);
    for (std::size_t k = 0; k < prof.rank; ++k) {
      if ((*x)[k] == 0) continue;
      auto [ck, dk] = perm.phi_inverse(prof.indices[k]);
      P(c, ck) -= Poly::monomial(F, (*x)[k], dk);
    }
  }
  return {std::move(P), std::move(dl)};
}

Matrix naive_residual(const MulMat& M, const PolyMatrix& P, const Matrix& E) {
  const PrimeField& F = E.field();
  if (P.cols() != E.rows()) throw std::invalid_argument("naive_residual: dimension mismatch");
  Matrix D = M.to_dense(F);
  Matrix acc(F, P.rows(), E.cols());
  Degree deg = P.degree();
  Matrix Ed = E;
  for (Degree d = 0; d <= deg; ++d) {
    acc = acc + P.coeff(static_cast<std::size_t>(d)) * Ed;
    if (d < deg) Ed = Ed * D;
  }
  return acc;
}

Poly determinant(const PolyMatrix& A0) {
  if (A0.rows() != A0.cols()) throw std::invalid_argument("determinant: matrix not square");
  const PrimeField& F = A0.field();
  std::size_t n = A0.rows();
  if (n == 0) return Poly::constant(F, 1);
  PolyMatrix A = A0;
  Poly prev = Poly::constant(F, 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && A(p, k).is_zero()) ++p;
    if (p == n) return Poly(F);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(p, j), A(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        DivRem qr = divrem(num, prev);
        if (!qr.rem.is_zero()) throw std::logic_error("determinant: inexact Bareiss division");
        A(i, j) = qr.quot;
      }
      A(i, k) = Poly(F);
    }
    prev = A(k, k);
  }
  return negate ? -A(n - 1, n - 1) : A(n - 1, n - 1);
}

bool module_equivalent(const PolyMatrix& B1, const PolyMatrix& B2, const Matrix& E, const MulMat& M,
                       const std::vector<Degree>& s) {
  std::size_t m = E.rows();
  for (const PolyMatrix* B : {&B1, &B2}) {
    if (B->rows() != m || B->cols() != m) return false;
    if (!naive_residual(M, *B, E).is_zero()) return false;
  }
  Poly d1 = determinant(B1), d2 = determinant(B2);
  if (d1.is_zero() || d2.is_zero()) return false;
  // A nonsingular submodule with the determinant degree of the full module is the module.
  MinimalDegree dl = oracle_popov(E, M, s).delta;
  Degree target = 0;
  for (auto d : dl) target += static_cast<Degree>(d);
  return d1.degree() == target && d2.degree() == target;
}

namespace {

Poly content(const std::vector<Poly>& v) {
  Poly g(v.empty() ? PrimeField() : v[0].field());
  for (const auto& p : v)
    if (!p.is_zero()) g = g.is_zero() ? p.scaled(p.field().inv(p.lead())) : xgcd(g, p).g;
  return g;
}

}  // namespace

std::vector<std::size_t> poly_row_rank_profile(const PolyMatrix& A) {
  const PrimeField& F = A.field();
  std::size_t n = A.cols();
  std::vector<std::vector<Poly>> basis;
  std::vector<std::size_t> pivots, out;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    std::vector<Poly> v(n, Poly(F));
    for (std::size_t j = 0; j < n; ++j) v[j] = A(i, j);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::size_t pc = pivots[b];
      if (v[pc].is_zero()) continue;
      Poly a = v[pc], piv = basis[b][pc];
      for (std::size_t j = 0; j < n; ++j) v[j] = v[j] * piv - basis[b][j] * a;
      Poly g = content(v);
      if (!g.is_zero() && g.degree() > 0)
        for (auto& e : v) e = divrem(e, g).quot;
    }
    std::size_t p = 0;
    while (p < n && v[p].is_zero()) ++p;
    if (p == n) continue;
    basis.push_back(std::move(v));
    pivots.push_back(p);
    out.push_back(i);
  }
  return out;
}

namespace {

PolyMatrix rows_as_matrix(const PolyMatrix& A, const std::vector<std::size_t>& idx) { return A.select_rows(idx); }

}  // namespace

PolyMatrix rational_kernel(const PolyMatrix& Fm) {
  const PrimeField& F = Fm.field();
  std::size_t m = Fm.rows(), n = Fm.cols();
  std::vector<std::size_t> I = poly_row_rank_profile(Fm);
  if (I.size() != n) throw std::invalid_argument("rational_kernel: matrix is rank deficient");
  PolyMatrix FI = rows_as_matrix(Fm, I);
  Poly det = determinant(FI);
  std::vector<bool> inI(m, false);
  for (auto i : I) inI[i] = true;
  PolyMatrix K(F, m - n, m);
  std::size_t row = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (inI[j]) continue;
    std::vector<Poly> v(m, Poly(F));
    v[j] = det;
    for (std::size_t k = 0; k < n; ++k) {
      PolyMatrix R = FI;
      for (std::size_t c = 0; c < n; ++c) R(k, c) = Fm(j, c);
      v[I[k]] = -determinant(R);
    }
    Poly g = content(v);
    for (std::size_t c = 0; c < m; ++c) K(row, c) = divrem(v[c], g).quot;
    ++row;
  }
  return K;
}

PolyMatrix kernel_popov(const PolyMatrix& Fm, const std::vector<Degree>& s) {
  const PrimeField& F = Fm.field();
  std::size_t m = Fm.rows(), n = Fm.cols();
  if (s.size() != m) throw std::invalid_argument("kernel_popov: shift length mismatch");
  Degree smax = 0, ssum = 0;
  for (auto v : s) {
    smax = std::max(smax, v);
    ssum += v;
  }
  Degree fdeg = std::max<Degree>(Fm.degree(), 0);
  std::size_t D = static_cast<std::size_t>(ssum + smax + sum_nonneg(rdeg(Fm)) + 1);
  std::size_t L = D + static_cast<std::size_t>(fdeg) + 1;
  PriorityPermutation perm(s, m, D);
  Matrix S(F, m * (D + 1), n * L);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t d = 0; d <= D; ++d) {
      std::size_t r = perm.phi(c, d);
      for (std::size_t j = 0; j < n; ++j) {
        const Poly& p = Fm(c, j);
        for (std::size_t t = 0; t < p.size(); ++t) S(r, j * L + d + t) = p[t];
      }
    }
  ScalarProfile prof = scalar_row_rank_profile(S);
  std::set<std::size_t> independent(prof.indices.begin(), prof.indices.end());
  Matrix piv = S.select_rows(prof.indices);
  std::vector<std::vector<Poly>> rows;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t d = 0;
    while (d <= D && independent.count(perm.phi(c, d))) ++d;
    if (d > D) continue;
    const u64* t = S.row(perm.phi(c, d));
    auto x = solve_left(piv, std::vector<u64>(t, t + n * L));
    if (!x) throw std::logic_error("kernel_popov: dependent row outside the pivot span");
    std::vector<Poly> row(m, Poly(F));
    row[c] = Poly::monomial(F, 1, d);
    for (std::size_t k = 0; k < prof.rank; ++k) {
      if ((*x)[k] == 0) continue;
      auto [ck, dk] = perm.phi_inverse(prof.indices[k]);
      row[ck] -= Poly::monomial(F, (*x)[k], dk);
    }
    rows.push_back(std::move(row));
  }
  PolyMatrix N(F, rows.size(), m);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < m; ++c) N(i, c) = rows[i][c];
  return N;
}

bool in_row_module(const PolyMatrix& v, const PolyMatrix& N) {
  const PrimeField& F = N.field();
  std::size_t k = N.rows(), m = N.cols();
  if (v.rows() != 1 || v.cols() != m) throw std::invalid_argument("in_row_module: shape mismatch");
  if (k == 0) return v.is_zero();
  // Independent columns of N give a nonsingular k x k block; solve by Cramer's rule.
  PolyMatrix Nt(F, m, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) Nt(j, i) = N(i, j);
  std::vector<std::size_t> J = poly_row_rank_profile(Nt);
  if (J.size() != k) throw std::invalid_argument("in_row_module: N is rank deficient");
  PolyMatrix NJ = N.select_cols(J);
  Poly det = determinant(NJ);
  PolyMatrix w(F, 1, k);
  for (std::size_t i = 0; i < k; ++i) {
    PolyMatrix R = NJ;
    for (std::size_t c = 0; c < k; ++c) R(i, c) = v(0, J[c]);
    DivRem qr = divrem(determinant(R), det);
    if (!qr.rem.is_zero()) return false;
    w(0, i) = qr.quot;
  }
  return naive_mul(w, N) == v;
}

}  // namespace mib::oracle
