#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "mib/jordan.hpp"
#include "mib/oracle.hpp"
#include "mib/polymat.hpp"

namespace mib::testing {

using Rng = std::mt19937_64;

inline u64 rand_elem(Rng& rng, const PrimeField& F) {
  return std::uniform_int_distribution<u64>(0, F.modulus() - 1)(rng);
}

inline std::size_t rand_int(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random polynomial of degree exactly deg (deg < 0 gives zero).
inline Poly rand_poly(Rng& rng, const PrimeField& F, long deg) {
  if (deg < 0) return Poly(F);
  std::vector<u64> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = rand_elem(rng, F);
  c.back() = 1 + std::uniform_int_distribution<u64>(0, F.modulus() - 2)(rng);
  return Poly(F, std::move(c));
}

// Random polynomial of degree at most deg.
inline Poly rand_poly_upto(Rng& rng, const PrimeField& F, long deg) {
  if (deg < 0) return Poly(F);
  std::vector<u64> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = rand_elem(rng, F);
  return Poly(F, std::move(c));
}

inline Matrix rand_matrix(Rng& rng, const PrimeField& F, std::size_t r, std::size_t c) {
  Matrix M(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = rand_elem(rng, F);
  return M;
}

inline PolyMatrix rand_polymat(Rng& rng, const PrimeField& F, std::size_t r, std::size_t c, long deg) {
  PolyMatrix M(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = rand_poly_upto(rng, F, deg);
  return M;
}

// Random standard Jordan representation of order sigma; few distinct
// eigenvalues when `repeat` is set so that repetition counts get large.
inline JordanRep rand_jordan(Rng& rng, const PrimeField& F, std::size_t sigma, bool repeat) {
  std::vector<JordanBlock> b;
  std::size_t left = sigma;
  std::size_t pool = repeat ? rand_int(rng, 1, 3) : F.modulus();
  while (left > 0) {
    std::size_t sz = rand_int(rng, 1, std::min<std::size_t>(left, rand_int(rng, 1, 4) == 1 ? left : 3));
    u64 x = std::uniform_int_distribution<u64>(0, std::min<u64>(pool, F.modulus()) - 1)(rng);
    b.push_back({x, sz});
    left -= sz;
  }
  return normalize(b).rep;
}

inline Poly P(const PrimeField& F, std::vector<u64> c) { return Poly(F, std::move(c)); }

// The F_97 instance used throughout the examples: E and a nilpotent block of order 3.
inline Matrix example_E(const PrimeField& F) {
  Matrix E(F, 3, 3);
  const u64 v[3][3] = {{27, 49, 29}, {50, 58, 0}, {77, 10, 29}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) E(i, j) = v[i][j];
  return E;
}

inline JordanRep example_J() { return JordanRep{{{0, 3}}}; }

// Rows p3, p2, p1 of the reduced basis given with the instance.
inline PolyMatrix example_basis(const PrimeField& F) {
  PolyMatrix B(F, 3, 3);
  B(0, 0) = P(F, {0, 36, 1});
  B(0, 1) = P(F, {0, 31});
  B(1, 0) = P(F, {13, 3});
  B(1, 1) = P(F, {57, 1});
  B(2, 0) = P(F, {96});
  B(2, 1) = P(F, {96});
  B(2, 2) = P(F, {1});
  return B;
}

inline PolyMatrix example_popov(const PrimeField& F) {
  PolyMatrix B(F, 3, 3);
  B(0, 0) = P(F, {82, 40, 1});
  B(0, 1) = P(F, {76});
  B(1, 0) = P(F, {13, 3});
  B(1, 1) = P(F, {57, 1});
  B(2, 0) = P(F, {96});
  B(2, 1) = P(F, {96});
  B(2, 2) = P(F, {1});
  return B;
}

// A with the given row degrees and B with sum rdeg_{rdeg A}(B) around xi.
inline std::pair<PolyMatrix, PolyMatrix> rand_pair(Rng& rng, const PrimeField& F, const std::vector<long>& d, long budget,
                                                   bool zero_rows) {
  const std::size_t m = d.size();
  PolyMatrix A(F, m, m), B(F, m, m);
  for (std::size_t i = 0; i < m; ++i)
    if (d[i] >= 0) {
      std::size_t c = rand_int(rng, 0, m - 1);
      for (std::size_t j = 0; j < m; ++j) A(i, j) = j == c ? rand_poly(rng, F, d[i]) : rand_poly_upto(rng, F, d[i]);
    }
  long per_row = budget / static_cast<long>(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (zero_rows && rand_int(rng, 0, 2) == 0) continue;
    long target = static_cast<long>(rand_int(rng, 0, static_cast<std::size_t>(std::max<long>(per_row, 0))));
    for (std::size_t j = 0; j < m; ++j) {
      long dj = d[j] < 0 ? 0 : d[j];
      if (target - dj >= 0) B(i, j) = rand_poly_upto(rng, F, target - dj);
    }
  }
  return {B, A};
}

inline JordanRep rand_jordan_kind(Rng& rng, const PrimeField& F, std::size_t sigma, int kind) {
  std::vector<JordanBlock> b;
  switch (kind) {
    case 0:  // all size 1
      for (std::size_t i = 0; i < sigma; ++i) b.push_back({rand_elem(rng, F), 1});
      break;
    case 1:  // one block
      b.push_back({rand_elem(rng, F), sigma});
      break;
    case 2: {  // one eigenvalue repeated more than m times
      u64 x = rand_elem(rng, F);
      std::size_t left = sigma;
      while (left) {
        std::size_t s = std::min(left, rand_int(rng, 1, 2));
        b.push_back({x, s});
        left -= s;
      }
      break;
    }
    default:
      return rand_jordan(rng, F, sigma, kind == 3);
  }
  return normalize(b).rep;
}

// Random full-rank m x n with degree <= deg (rank checked by the oracle).
inline PolyMatrix rand_full_rank(Rng& rng, const PrimeField& F, std::size_t m, std::size_t n, long deg) {
  for (;;) {
    PolyMatrix G(F, m, n);
    for (std::size_t i = 0; i < m; ++i) {
      long di = static_cast<long>(rand_int(rng, 0, static_cast<std::size_t>(deg)));
      for (std::size_t j = 0; j < n; ++j) G(i, j) = rand_poly_upto(rng, F, di);
    }
    if (oracle::poly_row_rank_profile(G).size() == n) return G;
  }
}

// Random s-reduced square matrix: leading part with invertible leading matrix.
inline PolyMatrix rand_reduced(Rng& rng, const PrimeField& F, std::size_t m, const Shift& s) {
  for (;;) {
    PolyMatrix P(F, m, m);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t c = rand_int(rng, 0, m - 1);
      Degree row = s[c] + static_cast<Degree>(rand_int(rng, 0, 4));
      for (std::size_t j = 0; j < m; ++j)
        if (row - s[j] >= 0) P(i, j) = rand_poly_upto(rng, F, row - s[j]);
    }
    bool zero = false;
    for (std::size_t i = 0; i < m; ++i) zero = zero || P.row_is_zero(i);
    if (!zero && is_reduced_s(P, s)) return P;
  }
}

inline Shift rand_shift(Rng& rng, std::size_t m, std::size_t hi) {
  Shift s(m);
  for (auto& v : s) v = static_cast<Degree>(rand_int(rng, 0, hi));
  return s;
}

inline u64 binom_mod(const PrimeField& F, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  u64 r = 1;
  for (std::size_t i = 0; i < k; ++i) r = F.mul(F.mul(r, F.from_int(static_cast<long long>(n - i))), F.inv(F.from_int(static_cast<long long>(i + 1))));
  return r;
}

// Coefficient of X^i Y^j in Q(X + x, Y + y) for Q = sum_g Q_g(X) Y^g.
inline u64 recentred_coeff(const PolyMatrix& Q, u64 x, u64 y, std::size_t i, std::size_t j) {
  const PrimeField& F = Q.field();
  u64 acc = 0;
  for (std::size_t g = j; g < Q.cols(); ++g) {
    Poly s = taylor_shift(Q(0, g), x);
    acc = F.add(acc, F.mul(s[i], F.mul(binom_mod(F, g, j), F.pow(y, g - j))));
  }
  return acc;
}

}  // namespace mib::testing
