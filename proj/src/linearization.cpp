#include "mib/linearization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mib {

PriorityPermutation::PriorityPermutation(const std::vector<Degree>& s, std::size_t m, std::size_t delta)
    : s_(s), m_(m), delta_(delta), phi_(m * (delta + 1)) {
  if (s.size() != m) throw std::invalid_argument("priority: shift length does not match m");
  inv_.reserve(m * (delta + 1));
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t d = 0; d <= delta; ++d) inv_.emplace_back(c, d);
  std::sort(inv_.begin(), inv_.end(), [&](const auto& a, const auto& b) {
    Degree pa = psi(a.first, a.second), pb = psi(b.first, b.second);
    if (pa != pb) return pa < pb;
    return a.first < b.first;
  });
  for (std::size_t i = 0; i < inv_.size(); ++i) phi_[inv_[i].first * (delta_ + 1) + inv_[i].second] = i;
}

PriorityPermutation build_priority(const std::vector<Degree>& s, std::size_t m, std::size_t delta) {
  return PriorityPermutation(s, m, delta);
}

Matrix expand(const PolyMatrix& P, const PriorityPermutation& perm) {
  if (P.cols() != perm.m()) throw std::invalid_argument("expand: column count does not match m");
  if (P.degree() > static_cast<Degree>(perm.delta())) throw std::invalid_argument("expand: degree exceeds delta");
  Matrix V(P.field(), P.rows(), perm.size());
  for (std::size_t i = 0; i < P.rows(); ++i)
    for (std::size_t c = 0; c < P.cols(); ++c) {
      const Poly& p = P(i, c);
      for (std::size_t d = 0; d < p.size(); ++d) V(i, perm.phi(c, d)) = p[d];
    }
  return V;
}

PolyMatrix compress(const Matrix& V, const PriorityPermutation& perm) {
  if (V.cols() != perm.size()) throw std::invalid_argument("compress: width does not match priority");
  const PrimeField& F = V.field();
  PolyMatrix P(F, V.rows(), perm.m());
  for (std::size_t i = 0; i < V.rows(); ++i)
    for (std::size_t c = 0; c < perm.m(); ++c) {
      std::vector<u64> co(perm.delta() + 1);
      for (std::size_t d = 0; d <= perm.delta(); ++d) co[d] = V(i, perm.phi(c, d));
      P(i, c) = Poly(F, std::move(co));
    }
  return P;
}

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::size_t next_power_of_two(std::size_t v) {
  std::size_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

void check_delta(std::size_t delta, std::size_t sigma) {
  if (!is_power_of_two(delta)) throw std::invalid_argument("delta must be a power of two");
  if (delta > 2 * sigma - 1) throw std::invalid_argument("delta out of range");
}

namespace {

struct Cand {
  std::size_t idx, c, d;
};

void check_inputs(const Matrix& E, const MulMat& M, const std::vector<Degree>& s) {
  if (E.cols() != M.order()) throw std::invalid_argument("evaluation matrix width does not match the order of M");
  if (E.cols() == 0) throw std::invalid_argument("empty instance");
  if (s.size() != E.rows()) throw std::invalid_argument("shift length does not match m");
  if (!M.is_jordan() && M.matrix().cols() != M.matrix().rows()) throw std::invalid_argument("M must be square");
}

}  // namespace

RankProfile krylov_rank_profile(const Matrix& E, const MulMat& M, const std::vector<Degree>& s, std::size_t delta) {
  check_inputs(E, M, s);
  check_delta(delta, M.order());
  const std::size_t m = E.rows();
  // Degrees reach 2*delta - 1 in the last doubling step, hence the wider domain.
  PriorityPermutation ext(s, m, 2 * delta), base(s, m, delta);

  std::vector<std::size_t> cs(m);
  std::iota(cs.begin(), cs.end(), 0);
  std::sort(cs.begin(), cs.end(), [&](std::size_t a, std::size_t b) { return ext.phi(a, 0) < ext.phi(b, 0); });
  Matrix E0 = E.select_rows(cs);
  ScalarProfile p0 = scalar_row_rank_profile(E0);

  std::vector<Cand> cur;
  for (std::size_t k : p0.indices) cur.push_back({ext.phi(cs[k], 0), cs[k], 0});
  Matrix rows = E0.select_rows(p0.indices);

  Matrix Mpow;
  if (!M.is_jordan()) Mpow = M.matrix();
  for (std::size_t step = 1; step <= delta && !cur.empty(); step <<= 1) {
    Matrix moved = M.is_jordan() ? act_power(rows, M.jordan(), step) : rows * Mpow;
    std::vector<std::pair<Cand, const u64*>> all;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      all.push_back({cur[k], rows.row(k)});
      Cand nc{ext.phi(cur[k].c, cur[k].d + step), cur[k].c, cur[k].d + step};
      all.push_back({nc, moved.row(k)});
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first.idx < b.first.idx; });
    Matrix stacked(E.field(), all.size(), E.cols());
    for (std::size_t k = 0; k < all.size(); ++k) std::copy(all[k].second, all[k].second + E.cols(), stacked.row(k));
    ScalarProfile p = scalar_row_rank_profile(stacked);
    std::vector<Cand> next;
    for (std::size_t k : p.indices) next.push_back(all[k].first);
    rows = stacked.select_rows(p.indices);
    cur = std::move(next);
    if (!M.is_jordan() && 2 * step <= delta) Mpow = Mpow * Mpow;
  }

  RankProfile out;
  out.r = cur.size();
  for (const auto& c : cur) {
    if (c.d >= delta) throw std::invalid_argument("delta is below the degree of the minimal polynomial");
    out.row_indices.push_back(base.phi(c.c, c.d));
    out.decoded.emplace_back(c.c, c.d);
  }
  out.pivot_rows = rows;
  out.col_indices = scalar_col_rank_profile(rows).indices;
  return out;
}

MinimalDegree minimal_degree(const RankProfile& profile, std::size_t m) {
  MinimalDegree d(m, 0);
  for (const auto& [c, dk] : profile.decoded) d.at(c) = std::max(d.at(c), dk + 1);
  return d;
}

PopovBasis lin_interp_basis(const Matrix& E, const MulMat& M, const std::vector<Degree>& s, std::size_t delta) {
  RankProfile prof = krylov_rank_profile(E, M, s, delta);
  const std::size_t m = E.rows();
  const PrimeField& F = E.field();
  MinimalDegree dl = minimal_degree(prof, m);

  // Row c of T is e_c * M^{delta_c}: the first dependent row of stripe c.
  Matrix T(F, m, E.cols());
  for (std::size_t c = 0; c < m; ++c) {
    Matrix v = E.select_rows({c});
    if (M.is_jordan()) v = act_power(v, M.jordan(), dl[c]);
    else
      for (std::size_t t = 0; t < dl[c]; ++t) v = v * M.matrix();
    std::copy(v.row(0), v.row(0) + E.cols(), T.row(c));
  }

  PolyMatrix P(F, m, m);
  for (std::size_t c = 0; c < m; ++c) P(c, c) = Poly::monomial(F, 1, dl[c]);
  if (prof.r > 0) {
    Matrix C = prof.pivot_rows.select_cols(prof.col_indices);
    Matrix D = T.select_cols(prof.col_indices);
    Matrix R = D * inverse(C);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t k = 0; k < prof.r; ++k) {
        u64 v = R(c, k);
        if (v == 0) continue;
        auto [ck, dk] = prof.decoded[k];
        P(c, ck) -= Poly::monomial(F, v, dk);
      }
  }
  return {std::move(P), std::move(dl)};
}

}  // namespace mib
