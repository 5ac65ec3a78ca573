#include "mib/unbalanced_mul.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mib {

PartialLinearization partial_linearize(const PolyMatrix& B, std::size_t d) {
  const PrimeField& F = B.field();
  PartialLinearization lin;
  lin.d = d;
  lin.row_map.resize(B.rows());
  std::vector<std::pair<std::size_t, std::size_t>> pieces;  // (row, chunk)
  for (std::size_t i = 0; i < B.rows(); ++i) {
    Degree di = B.row_degree(i);
    std::size_t alpha = di == kMinusInf ? 1 : 1 + static_cast<std::size_t>(di) / (d + 1);
    for (std::size_t j = 0; j < alpha; ++j) {
      lin.row_map[i].push_back(pieces.size());
      pieces.push_back({i, j});
    }
  }
  lin.expanded = PolyMatrix(F, pieces.size(), B.cols());
  for (std::size_t r = 0; r < pieces.size(); ++r) {
    auto [i, j] = pieces[r];
    for (std::size_t c = 0; c < B.cols(); ++c) lin.expanded(r, c) = slice(B(i, c), j * (d + 1), (j + 1) * (d + 1));
  }
  return lin;
}

PolyMatrix partial_compress(const PolyMatrix& prod, const PartialLinearization& lin) {
  if (prod.rows() != lin.expanded.rows()) throw std::invalid_argument("partial_compress: row count mismatch");
  PolyMatrix out(prod.field(), lin.row_map.size(), prod.cols());
  for (std::size_t i = 0; i < lin.row_map.size(); ++i)
    for (std::size_t j = 0; j < lin.row_map[i].size(); ++j)
      for (std::size_t c = 0; c < prod.cols(); ++c)
        out(i, c) += shift_up(prod(lin.row_map[i][j], c), j * (lin.d + 1));
  return out;
}

namespace {

Degree ceil_div(Degree a, Degree b) { return (a + b - 1) / b; }

void check_unbalanced(const PolyMatrix& B, const PolyMatrix& A, Degree xi) {
  if (B.cols() != A.rows()) throw std::invalid_argument("unbalanced_mul: dimension mismatch");
  DegreeVector d = rdeg(A);
  if (xi < static_cast<Degree>(A.rows())) throw std::logic_error("unbalanced_mul: xi < m");
  if (sum_nonneg(d) > xi) throw std::logic_error("unbalanced_mul: sum rdeg(A) exceeds xi");
  if (sum_nonneg(rdeg_s(B, d)) > xi) throw std::logic_error("unbalanced_mul: sum rdeg_d(B) exceeds xi");
}

}  // namespace

Degree unbalanced_xi(const PolyMatrix& B, const PolyMatrix& A) {
  DegreeVector d = rdeg(A);
  return std::max({static_cast<Degree>(std::max<std::size_t>(A.rows(), 1)), sum_nonneg(d), sum_nonneg(rdeg_s(B, d))});
}

std::vector<UnbalancedBucket> plan_unbalanced(const PolyMatrix& B, const PolyMatrix& A, Degree xi) {
  check_unbalanced(B, A, xi);
  const std::size_t m = A.rows();
  DegreeVector d = rdeg(A);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  std::size_t ell = 0;
  while ((std::size_t{1} << ell) < m) ++ell;
  std::vector<UnbalancedBucket> buckets(ell + 1);
  const Degree M = static_cast<Degree>(std::max<std::size_t>(m, 1));
  for (std::size_t i = 0; i <= ell; ++i) buckets[i].degree_bound = static_cast<std::size_t>(ceil_div(xi << i, M));
  for (std::size_t r : order) {
    std::size_t i = 0;
    if (d[r] != kMinusInf)
      while (d[r] * M > (xi << i)) ++i;
    buckets[i].a_rows.push_back(r);
  }
  for (auto& b : buckets) {
    if (b.a_rows.empty()) continue;
    PolyMatrix Bi = B.select_cols(b.a_rows);
    for (std::size_t r = 0; r < Bi.rows(); ++r)
      if (!Bi.row_is_zero(r)) b.b_nonzero.push_back(r);
  }
  return buckets;
}

PolyMatrix unbalanced_mul(const PolyMatrix& B, const PolyMatrix& A, Degree xi) {
  PolyMatrix out(B.field(), B.rows(), A.cols());
  for (const UnbalancedBucket& b : plan_unbalanced(B, A, xi)) {
    if (b.a_rows.empty() || b.b_nonzero.empty()) continue;
    PolyMatrix Bi = B.select_rows(b.b_nonzero).select_cols(b.a_rows);
    PartialLinearization lin = partial_linearize(Bi, b.degree_bound);
    PolyMatrix Pi = partial_compress(lin.expanded * A.select_rows(b.a_rows), lin);
    for (std::size_t r = 0; r < b.b_nonzero.size(); ++r)
      for (std::size_t c = 0; c < A.cols(); ++c) out(b.b_nonzero[r], c) += Pi(r, c);
  }
  return out;
}

}  // namespace mib
