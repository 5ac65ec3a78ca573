#include "mib/nullspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mib/approx_basis.hpp"
#include "mib/unbalanced_mul.hpp"

namespace mib {

namespace {

PolyMatrix product(const PolyMatrix& B, const PolyMatrix& A) { return unbalanced_mul(B, A, unbalanced_xi(B, A)); }

NullspaceBasis solve(const PolyMatrix& F, const Shift& s, std::vector<NullspaceNode>* trace);

// Sorts s, permutes the rows of F to match, and permutes the result back.
NullspaceBasis sorted_solve(const PolyMatrix& F, const Shift& s, std::vector<NullspaceNode>* trace) {
  const std::size_t m = F.rows();
  if (F.cols() > m) throw std::domain_error("nullspace: input is not of full rank");
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  Shift ss(m);
  for (std::size_t i = 0; i < m; ++i) ss[i] = s[perm[i]];
  NullspaceBasis r = solve(F.select_rows(perm), ss, trace);
  PolyMatrix N(F.field(), r.N.rows(), m);
  for (std::size_t i = 0; i < r.N.rows(); ++i)
    for (std::size_t j = 0; j < m; ++j) N(i, perm[j]) = r.N(i, j);
  return {N, r.degrees};
}

NullspaceBasis solve(const PolyMatrix& F, const Shift& s, std::vector<NullspaceNode>* trace) {
  const PrimeField& K = F.field();
  const std::size_t m = F.rows(), n = F.cols();
  if (n == 0) return {PolyMatrix::identity(K, m), s};

  Degree rho = 0;
  for (std::size_t i = m - n; i < m; ++i) rho += s[i];
  const Degree lambda = std::max<Degree>(1, (rho + static_cast<Degree>(n) - 1) / static_cast<Degree>(n));
  const std::size_t order = static_cast<std::size_t>(3 * lambda);

  PolyMatrix P = pm_basis({F, std::vector<std::size_t>(n, order), s});
  DegreeVector pd = rdeg_s(P, s);
  std::vector<std::size_t> rows(m);
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) { return pd[a] < pd[b]; });
  P = P.select_rows(rows);

  PolyMatrix PF = product(P, F);
  std::vector<std::size_t> r1, r2;
  for (std::size_t i = 0; i < m; ++i) (PF.row_is_zero(i) ? r1 : r2).push_back(i);
  PolyMatrix P1 = P.select_rows(r1), P2 = P.select_rows(r2);
  if (trace) trace->push_back({n, r2.size()});

  PolyMatrix N;
  if (n == 1) {
    N = P1;
  } else {
    DegreeVector t = rdeg_s(P2, s);
    for (auto& v : t) {
      v -= 3 * lambda;
      if (v < 0) throw std::domain_error("nullspace: input is not of full rank");
    }
    PolyMatrix G = div_x(PF.select_rows(r2), order);
    PolyMatrix G1 = G.col_range(0, n / 2), G2 = G.col_range(n / 2, n);
    NullspaceBasis n1 = sorted_solve(G1, t, trace);
    NullspaceBasis n2 = sorted_solve(product(n1.N, G2), n1.degrees, trace);
    N = vstack(P1, product(n2.N, product(n1.N, P2)));
  }
  if (N.rows() != m - n) throw std::domain_error("nullspace: input is not of full rank");
  return {N, rdeg_s(N, s)};
}

}  // namespace

NullspaceBasis minimal_nullspace_basis(const PolyMatrix& F, const Shift& s, std::vector<NullspaceNode>* trace) {
  check_shift(s, F.rows());
  if (F.cols() > F.rows()) throw std::invalid_argument("nullspace: more columns than rows");
  DegreeVector d = rdeg(F);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > s[i]) throw std::invalid_argument("nullspace: shift does not bound the row degrees");
  return sorted_solve(F, s, trace);
}

}  // namespace mib
