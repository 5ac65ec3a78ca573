#include "mib/approx_basis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mib {

namespace {

void check_instance(const ApproximantInstance& inst) {
  if (inst.orders.size() != inst.F.cols()) throw std::invalid_argument("approximant: one order per column required");
  check_shift(inst.s, inst.F.rows());
}

// Columns reduced mod X^{orders[j]}; this leaves the module unchanged.
PolyMatrix reduced_input(const ApproximantInstance& inst) {
  PolyMatrix F = inst.F;
  for (std::size_t i = 0; i < F.rows(); ++i)
    for (std::size_t j = 0; j < F.cols(); ++j) F(i, j) = truncate(F(i, j), inst.orders[j]);
  return F;
}

}  // namespace

PolyMatrix mbasis(const ApproximantInstance& inst) {
  check_instance(inst);
  const PrimeField& K = inst.F.field();
  const std::size_t m = inst.F.rows(), n = inst.F.cols();
  const std::size_t sigma = inst.orders.empty() ? 0 : *std::max_element(inst.orders.begin(), inst.orders.end());
  PolyMatrix P = PolyMatrix::identity(K, m);
  PolyMatrix Res = reduced_input(inst);  // P * F, truncated at sigma
  Shift t = inst.s;

  for (std::size_t k = 0; k < sigma; ++k) {
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < n; ++j)
      if (inst.orders[j] > k) active.push_back(j);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });

    struct Piv {
      std::size_t row, col;
      std::vector<u64> vec, comb;
    };
    std::vector<Piv> pivots;
    std::vector<std::pair<std::size_t, std::vector<u64>>> kernel;  // row, combination
    for (std::size_t i : order) {
      std::vector<u64> v(active.size()), comb(m, 0);
      for (std::size_t a = 0; a < active.size(); ++a) v[a] = Res(i, active[a])[k];
      comb[i] = 1;
      for (const Piv& p : pivots) {
        if (v[p.col] == 0) continue;
        u64 f = K.mul(v[p.col], K.inv(p.vec[p.col]));
        for (std::size_t a = 0; a < v.size(); ++a) v[a] = K.sub(v[a], K.mul(f, p.vec[a]));
        for (std::size_t a = 0; a < m; ++a) comb[a] = K.sub(comb[a], K.mul(f, p.comb[a]));
      }
      auto nz = std::find_if(v.begin(), v.end(), [](u64 x) { return x != 0; });
      if (nz == v.end())
        kernel.push_back({i, std::move(comb)});
      else
        pivots.push_back({i, static_cast<std::size_t>(nz - v.begin()), std::move(v), std::move(comb)});
    }

    PolyMatrix P2 = P, R2 = Res;
    auto combine = [&](const PolyMatrix& src, PolyMatrix& dst, std::size_t i, const std::vector<u64>& comb) {
      for (std::size_t c = 0; c < src.cols(); ++c) {
        Poly acc(K);
        for (std::size_t l = 0; l < m; ++l)
          if (comb[l]) acc += src(l, c).scaled(comb[l]);
        dst(i, c) = std::move(acc);
      }
    };
    for (const auto& [i, comb] : kernel) {
      combine(P, P2, i, comb);
      combine(Res, R2, i, comb);
    }
    for (const Piv& p : pivots) {
      for (std::size_t c = 0; c < m; ++c) P2(p.row, c) = shift_up(P(p.row, c), 1);
      for (std::size_t c = 0; c < n; ++c) R2(p.row, c) = truncate(shift_up(Res(p.row, c), 1), sigma);
      t[p.row] += 1;
    }
    P = std::move(P2);
    Res = std::move(R2);
  }
  return P;
}

PolyMatrix pm_basis(const ApproximantInstance& inst) {
  check_instance(inst);
  const std::size_t sigma = inst.orders.empty() ? 0 : *std::max_element(inst.orders.begin(), inst.orders.end());
  if (sigma <= kMBasisThreshold) return mbasis(inst);
  PolyMatrix F = reduced_input(inst);
  // Pad to a uniform order: p F_j = 0 mod X^{s_j} iff p F_j X^{s - s_j} = 0 mod X^s.
  for (std::size_t j = 0; j < F.cols(); ++j)
    for (std::size_t i = 0; i < F.rows(); ++i) F(i, j) = shift_up(F(i, j), sigma - inst.orders[j]);
  const std::size_t h = sigma / 2;
  ApproximantInstance first{F, std::vector<std::size_t>(F.cols(), h), inst.s};
  PolyMatrix P1 = pm_basis(first);
  PolyMatrix G = truncate(P1 * F, sigma);
  G = div_x(G, h);
  ApproximantInstance second{G, std::vector<std::size_t>(F.cols(), sigma - h), rdeg_s(P1, inst.s)};
  return pm_basis(second) * P1;
}

bool is_approximant_basis_of(const PolyMatrix& P, const ApproximantInstance& inst) {
  PolyMatrix R = P * inst.F;
  for (std::size_t i = 0; i < R.rows(); ++i)
    for (std::size_t j = 0; j < R.cols(); ++j)
      if (!truncate(R(i, j), inst.orders[j]).is_zero()) return false;
  return true;
}

}  // namespace mib
