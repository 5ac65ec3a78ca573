#pragma once

#include <vector>

#include "mib/jordan.hpp"
#include "mib/polymat.hpp"

namespace mib {

// p F_j = 0 mod X^{orders[j]}: one nilpotent block per column.
InterpolationInstance hermite_pade_instance(const PolyMatrix& F, const std::vector<std::size_t>& orders);
// p F_j = 0 mod (X - points[j])^{orders[j]}.
InterpolationInstance mpade_instance(const PolyMatrix& F, const std::vector<u64>& points,
                                     const std::vector<std::size_t>& orders);

using Exponent = std::vector<std::size_t>;

struct InterpolationPoint {
  u64 x;
  std::vector<u64> y;  // length r
};

// Q = sum_gamma p_gamma(X) Y^gamma must have no monomial X^i Y^j with
// (i, j) in supports[k] once re-centred at points[k].
struct MultivariateInstance {
  std::size_t r = 1;
  std::vector<Exponent> gamma;                  // each of length r
  std::vector<InterpolationPoint> points;
  std::vector<std::vector<Exponent>> supports;  // each exponent (i, j_1..j_r)
  std::vector<Degree> weights;                  // length r
};

struct MultivariateReduction {
  InterpolationInstance inst;
  Shift s;
};

MultivariateReduction multivariate_instance(const PrimeField& F, const MultivariateInstance& mi);

struct RsInterpolation {
  PolyMatrix Q;      // 1 x m, Q = sum_j Q(0, j) Y^j
  std::size_t row;   // index of Q in the basis
  PolyMatrix basis;  // m x m
};

// Reed-Solomon (or soft-decision) interpolation with one multiplicity per point.
RsInterpolation rs_interpolation(const PrimeField& F, const std::vector<u64>& xs, const std::vector<u64>& ys,
                                 const std::vector<std::size_t>& multiplicities, Degree w, std::size_t m);

struct ListSize {
  Degree weighted_degree;  // smallest D with more than sigma unknowns
  std::size_t m;
};
// Unknowns of weighted degree <= D: sum_{j <= D/w} (D - j w + 1); requires w >= 1.
ListSize rs_list_size(std::size_t sigma, Degree w);

}  // namespace mib
