#include "mib/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mib/dnc_interp.hpp"

namespace mib {

namespace {

InterpolationInstance pack(const std::vector<std::vector<Poly>>& cols, const std::vector<u64>& xs,
                           const std::vector<std::size_t>& orders, std::size_t m, const PrimeField& F) {
  std::vector<JordanBlock> blocks;
  std::size_t sigma = 0;
  for (std::size_t j = 0; j < orders.size(); ++j)
    if (orders[j] > 0) {
      blocks.push_back({xs[j], orders[j]});
      sigma += orders[j];
    }
  Matrix E(F, m, sigma);
  std::size_t off = 0;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < orders[j]; ++k) E(i, off + k) = cols[j][i][k];
    off += orders[j];
  }
  Normalized nz = normalize(blocks);
  return {permute_cols(E, nz.perm), nz.rep};
}

std::vector<std::vector<Poly>> columns(const PolyMatrix& F, const std::vector<std::size_t>& orders) {
  if (orders.size() != F.cols()) throw std::invalid_argument("reduction: one order per column required");
  std::vector<std::vector<Poly>> cols(F.cols());
  for (std::size_t j = 0; j < F.cols(); ++j)
    for (std::size_t i = 0; i < F.rows(); ++i) {
      if (F(i, j).degree() >= static_cast<Degree>(orders[j]))
        throw std::invalid_argument("reduction: column degree is not below its order");
      cols[j].push_back(F(i, j));
    }
  return cols;
}

bool graded_lex_less(const Exponent& a, const Exponent& b) {
  std::size_t sa = 0, sb = 0;
  for (auto v : a) sa += v;
  for (auto v : b) sb += v;
  if (sa != sb) return sa < sb;
  return a < b;
}

// Every divisor of every element lies in the set.
bool stable_under_division(const std::vector<Exponent>& set) {
  std::set<Exponent> s(set.begin(), set.end());
  for (const Exponent& e : set)
    for (std::size_t l = 0; l < e.size(); ++l)
      if (e[l] > 0) {
        Exponent d = e;
        --d[l];
        if (!s.count(d)) return false;
      }
  return true;
}

}  // namespace

InterpolationInstance hermite_pade_instance(const PolyMatrix& F, const std::vector<std::size_t>& orders) {
  return pack(columns(F, orders), std::vector<u64>(F.cols(), 0), orders, F.rows(), F.field());
}

InterpolationInstance mpade_instance(const PolyMatrix& F, const std::vector<u64>& points,
                                     const std::vector<std::size_t>& orders) {
  if (points.size() != F.cols()) throw std::invalid_argument("mpade: one point per column required");
  std::vector<std::vector<Poly>> cols = columns(F, orders);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (points[j] >= F.field().modulus()) throw std::invalid_argument("mpade: point is not reduced");
    for (auto& f : cols[j]) f = truncate(taylor_shift(f, points[j]), orders[j]);
  }
  return pack(cols, points, orders, F.rows(), F.field());
}

MultivariateReduction multivariate_instance(const PrimeField& F, const MultivariateInstance& mi) {
  const std::size_t r = mi.r, m = mi.gamma.size(), np = mi.points.size();
  if (!mi.weights.empty() && mi.weights.size() != r) throw std::invalid_argument("multivariate: one weight per variable");
  if (mi.supports.size() != np) throw std::invalid_argument("multivariate: one support per point");
  std::set<Exponent> gs;
  for (const Exponent& g : mi.gamma) {
    if (g.size() != r) throw std::invalid_argument("multivariate: exponent length differs from r");
    if (!gs.insert(g).second) throw std::invalid_argument("multivariate: repeated exponent in gamma");
  }
  if (!stable_under_division(mi.gamma)) throw std::invalid_argument("multivariate: gamma is not stable under division");
  std::set<std::pair<u64, std::vector<u64>>> seen;
  for (std::size_t k = 0; k < np; ++k) {
    const auto& pt = mi.points[k];
    if (pt.y.size() != r) throw std::invalid_argument("multivariate: point dimension differs from r");
    if (!seen.insert({pt.x, pt.y}).second) throw std::invalid_argument("multivariate: repeated point");
    for (const Exponent& e : mi.supports[k])
      if (e.size() != r + 1) throw std::invalid_argument("multivariate: support exponent length differs from r + 1");
    if (!stable_under_division(mi.supports[k]))
      throw std::invalid_argument("multivariate: support is not stable under division");
  }

  // Blocks: per point, one per Y-exponent j, of size 1 + max{i : (i, j) in support}.
  struct Blk {
    std::size_t point;
    Exponent j;
    std::size_t size;
  };
  std::vector<Blk> blks;
  for (std::size_t k = 0; k < np; ++k) {
    std::map<Exponent, std::size_t> sz;
    for (const Exponent& e : mi.supports[k]) {
      Exponent j(e.begin() + 1, e.end());
      sz[j] = std::max(sz[j], e[0] + 1);
    }
    std::vector<Exponent> lam;
    for (auto& [j, s] : sz) lam.push_back(j);
    std::sort(lam.begin(), lam.end(), graded_lex_less);
    for (const Exponent& j : lam) blks.push_back({k, j, sz[j]});
  }
  // ell_j(Y^gamma) for j in each block, built by multiplying by one Y_l at a time.
  std::vector<std::map<Exponent, std::size_t>> index(np);
  for (std::size_t b = 0; b < blks.size(); ++b) index[blks[b].point][blks[b].j] = b;
  std::vector<Exponent> order = mi.gamma;
  std::sort(order.begin(), order.end(), graded_lex_less);
  std::map<Exponent, std::vector<u64>> val;
  for (const Exponent& g : order) {
    std::vector<u64> v(blks.size(), 0);
    auto l = std::find_if(g.begin(), g.end(), [](std::size_t e) { return e > 0; });
    if (l == g.end()) {
      for (std::size_t b = 0; b < blks.size(); ++b)
        if (std::all_of(blks[b].j.begin(), blks[b].j.end(), [](std::size_t e) { return e == 0; })) v[b] = 1;
    } else {
      std::size_t li = static_cast<std::size_t>(l - g.begin());
      Exponent prev = g;
      --prev[li];
      const std::vector<u64>& pv = val.at(prev);
      for (std::size_t b = 0; b < blks.size(); ++b) {
        u64 acc = F.mul(F.reduce(mi.points[blks[b].point].y[li]), pv[b]);
        if (blks[b].j[li] > 0) {
          Exponent jm = blks[b].j;
          --jm[li];
          acc = F.add(acc, pv[index[blks[b].point].at(jm)]);
        }
        v[b] = acc;
      }
    }
    val[g] = std::move(v);
  }

  std::vector<JordanBlock> jb;
  std::vector<std::size_t> off;
  std::size_t sigma = 0;
  for (const Blk& b : blks) {
    jb.push_back({F.reduce(mi.points[b.point].x), b.size});
    off.push_back(sigma);
    sigma += b.size;
  }
  Matrix E(F, m, sigma);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t b = 0; b < blks.size(); ++b) E(g, off[b]) = val[mi.gamma[g]][b];
  Normalized nz = normalize(jb);

  Shift s(m, 0);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t l = 0; l < r; ++l) s[g] += (mi.weights.empty() ? 0 : mi.weights[l]) * static_cast<Degree>(mi.gamma[g][l]);
  return {{permute_cols(E, nz.perm), nz.rep}, s};
}

RsInterpolation rs_interpolation(const PrimeField& F, const std::vector<u64>& xs, const std::vector<u64>& ys,
                                 const std::vector<std::size_t>& multiplicities, Degree w, std::size_t m) {
  if (xs.size() != ys.size() || xs.size() != multiplicities.size())
    throw std::invalid_argument("rs_interpolation: points, values and multiplicities differ in length");
  if (m == 0) throw std::invalid_argument("rs_interpolation: list size must be positive");
  if (w < 0) throw std::invalid_argument("rs_interpolation: weight must be nonnegative");
  MultivariateInstance mi;
  mi.r = 1;
  for (std::size_t j = 0; j < m; ++j) mi.gamma.push_back({j});
  mi.weights = {w};
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (multiplicities[k] == 0) throw std::invalid_argument("rs_interpolation: multiplicity must be positive");
    mi.points.push_back({xs[k], {ys[k]}});
    std::vector<Exponent> mu;
    for (std::size_t i = 0; i < multiplicities[k]; ++i)
      for (std::size_t j = 0; i + j < multiplicities[k]; ++j) mu.push_back({i, j});
    mi.supports.push_back(std::move(mu));
  }
  MultivariateReduction red = multivariate_instance(F, mi);
  PolyMatrix B = interpolation_basis(red.inst.E, red.inst.J, red.s);
  DegreeVector d = rdeg_s(B, red.s);
  std::size_t best = 0;
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] < d[best]) best = i;
  return {B.select_rows({best}), best, B};
}

ListSize rs_list_size(std::size_t sigma, Degree w) {
  if (w < 1) throw std::invalid_argument("rs_list_size: weight must be positive");
  auto unknowns = [&](Degree D) {
    std::size_t n = 0;
    for (Degree j = 0; j <= D / w; ++j) n += static_cast<std::size_t>(D - j * w + 1);
    return n;
  };
  Degree D = 0;
  while (unknowns(D) <= sigma) ++D;
  return {D, static_cast<std::size_t>(D / w) + 1};
}

}  // namespace mib
