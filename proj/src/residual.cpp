#include "mib/residual.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mib/unbalanced_mul.hpp"

namespace mib {

namespace {

Poly power(Poly f, std::size_t k) {
  Poly r = Poly::constant(f.field(), 1);
  for (; k; k >>= 1) {
    if (k & 1) r = poly_mul(r, f);
    if (k > 1) f = poly_mul(f, f);
  }
  return r;
}

// (X - x)^k
Poly linear_power(const PrimeField& F, u64 x, std::size_t k) { return power(Poly::x_minus(F, x), k); }

// A column range of E as a column of m polynomials.
std::vector<Poly> column_polys(const Matrix& E, std::size_t off, std::size_t sz) {
  std::vector<Poly> out;
  out.reserve(E.rows());
  for (std::size_t c = 0; c < E.rows(); ++c) {
    std::vector<u64> v(sz);
    for (std::size_t j = 0; j < sz; ++j) v[j] = E(c, off + j);
    out.emplace_back(E.field(), std::move(v));
  }
  return out;
}

void write_block(Matrix& out, std::size_t row, std::size_t off, std::size_t sz, const Poly& f) {
  for (std::size_t j = 0; j < sz; ++j) out(row, off + j) = f[j];
}

void check_dims(const PolyMatrix& P, const Matrix& E, std::size_t sigma) {
  if (P.cols() != E.rows() || E.cols() != sigma) throw std::invalid_argument("residual: dimension mismatch");
}

// A block referenced by its eigenvalue, size and first column in E.
struct Cell {
  u64 x;
  std::size_t size, offset;
};

// Shifting strategy over cells sharing eigenvalues: P(X + x) mod X^{max size}
// once per eigenvalue, then a truncated product per block.
void shifting(const std::vector<Cell>& cells, const PolyMatrix& P, const Matrix& E, Matrix& out) {
  const PrimeField& F = P.field();
  std::map<u64, std::vector<const Cell*>> by_x;
  for (const Cell& c : cells) by_x[c.x].push_back(&c);
  std::vector<u64> xs;
  std::vector<Poly> moduli;
  std::vector<std::size_t> smax;
  for (auto& [x, v] : by_x) {
    std::size_t s = 0;
    for (const Cell* c : v) s = std::max(s, c->size);
    xs.push_back(x);
    smax.push_back(s);
    moduli.push_back(linear_power(F, x, s));
  }
  // shifted[i] = P(X + x_i) mod X^{smax_i}
  std::vector<PolyMatrix> shifted(xs.size(), PolyMatrix(F, P.rows(), P.cols()));
  for (std::size_t a = 0; a < P.rows(); ++a)
    for (std::size_t b = 0; b < P.cols(); ++b) {
      if (P(a, b).is_zero()) continue;
      std::vector<Poly> rem = multi_mod(P(a, b), moduli);
      for (std::size_t i = 0; i < xs.size(); ++i) shifted[i](a, b) = taylor_shift(rem[i], xs[i]);
    }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& blocks = by_x[xs[i]];
    PolyMatrix cols(F, P.cols(), blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      std::vector<Poly> e = column_polys(E, blocks[j]->offset, blocks[j]->size);
      for (std::size_t c = 0; c < P.cols(); ++c) cols(c, j) = std::move(e[c]);
    }
    PolyMatrix prod = shifted[i] * cols;
    for (std::size_t j = 0; j < blocks.size(); ++j)
      for (std::size_t r = 0; r < P.rows(); ++r)
        write_block(out, r, blocks[j]->offset, blocks[j]->size, truncate(prod(r, j), blocks[j]->size));
  }
}

// CRT strategy. Each group is one bucket; slot j of a group gathers the j-th
// block of every eigenvalue. All slots of all groups share one product by P.
void crt_groups(const std::vector<std::vector<Cell>>& groups, const PolyMatrix& P, const Matrix& E, Matrix& out) {
  const PrimeField& F = P.field();
  struct Slot {
    std::vector<const Cell*> cells;
    std::vector<Poly> moduli;
  };
  std::vector<Slot> slots;
  for (const auto& g : groups) {
    std::map<u64, std::vector<const Cell*>> by_x;
    for (const Cell& c : g) by_x[c.x].push_back(&c);
    std::size_t rho = 0;
    for (auto& [x, v] : by_x) {
      std::stable_sort(v.begin(), v.end(), [](const Cell* a, const Cell* b) { return a->size > b->size; });
      rho = std::max(rho, v.size());
    }
    // Eigenvalues with fewer than rho blocks are padded with empty blocks,
    // which simply do not take part in their slot.
    for (std::size_t j = 0; j < rho; ++j) {
      Slot s;
      for (auto& [x, v] : by_x)
        if (j < v.size()) {
          s.cells.push_back(v[j]);
          s.moduli.push_back(linear_power(F, x, v[j]->size));
        }
      slots.push_back(std::move(s));
    }
  }
  if (slots.empty()) return;

  const std::size_t m = P.cols();
  PolyMatrix G(F, m, slots.size());
  for (std::size_t j = 0; j < slots.size(); ++j) {
    const Slot& s = slots[j];
    std::vector<std::vector<Poly>> res(m);
    for (const Cell* c : s.cells) {
      std::vector<Poly> e = column_polys(E, c->offset, c->size);
      for (std::size_t r = 0; r < m; ++r) res[r].push_back(taylor_shift(e[r], F.neg(c->x)));
    }
    for (std::size_t r = 0; r < m; ++r) G(r, j) = crt(res[r], s.moduli);
  }

  Degree total = sum_nonneg(rdeg(P));
  std::size_t d = static_cast<std::size_t>(std::max<Degree>(1, (total + static_cast<Degree>(m) - 1) / static_cast<Degree>(std::max<std::size_t>(m, 1))));
  PartialLinearization lin = partial_linearize(P, d);
  PolyMatrix prod = partial_compress(lin.expanded * G, lin);

  for (std::size_t j = 0; j < slots.size(); ++j) {
    const Slot& s = slots[j];
    for (std::size_t r = 0; r < P.rows(); ++r) {
      if (prod(r, j).is_zero()) continue;
      std::vector<Poly> rem = multi_mod(prod(r, j), s.moduli);
      for (std::size_t i = 0; i < s.cells.size(); ++i)
        write_block(out, r, s.cells[i]->offset, s.cells[i]->size, taylor_shift(rem[i], s.cells[i]->x));
    }
  }
}

std::vector<Cell> cells_of(const JordanRep& J) {
  std::vector<Cell> cells;
  std::vector<std::size_t> off = J.offsets();
  for (std::size_t b = 0; b < J.blocks.size(); ++b) cells.push_back({J.blocks[b].eigenvalue, J.blocks[b].size, off[b]});
  return cells;
}

std::size_t max_repetition(const JordanRep& J) {
  std::map<u64, std::size_t> cnt;
  std::size_t r = 0;
  for (const auto& b : J.blocks) r = std::max(r, ++cnt[b.eigenvalue]);
  return r;
}

}  // namespace

ResidualPlan plan_residuals(const JordanRep& J, std::size_t m) {
  const std::size_t sigma = J.order();
  ResidualPlan plan;
  // Buckets k = 0..floor(log2(sigma/m)), empty when sigma < m.
  std::size_t nk = 0;
  if (m > 0 && sigma >= m)
    while ((m << nk) <= sigma) ++nk;
  std::vector<std::vector<std::size_t>> by_k(nk);
  std::vector<std::size_t> inf;
  for (std::size_t b = 0; b < J.blocks.size(); ++b) {
    std::size_t sz = J.blocks[b].size, k = 0;
    while ((std::size_t{2} << k) <= sz) ++k;
    if (k < nk)
      by_k[k].push_back(b);
    else
      inf.push_back(b);
  }
  for (std::size_t k = 0; k < nk; ++k) {
    std::map<u64, std::size_t> rep;
    for (std::size_t b : by_k[k]) ++rep[J.blocks[b].eigenvalue];
    ResidualBucket hi{k, false, ResidualStrategy::Shifting, {}}, lo{k, false, ResidualStrategy::Crt, {}};
    for (std::size_t b : by_k[k]) (rep[J.blocks[b].eigenvalue] > m ? hi : lo).blocks.push_back(b);
    if (!hi.blocks.empty()) plan.buckets.push_back(std::move(hi));
    if (!lo.blocks.empty()) plan.buckets.push_back(std::move(lo));
  }
  if (!inf.empty()) plan.buckets.push_back({nk, true, ResidualStrategy::Crt, std::move(inf)});
  return plan;
}

Matrix compute_residuals(const JordanRep& J, const PolyMatrix& P, const Matrix& E) {
  check_dims(P, E, J.order());
  Matrix out(P.field(), P.rows(), E.cols());
  std::vector<Cell> all = cells_of(J);
  std::vector<std::vector<Cell>> crt_buckets;
  for (const ResidualBucket& b : plan_residuals(J, P.cols()).buckets) {
    std::vector<Cell> cells;
    for (std::size_t i : b.blocks) cells.push_back(all[i]);
    if (b.strategy == ResidualStrategy::Shifting)
      shifting(cells, P, E, out);
    else
      crt_buckets.push_back(std::move(cells));
  }
  crt_groups(crt_buckets, P, E, out);
  return out;
}

Matrix residual_by_shifting(const JordanRep& bucket, const PolyMatrix& P, const Matrix& E) {
  check_dims(P, E, bucket.order());
  std::map<u64, std::size_t> rep;
  for (const auto& b : bucket.blocks) ++rep[b.eigenvalue];
  for (auto& [x, r] : rep)
    if (r <= P.cols()) throw std::invalid_argument("residual_by_shifting: eigenvalue repeats at most m times");
  Matrix out(P.field(), P.rows(), E.cols());
  shifting(cells_of(bucket), P, E, out);
  return out;
}

Matrix residual_by_crt(const JordanRep& bucket, const PolyMatrix& P, const Matrix& E) {
  check_dims(P, E, bucket.order());
  if (max_repetition(bucket) > P.cols()) throw std::invalid_argument("residual_by_crt: eigenvalue repeats more than m times");
  Matrix out(P.field(), P.rows(), E.cols());
  crt_groups({cells_of(bucket)}, P, E, out);
  return out;
}

}  // namespace mib
