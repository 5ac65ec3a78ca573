#include "mib/jordan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mib {

std::size_t JordanRep::order() const {
  std::size_t s = 0;
  for (const auto& b : blocks) s += b.size;
  return s;
}

std::vector<std::size_t> JordanRep::offsets() const {
  std::vector<std::size_t> off;
  std::size_t s = 0;
  for (const auto& b : blocks) {
    off.push_back(s);
    s += b.size;
  }
  return off;
}

Normalized normalize(const std::vector<JordanBlock>& blocks) {
  std::map<u64, std::vector<std::size_t>> groups;  // eigenvalue -> block indices, input order
  std::vector<std::size_t> start;
  std::size_t s = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size == 0) throw std::invalid_argument("Jordan block of size zero");
    groups[blocks[b].eigenvalue].push_back(b);
    start.push_back(s);
    s += blocks[b].size;
  }
  std::vector<std::pair<u64, std::vector<std::size_t>>> ordered(groups.begin(), groups.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.second.size() > b.second.size(); });
  Normalized out;
  for (auto& [x, idx] : ordered) {
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return blocks[a].size > blocks[b].size; });
    for (std::size_t b : idx) {
      out.rep.blocks.push_back(blocks[b]);
      for (std::size_t t = 0; t < blocks[b].size; ++t) out.perm.push_back(start[b] + t);
    }
  }
  return out;
}

bool is_standard(const JordanRep& J) {
  Normalized n = normalize(J.blocks);
  return n.rep == J;
}

std::size_t minpoly_degree(const JordanRep& J) {
  std::map<u64, std::size_t> mx;
  for (const auto& b : J.blocks) mx[b.eigenvalue] = std::max(mx[b.eigenvalue], b.size);
  std::size_t d = 0;
  for (const auto& [x, s] : mx) d += s;
  return d;
}

Matrix dense(const JordanRep& J, const PrimeField& F) {
  std::size_t n = J.order();
  Matrix M(F, n, n);
  std::size_t off = 0;
  for (const auto& b : J.blocks) {
    for (std::size_t t = 0; t < b.size; ++t) {
      M(off + t, off + t) = F.reduce(b.eigenvalue);
      if (t + 1 < b.size) M(off + t, off + t + 1) = 1;
    }
    off += b.size;
  }
  return M;
}

Matrix act(const Matrix& E, const JordanRep& J) {
  if (E.cols() != J.order()) throw std::invalid_argument("act: dimension mismatch");
  const PrimeField& F = E.field();
  Matrix R(F, E.rows(), E.cols());
  for (std::size_t i = 0; i < E.rows(); ++i) {
    const u64* e = E.row(i);
    u64* out = R.row(i);
    std::size_t off = 0;
    for (const auto& b : J.blocks) {
      u64 x = b.eigenvalue;
      out[off] = F.mul(x, e[off]);
      for (std::size_t t = 1; t < b.size; ++t) out[off + t] = F.add(e[off + t - 1], F.mul(x, e[off + t]));
      off += b.size;
    }
  }
  return R;
}

Matrix act_power(const Matrix& E, const JordanRep& J, std::size_t k) {
  if (E.cols() != J.order()) throw std::invalid_argument("act_power: dimension mismatch");
  const PrimeField& F = E.field();
  Matrix R(F, E.rows(), E.cols());
  std::size_t off = 0;
  for (const auto& b : J.blocks) {
    Poly g = shifted_power_trunc(F, b.eigenvalue, k, b.size);
    for (std::size_t i = 0; i < E.rows(); ++i) {
      const u64* e = E.row(i);
      Poly f(F, std::vector<u64>(e + off, e + off + b.size));
      Poly h = mul_trunc(f, g, b.size);
      for (std::size_t t = 0; t < b.size; ++t) R(i, off + t) = h[t];
    }
    off += b.size;
  }
  return R;
}

Split split(const JordanRep& J, std::size_t k) {
  std::size_t sigma = J.order();
  if (k == 0 || k >= sigma) throw std::invalid_argument("split point out of range");
  std::vector<JordanBlock> lead, trail;
  std::size_t off = 0;
  for (const auto& b : J.blocks) {
    if (off + b.size <= k) lead.push_back(b);
    else if (off >= k) trail.push_back(b);
    else {
      lead.push_back({b.eigenvalue, k - off});
      trail.push_back({b.eigenvalue, off + b.size - k});
    }
    off += b.size;
  }
  Normalized a = normalize(lead), c = normalize(trail);
  return {a.rep, c.rep, a.perm, c.perm};
}

Matrix permute_cols(const Matrix& E, const std::vector<std::size_t>& perm) { return E.select_cols(perm); }

std::size_t MulMat::order() const { return is_jordan() ? jordan().order() : matrix().rows(); }

Matrix MulMat::to_dense(const PrimeField& F) const { return is_jordan() ? dense(jordan(), F) : matrix(); }

Matrix MulMat::apply(const Matrix& E) const { return is_jordan() ? act(E, jordan()) : E * matrix(); }

}  // namespace mib
