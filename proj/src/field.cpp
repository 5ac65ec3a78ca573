#include "mib/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mib {

namespace {

u64 mulmod128(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod128(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod128(r, a, m);
    a = mulmod128(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Deterministic base set for all 64-bit n.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod128(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p >= (u64{1} << 62)) throw std::invalid_argument("p exceeds 62 bits");
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (p == 2) throw std::invalid_argument("p must be odd");
  u64 q = p - 1;
  while ((q & 1) == 0) {
    q >>= 1;
    ++two_adicity_;
  }
  // Any quadratic non-residue raised to the odd part generates the 2-Sylow subgroup.
  for (u64 a = 2;; ++a) {
    if (pow(a, (p - 1) / 2) == p - 1) {
      max_root_ = pow(a, q);
      break;
    }
  }
}

u64 PrimeField::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 PrimeField::inv(u64 a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<u64>(t);
}

u64 PrimeField::from_int(std::int64_t v) const {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 PrimeField::root_of_unity(int k) const {
  if (k < 0 || k > two_adicity_) throw std::invalid_argument("no root of unity of that order");
  u64 w = max_root_;
  for (int i = k; i < two_adicity_; ++i) w = mul(w, w);
  return w;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const PrimeField& F, std::vector<u64> coeffs) : F_(F), c_(std::move(coeffs)) {
  for (auto& c : c_) c = F_.reduce(c);
  trim();
}

Poly Poly::constant(const PrimeField& F, u64 c) { return Poly(F, {c}); }

Poly Poly::monomial(const PrimeField& F, u64 c, std::size_t k) {
  std::vector<u64> v(k + 1, 0);
  v[k] = c;
  return Poly(F, std::move(v));
}

Poly Poly::x_minus(const PrimeField& F, u64 a) { return Poly(F, {F.neg(F.reduce(a)), 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 Poly::eval(u64 x) const {
  u64 r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = F_.add(F_.mul(r, x), c_[i]);
  return r;
}

Poly& Poly::operator+=(const Poly& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), 0);
  for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] = F_.add(c_[i], g.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), 0);
  for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] = F_.sub(c_[i], g.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& g) {
  *this = poly_mul(*this, g);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = F_.neg(c);
  return r;
}

Poly Poly::scaled(u64 a) const {
  a = F_.reduce(a);
  if (a == 0) return Poly(F_);
  Poly r = *this;
  for (auto& c : r.c_) c = F_.mul(c, a);
  return r;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << (i == 0 || c_[i] != 1 ? "*X" : "X");
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly operator+(Poly f, const Poly& g) { return f += g; }
Poly operator-(Poly f, const Poly& g) { return f -= g; }
Poly operator*(const Poly& f, const Poly& g) { return poly_mul(f, g); }

// ---------------------------------------------------------------- multiplication

namespace {

using Vec = std::vector<u64>;

void school_into(const PrimeField& F, const u64* a, std::size_t na, const u64* b, std::size_t nb,
                 u64* out) {
  // out has na+nb-1 slots and is accumulated into.
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
}

// Karatsuba on equal-length operands (n coefficients each); out gets 2n-1 slots, overwritten.
void kara_rec(const PrimeField& F, const u64* a, const u64* b, std::size_t n, u64* out) {
  if (n < kSchoolbookThreshold) {
    std::fill(out, out + 2 * n - 1, 0);
    school_into(F, a, n, b, n, out);
    return;
  }
  std::size_t h = n / 2, hi = n - h;
  Vec z0(2 * h - 1), z2(2 * hi - 1), z1(2 * hi - 1), sa(hi), sb(hi);
  kara_rec(F, a, b, h, z0.data());
  kara_rec(F, a + h, b + h, hi, z2.data());
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = a[h + i];
    sb[i] = b[h + i];
    if (i < h) {
      sa[i] = F.add(sa[i], a[i]);
      sb[i] = F.add(sb[i], b[i]);
    }
  }
  kara_rec(F, sa.data(), sb.data(), hi, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);
  std::fill(out, out + 2 * n - 1, 0);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = F.add(out[2 * h + i], z2[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[h + i] = F.add(out[h + i], z1[i]);
}

void ntt(const PrimeField& F, Vec& a, bool inverse) {
  std::size_t n = a.size();
  int logn = 0;
  while ((std::size_t{1} << logn) < n) ++logn;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int s = 1; s <= logn; ++s) {
    std::size_t len = std::size_t{1} << s;
    u64 w = F.root_of_unity(s);
    if (inverse) w = F.inv(w);
    Vec tw(len / 2);
    tw[0] = 1;
    for (std::size_t k = 1; k < len / 2; ++k) tw[k] = F.mul(tw[k - 1], w);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        u64 u = a[i + k], v = F.mul(a[i + k + len / 2], tw[k]);
        a[i + k] = F.add(u, v);
        a[i + k + len / 2] = F.sub(u, v);
      }
    }
  }
  if (inverse) {
    u64 ninv = F.inv(F.reduce(n));
    for (auto& x : a) x = F.mul(x, ninv);
  }
}

}  // namespace

bool ntt_supported(const PrimeField& F, std::size_t result_len) {
  std::size_t n = 1;
  int k = 0;
  while (n < result_len) {
    n <<= 1;
    ++k;
  }
  return k <= F.two_adicity();
}

Poly mul_schoolbook(const Poly& f, const Poly& g) {
  const PrimeField& F = f.field();
  if (f.is_zero() || g.is_zero()) return Poly(F);
  Vec out(f.size() + g.size() - 1, 0);
  school_into(F, f.coeffs().data(), f.size(), g.coeffs().data(), g.size(), out.data());
  return Poly(F, std::move(out));
}

Poly mul_karatsuba(const Poly& f, const Poly& g) {
  const PrimeField& F = f.field();
  if (f.is_zero() || g.is_zero()) return Poly(F);
  const Poly& a = f.size() >= g.size() ? f : g;  // longer
  const Poly& b = f.size() >= g.size() ? g : f;
  std::size_t nb = b.size();
  Vec out(a.size() + nb - 1, 0);
  Vec tmp(2 * nb - 1);
  Vec chunk(nb);
  // Slice the longer operand into pieces of the shorter one's length.
  for (std::size_t off = 0; off < a.size(); off += nb) {
    std::size_t len = std::min(nb, a.size() - off);
    std::fill(chunk.begin(), chunk.end(), 0);
    std::copy(a.coeffs().begin() + off, a.coeffs().begin() + off + len, chunk.begin());
    kara_rec(F, chunk.data(), b.coeffs().data(), nb, tmp.data());
    std::size_t lim = std::min(tmp.size(), out.size() - off);
    for (std::size_t i = 0; i < lim; ++i) out[off + i] = F.add(out[off + i], tmp[i]);
  }
  return Poly(F, std::move(out));
}

Poly mul_ntt(const Poly& f, const Poly& g) {
  const PrimeField& F = f.field();
  if (f.is_zero() || g.is_zero()) return Poly(F);
  std::size_t len = f.size() + g.size() - 1;
  if (!ntt_supported(F, len)) throw std::invalid_argument("NTT length not supported by p");
  std::size_t n = 1;
  while (n < len) n <<= 1;
  Vec a(f.coeffs()), b(g.coeffs());
  a.resize(n, 0);
  b.resize(n, 0);
  ntt(F, a, false);
  ntt(F, b, false);
  for (std::size_t i = 0; i < n; ++i) a[i] = F.mul(a[i], b[i]);
  ntt(F, a, true);
  a.resize(len);
  return Poly(F, std::move(a));
}

Poly poly_mul(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly(f.field());
  if (std::min(f.size(), g.size()) < kSchoolbookThreshold) return mul_schoolbook(f, g);
  if (ntt_supported(f.field(), f.size() + g.size() - 1)) return mul_ntt(f, g);
  return mul_karatsuba(f, g);
}

// ---------------------------------------------------------------- helpers

Poly truncate(const Poly& f, std::size_t n) {
  if (f.size() <= n) return f;
  return Poly(f.field(), Vec(f.coeffs().begin(), f.coeffs().begin() + n));
}

Poly shift_up(const Poly& f, std::size_t k) {
  if (f.is_zero() || k == 0) return f;
  Vec v(k, 0);
  v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
  return Poly(f.field(), std::move(v));
}

Poly shift_down(const Poly& f, std::size_t k) {
  if (f.size() <= k) return Poly(f.field());
  return Poly(f.field(), Vec(f.coeffs().begin() + k, f.coeffs().end()));
}

Poly slice(const Poly& f, std::size_t lo, std::size_t hi) {
  hi = std::min(hi, f.size());
  if (lo >= hi) return Poly(f.field());
  return Poly(f.field(), Vec(f.coeffs().begin() + lo, f.coeffs().begin() + hi));
}

Poly mul_trunc(const Poly& f, const Poly& g, std::size_t n) {
  return truncate(poly_mul(truncate(f, n), truncate(g, n)), n);
}

DivRem divrem(const Poly& f, const Poly& g) {
  const PrimeField& F = f.field();
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.size() < g.size()) return {Poly(F), f};
  Vec r(f.coeffs());
  std::size_t ng = g.size();
  Vec q(f.size() - ng + 1, 0);
  u64 linv = F.inv(g.lead());
  const Vec& gc = g.coeffs();
  for (std::size_t i = q.size(); i-- > 0;) {
    u64 c = F.mul(r[i + ng - 1], linv);
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < ng; ++j) r[i + j] = F.sub(r[i + j], F.mul(c, gc[j]));
  }
  r.resize(ng - 1);
  return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly poly_mod(const Poly& f, const Poly& g) { return divrem(f, g).rem; }

XGcd xgcd(const Poly& a, const Poly& b) {
  const PrimeField& F = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(F, 1), u1(F), v0(F), v1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    Poly u2 = u0 - qr.quot * u1;
    Poly v2 = v0 - qr.quot * v1;
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  u64 li = F.inv(r0.lead());
  return {r0.scaled(li), u0.scaled(li), v0.scaled(li)};
}

Poly inv_mod(const Poly& a, const Poly& m) {
  XGcd e = xgcd(poly_mod(a, m), m);
  if (e.g.degree() != 0) throw std::invalid_argument("moduli are not coprime");
  return poly_mod(e.u, m);
}

Poly shifted_power_trunc(const PrimeField& F, u64 x, std::size_t k, std::size_t n) {
  Poly result = truncate(Poly::constant(F, 1), n);
  Poly base = truncate(Poly(F, {F.reduce(x), 1}), n);
  while (k) {
    if (k & 1) result = mul_trunc(result, base, n);
    k >>= 1;
    if (k) base = mul_trunc(base, base, n);
  }
  return result;
}

Poly taylor_shift(const Poly& f, u64 x) {
  const PrimeField& F = f.field();
  x = F.reduce(x);
  if (x == 0 || f.size() <= 1) return f;
  // Horner with X + x; in place on the coefficient array.
  Vec c(f.coeffs());
  std::size_t n = c.size();
  for (std::size_t i = n - 1; i-- > 0;) {
    // c[i..n) currently holds the shifted tail; fold in (X + x).
    for (std::size_t j = i; j + 1 < n; ++j) c[j] = F.add(c[j], F.mul(x, c[j + 1]));
  }
  return Poly(F, std::move(c));
}

// ---------------------------------------------------------------- subproduct tree

namespace {

struct Tree {
  // levels[0] are the leaves; levels.back() has a single node.
  std::vector<std::vector<Poly>> levels;
};

Tree build_tree(const std::vector<Poly>& leaves) {
  Tree t;
  t.levels.push_back(leaves);
  while (t.levels.back().size() > 1) {
    const auto& prev = t.levels.back();
    std::vector<Poly> next;
    for (std::size_t i = 0; i < prev.size(); i += 2) {
      if (i + 1 < prev.size()) next.push_back(prev[i] * prev[i + 1]);
      else next.push_back(prev[i]);
    }
    t.levels.push_back(std::move(next));
  }
  return t;
}

}  // namespace

std::vector<Poly> multi_mod(const Poly& f, const std::vector<Poly>& moduli) {
  for (const auto& q : moduli)
    if (q.is_zero()) throw std::invalid_argument("zero modulus");
  if (moduli.empty()) return {};
  Tree t = build_tree(moduli);
  std::vector<Poly> cur{f};
  const Poly& root = t.levels.back()[0];
  if (f.degree() >= root.degree()) cur[0] = poly_mod(f, root);
  for (std::size_t lvl = t.levels.size() - 1; lvl-- > 0;) {
    const auto& nodes = t.levels[lvl];
    std::vector<Poly> next(nodes.size(), Poly(f.field()));
    for (std::size_t i = 0; i < nodes.size(); ++i) next[i] = poly_mod(cur[i / 2], nodes[i]);
    cur = std::move(next);
  }
  return cur;
}

Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli) {
  if (residues.size() != moduli.size()) throw std::invalid_argument("crt: size mismatch");
  if (moduli.empty()) throw std::invalid_argument("crt: no moduli");
  for (const auto& q : moduli)
    if (q.degree() < 1) throw std::invalid_argument("crt: moduli must be nonconstant");
  Tree t = build_tree(moduli);
  std::vector<Poly> cur;
  for (std::size_t i = 0; i < moduli.size(); ++i) cur.push_back(poly_mod(residues[i], moduli[i]));
  for (std::size_t lvl = 0; lvl + 1 < t.levels.size(); ++lvl) {
    const auto& nodes = t.levels[lvl];
    std::vector<Poly> next;
    for (std::size_t i = 0; i < nodes.size(); i += 2) {
      if (i + 1 >= nodes.size()) {
        next.push_back(cur[i]);
        continue;
      }
      const Poly& ql = nodes[i];
      const Poly& qr = nodes[i + 1];
      Poly h = poly_mod((cur[i + 1] - cur[i]) * inv_mod(ql, qr), qr);
      next.push_back(cur[i] + ql * h);
    }
    cur = std::move(next);
  }
  return cur[0];
}

}  // namespace mib
