#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace mib {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Degree = std::int64_t;

// Degree of the zero polynomial and row degree of a zero row.
inline constexpr Degree kMinusInf = std::numeric_limits<Degree>::min();

inline Degree deg_add(Degree a, Degree b) {
  return (a == kMinusInf || b == kMinusInf) ? kMinusInf : a + b;
}

bool is_prime(u64 n);

// Z/pZ for an odd prime p < 2^62. Elements are plain u64 values in [0, p).
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(u64 p);

  u64 modulus() const { return p_; }

  u64 add(u64 a, u64 b) const {
    u64 r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const {
#if defined(__SIZEOF_LONG_DOUBLE__) && __LDBL_MANT_DIG__ >= 64
    // 64-bit mantissa: the quotient estimate is off by at most one.
    u64 q = static_cast<u64>(static_cast<long double>(a) * b / p_);
    std::int64_t r = static_cast<std::int64_t>(a * b - q * p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    else if (r >= static_cast<std::int64_t>(p_)) r -= static_cast<std::int64_t>(p_);
    return static_cast<u64>(r);
#else
    return static_cast<u64>(static_cast<u128>(a) * b % p_);
#endif
  }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;  // throws on a == 0
  u64 from_int(std::int64_t v) const;
  u64 reduce(u64 v) const { return v % p_; }

  // Largest k with 2^k | p-1, and a primitive 2^k-th root of unity.
  int two_adicity() const { return two_adicity_; }
  u64 root_of_unity(int k) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  u64 p_ = 0;
  int two_adicity_ = 0;
  u64 max_root_ = 0;
};

// Dense univariate polynomial, coefficients low to high, always trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const PrimeField& F) : F_(F) {}
  Poly(const PrimeField& F, std::vector<u64> coeffs);

  static Poly constant(const PrimeField& F, u64 c);
  static Poly monomial(const PrimeField& F, u64 c, std::size_t k);
  static Poly x_minus(const PrimeField& F, u64 a);  // X - a

  const PrimeField& field() const { return F_; }
  const std::vector<u64>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }
  Degree degree() const { return c_.empty() ? kMinusInf : static_cast<Degree>(c_.size()) - 1; }
  u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  u64 eval(u64 x) const;

  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);
  Poly operator-() const;
  Poly scaled(u64 a) const;

  bool operator==(const Poly& g) const { return c_ == g.c_; }
  bool operator!=(const Poly& g) const { return c_ != g.c_; }

  std::string to_string() const;

 private:
  void trim();
  PrimeField F_;
  std::vector<u64> c_;
};

Poly operator+(Poly f, const Poly& g);
Poly operator-(Poly f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);

// Multiplication ladder; the individual rungs are exposed for agreement tests.
Poly poly_mul(const Poly& f, const Poly& g);
Poly mul_schoolbook(const Poly& f, const Poly& g);
Poly mul_karatsuba(const Poly& f, const Poly& g);
Poly mul_ntt(const Poly& f, const Poly& g);  // requires enough 2-adicity
bool ntt_supported(const PrimeField& F, std::size_t result_len);
inline constexpr std::size_t kSchoolbookThreshold = 32;

// f mod X^n, f * X^k, f div X^k, coefficient slice [lo, hi) as a polynomial.
Poly truncate(const Poly& f, std::size_t n);
Poly shift_up(const Poly& f, std::size_t k);
Poly shift_down(const Poly& f, std::size_t k);
Poly slice(const Poly& f, std::size_t lo, std::size_t hi);
Poly mul_trunc(const Poly& f, const Poly& g, std::size_t n);

struct DivRem {
  Poly quot;
  Poly rem;
};
DivRem divrem(const Poly& f, const Poly& g);  // throws on g == 0
Poly poly_mod(const Poly& f, const Poly& g);

struct XGcd {
  Poly g;  // monic gcd (zero if both inputs are zero)
  Poly u;
  Poly v;  // u*a + v*b = g
};
XGcd xgcd(const Poly& a, const Poly& b);
Poly inv_mod(const Poly& a, const Poly& m);  // throws when gcd(a, m) != 1

// (X + x)^k mod X^n.
Poly shifted_power_trunc(const PrimeField& F, u64 x, std::size_t k, std::size_t n);

Poly taylor_shift(const Poly& f, u64 x);
std::vector<Poly> multi_mod(const Poly& f, const std::vector<Poly>& moduli);
Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli);

}  // namespace mib
