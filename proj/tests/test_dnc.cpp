#include "doctest.h"
#include "mib/dnc_interp.hpp"
#include "mib/linearization.hpp"
#include "mib/oracle.hpp"
#include "support.hpp"

using namespace mib;
using namespace mib::testing;

namespace {

void check_against_oracle(const Matrix& E, const JordanRep& J, const Shift& s) {
  PolyMatrix B = interpolation_basis(E, J, s);
  CHECK(oracle::naive_residual(J, B, E).is_zero());
  CHECK(is_reduced_s(B, s));
  PopovBasis o = oracle::oracle_popov(E, MulMat(J), s);
  Degree sd = 0;
  for (auto d : o.delta) sd += static_cast<Degree>(d);
  CHECK(sum(rdeg_s(B, s)) - sum(s) == sd);
  // Degree bound for the normalized shift s - min(s).
  Degree lo = *std::min_element(s.begin(), s.end());
  Shift s0 = s;
  for (auto& v : s0) v -= lo;
  CHECK(sum(rdeg_s(B, s0)) <= static_cast<Degree>(E.cols()) + sum(s0));
}

}  // namespace

TEST_SUITE("dnc_interp") {
  TEST_CASE("examples") {
    PrimeField F(97);
    Matrix E = example_E(F);
    CHECK(interpolation_basis(E, example_J(), {0, 0, 0}) == example_popov(F));
    CHECK(interpolation_basis_rec(E, example_J()) == example_popov(F));
    CHECK(interpolation_basis(Matrix(F, 2, 9), JordanRep{{{1, 9}}}, {4, 0}) == PolyMatrix::identity(F, 2));
    CHECK_THROWS(interpolation_basis(E, JordanRep{{{0, 2}}}, {0, 0, 0}));

    Rng rng(101);
    Matrix E16 = rand_matrix(rng, F, 3, 16);
    check_against_oracle(E16, rand_jordan(rng, F, 16, true), {0, 5, 1});
    PrimeField G(7);
    Matrix E32 = rand_matrix(rng, G, 2, 32);
    JordanRep J32 = rand_jordan(rng, G, 32, true);
    PolyMatrix B = interpolation_basis_rec(E32, J32);
    CHECK(oracle::naive_residual(J32, B, E32).is_zero());
    CHECK(is_reduced_s(B, {0, 0}));
    CHECK(oracle::determinant(B).degree() <= 32);
    check_against_oracle(E32, J32, {0, 0});
  }

  TEST_CASE("random instances") {
    Rng rng(102);
    for (int t = 0; t < 80; ++t) {
      PrimeField F(t % 2 ? 97 : 7);
      std::size_t m = rand_int(rng, 1, 5), sigma = rand_int(rng, 1, 24);
      JordanRep J = rand_jordan(rng, F, sigma, t % 3 != 0);
      Matrix E = rand_matrix(rng, F, m, sigma);
      if (t % 5 == 0 && m > 1)
        for (std::size_t j = 0; j < sigma; ++j) E(0, j) = E(m - 1, j);
      Shift s(m);
      for (auto& v : s) v = static_cast<Degree>(rand_int(rng, 0, 30 / m));
      check_against_oracle(E, J, s);
    }
  }

  TEST_CASE("non-standard block order") {
    PrimeField F(97);
    Rng rng(103);
    JordanRep J{{{3, 1}, {5, 4}, {3, 2}, {5, 1}, {0, 3}}};
    Matrix E = rand_matrix(rng, F, 2, 11);
    check_against_oracle(E, J, {1, 0});
  }
}
