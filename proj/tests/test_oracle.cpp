#include "doctest.h"
#include "mib/oracle.hpp"
#include "support.hpp"

using namespace mib;
using namespace mib::testing;

TEST_SUITE("oracle") {
  TEST_CASE("striped Krylov matrices of the example") {
    PrimeField F(97);
    Matrix E = example_E(F);
    MulMat Z(example_J());
    const u64 ks[12][3] = {{27, 49, 29}, {0, 27, 49}, {0, 0, 27}, {0, 0, 0},  {50, 58, 0}, {0, 50, 58},
                           {0, 0, 50},   {0, 0, 0},   {77, 10, 29}, {0, 77, 10}, {0, 0, 77}, {0, 0, 0}};
    const u64 kt[12][3] = {{50, 58, 0}, {0, 50, 58}, {0, 0, 50}, {77, 10, 29}, {27, 49, 29}, {0, 0, 0},
                           {0, 77, 10}, {0, 27, 49}, {0, 0, 77}, {0, 0, 27},   {0, 0, 0},    {0, 0, 0}};
    Matrix A = oracle::striped_krylov(E, Z, {0, 3, 6}, 3);
    Matrix B = oracle::striped_krylov(E, Z, {3, 0, 2}, 3);
    Matrix U = oracle::striped_krylov(E, Z, {0, 0, 0}, 3);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(A(i, j) == ks[i][j]);
        CHECK(B(i, j) == kt[i][j]);
        // Uniform shift: stripe d holds E * Z^d.
        CHECK(U(i, j) == ks[4 * (i % 3) + i / 3][j]);
      }
    Matrix K0 = oracle::striped_krylov(E, MulMat(Matrix(F, 3, 3)), {0, 0, 0}, 1);
    CHECK(K0 == vstack(E, Matrix(F, 3, 3)));
  }

  TEST_CASE("oracle Popov form of the example") {
    PrimeField F(97);
    PopovBasis b = oracle::oracle_popov(example_E(F), MulMat(example_J()), {0, 0, 0});
    CHECK(b.P == example_popov(F));
    CHECK(b.delta == MinimalDegree{2, 1, 0});
  }

  TEST_CASE("naive residual") {
    PrimeField F(97);
    Matrix E = example_E(F);
    MulMat Z(example_J());
    CHECK(oracle::naive_residual(Z, example_basis(F), E).is_zero());
    CHECK(oracle::naive_residual(Z, PolyMatrix::identity(F, 3), E) == E);
    CHECK(oracle::naive_residual(Z, example_basis(F).select_rows({2}), E).is_zero());
  }

  TEST_CASE("module equivalence") {
    PrimeField F(97);
    Matrix E = example_E(F);
    MulMat Z(example_J());
    PolyMatrix B = example_basis(F);
    CHECK(oracle::module_equivalent(B, B, E, Z, {0, 0, 0}));
    CHECK(oracle::module_equivalent(B, example_popov(F), E, Z, {0, 0, 0}));
    CHECK_FALSE(oracle::module_equivalent(B, PolyMatrix::identity(F, 3), E, Z, {0, 0, 0}));
    // X * B is made of interpolants but generates a strict submodule.
    PolyMatrix XB = mul_x_cols(B, {1, 1, 1});
    CHECK_FALSE(oracle::module_equivalent(B, XB, E, Z, {0, 0, 0}));
  }

  TEST_CASE("determinant") {
    PrimeField F(97);
    CHECK(oracle::determinant(example_basis(F)).degree() == 3);
    Rng rng(41);
    for (int t = 0; t < 20; ++t) {
      PolyMatrix A = rand_polymat(rng, F, 2, 2, 3);
      Poly d = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
      CHECK(oracle::determinant(A) == d);
    }
  }

  TEST_CASE("rational kernel") {
    PrimeField F(97);
    PolyMatrix c(F, 2, 1);
    c(0, 0) = Poly::constant(F, 1);
    c(1, 0) = P(F, {0, 1});
    PolyMatrix k = oracle::rational_kernel(c);
    CHECK(k.rows() == 1);
    CHECK(naive_mul(k, c).is_zero());
    CHECK(k(0, 1).degree() == 0);
    CHECK(k(0, 0).degree() == 1);

    Rng rng(42);
    PolyMatrix A = rand_polymat(rng, F, 2, 2, 2);
    PolyMatrix S = vstack(PolyMatrix::identity(F, 2), A);
    PolyMatrix KS = oracle::rational_kernel(S);
    PolyMatrix want = hstack(PolyMatrix(F, 2, 2) - A, PolyMatrix::identity(F, 2));
    for (std::size_t i = 0; i < 2; ++i) {
      u64 sc = F.inv(KS(i, 2 + i).lead());
      for (std::size_t j = 0; j < 4; ++j) CHECK(KS(i, j).scaled(sc) == want(i, j));
    }
    for (int t = 0; t < 10; ++t) {
      PolyMatrix G = rand_polymat(rng, F, 4, 2, 3);
      CHECK(naive_mul(oracle::rational_kernel(G), G).is_zero());
    }
  }

  TEST_CASE("kernel Popov form and module membership") {
    PrimeField F(97);
    Rng rng(43);
    for (int t = 0; t < 20; ++t) {
      std::size_t m = rand_int(rng, 2, 5), n = rand_int(rng, 1, m - 1);
      PolyMatrix G = rand_polymat(rng, F, m, n, 3);
      Shift s(m);
      for (auto& v : s) v = static_cast<Degree>(rand_int(rng, 0, 4));
      PolyMatrix N = oracle::kernel_popov(G, s);
      CHECK(N.rows() == m - n);
      CHECK(naive_mul(N, G).is_zero());
      CHECK(is_reduced_s(N, s));
      PolyMatrix K = oracle::rational_kernel(G);
      for (std::size_t i = 0; i < K.rows(); ++i) CHECK(oracle::in_row_module(K.select_rows({i}), N));
      PolyMatrix notin(F, 1, m);
      notin(0, 0) = Poly::constant(F, 1);
      CHECK_FALSE(oracle::in_row_module(notin, N));
    }
  }
}
