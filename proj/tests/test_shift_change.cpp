#include "doctest.h"
#include "mib/oracle.hpp"
#include "mib/shift_change.hpp"
#include "support.hpp"

using namespace mib;
using namespace mib::testing;

namespace {

Shift add(const Shift& a, const Shift& b) {
  Shift r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

TEST_SUITE("shift_change") {
  TEST_CASE("examples") {
    PrimeField F(97);
    PolyMatrix B = example_basis(F);
    ShiftChange z = change_shift(B, {0, 0, 0}, {0, 0, 0});
    DegreeVector a = rdeg(z.R), b = rdeg(B);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(naive_mul(z.U, B) == z.R);

    ShiftChange c = change_shift(B, {0, 0, 0}, {0, 3, 6});
    DegreeVector d = rdeg_s(c.R, {0, 3, 6});
    std::sort(d.begin(), d.end());
    CHECK(d == DegreeVector{3, 3, 6});
    CHECK(is_reduced_s(c.R, {0, 3, 6}));
    CHECK(oracle::module_equivalent(c.R, B, example_E(F), MulMat(example_J()), {0, 3, 6}));

    ShiftChange id = change_shift(PolyMatrix::identity(F, 3), {0, 0, 0}, {2, 0, 5});
    CHECK(sum(rdeg_s(id.R, {2, 0, 5})) == 7);
    CHECK(oracle::determinant(id.R).degree() == 0);

    PolyMatrix D(F, 2, 2);
    D(0, 0) = P(F, {0, 1});
    D(1, 0) = P(F, {0, 1});
    D(1, 1) = P(F, {1});
    CHECK_THROWS(change_shift(D, {0, 0}, {0, 0}));
  }

  TEST_CASE("random reduced matrices") {
    Rng rng(91);
    for (int t = 0; t < 100; ++t) {
      PrimeField F(t % 2 ? 97 : 7);
      std::size_t m = rand_int(rng, 1, 5);
      Shift s = rand_shift(rng, m, 4), tt = rand_shift(rng, m, 6);
      PolyMatrix Pm = rand_reduced(rng, F, m, s);
      ShiftChange c = change_shift(Pm, s, tt);
      Shift st = add(s, tt);
      CHECK(naive_mul(c.U, Pm) == c.R);
      CHECK(is_reduced_s(c.R, st));
      CHECK(sum(rdeg_s(c.R, st)) == sum(rdeg_s(Pm, s)) + sum(tt));
      Poly du = oracle::determinant(c.U);
      CHECK(du.degree() == 0);
      if (m <= 3)
        for (std::size_t i = 0; i < m; ++i) {
          CHECK(oracle::in_row_module(c.R.select_rows({i}), Pm));
          CHECK(oracle::in_row_module(Pm.select_rows({i}), c.R));
        }
    }
  }
}
