// Acceptance run: one PASS/FAIL line per criterion.
//   mib_acceptance <path to mib> <bench csv output>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mib/approx_basis.hpp"
#include "mib/dnc_interp.hpp"
#include "mib/linearization.hpp"
#include "mib/nullspace.hpp"
#include "mib/oracle.hpp"
#include "mib/reductions.hpp"
#include "mib/residual.hpp"
#include "mib/shift_change.hpp"
#include "mib/unbalanced_mul.hpp"
#include "support.hpp"

using namespace mib;
using namespace mib::testing;

namespace {

struct Tally {
  std::size_t cases = 0, failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what;
  }
};

int failed_criteria = 0;

void criterion(int id, double limit_s, const std::function<void(Tally&)>& body) {
  Tally t;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool slow = limit_s > 0 && secs >= limit_s;
  bool pass = t.failures == 0 && !slow;
  if (!pass) ++failed_criteria;
  char buf[160];
  std::snprintf(buf, sizeof buf, "criterion %2d: %s  (%zu checks, %zu failed, %.3f s", id, pass ? "PASS" : "FAIL",
                t.cases, t.failures, secs);
  std::cout << buf;
  if (limit_s > 0) std::printf(", limit %.0f s", limit_s);
  std::cout << ")";
  if (!t.first.empty()) std::cout << "  first failure: " << t.first;
  if (slow) std::cout << "  over the time limit";
  std::cout << std::endl;
}

Degree sum_of(const std::vector<std::size_t>& v) {
  Degree s = 0;
  for (auto x : v) s += static_cast<Degree>(x);
  return s;
}

std::string instance_tag(int t) { return "instance " + std::to_string(t); }

// Instances shared by criteria 3 and 4.
struct DncCase {
  PrimeField F;
  Matrix E;
  JordanRep J;
  Shift s;
};

std::vector<DncCase> dnc_cases() {
  Rng rng(2024);
  std::vector<DncCase> out;
  for (int t = 0; t < 200; ++t) {
    PrimeField F(t % 2 ? 97 : 7);
    std::size_t m = rand_int(rng, 1, 6), sigma = rand_int(rng, 1, 24);
    JordanRep J = rand_jordan(rng, F, sigma, t % 3 != 0);
    Matrix E = rand_matrix(rng, F, m, sigma);
    if (t % 7 == 0 && m > 1)
      for (std::size_t j = 0; j < sigma; ++j) E(0, j) = E(m - 1, j);
    Shift s(m, 0);
    if (t % 4 == 0) {
      // uniform shift, possibly nonzero
      Degree c = static_cast<Degree>(rand_int(rng, 0, 30 / m));
      for (auto& v : s) v = c;
    } else {
      std::size_t left = 30;
      for (auto& v : s) {
        v = static_cast<Degree>(rand_int(rng, 0, std::min<std::size_t>(left, 12)));
        left -= static_cast<std::size_t>(v);
      }
    }
    out.push_back({F, std::move(E), std::move(J), std::move(s)});
  }
  return out;
}

Matrix rand_dense(Rng& rng, const PrimeField& F, std::size_t n, bool upper) {
  Matrix M = rand_matrix(rng, F, n, n);
  if (upper)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) M(i, j) = 0;
  return M;
}

}  // namespace

int main(int argc, char** argv) {
  std::string mib_exe = argc > 1 ? argv[1] : "mib";
  std::string csv_path = argc > 2 ? argv[2] : "bench_report.csv";
  const PrimeField F97(97);

  criterion(1, 1, [&](Tally& t) {
    Matrix E = example_E(F97);
    MulMat Z(example_J());
    PopovBasis b = lin_interp_basis(E, Z, {0, 0, 0}, 4);
    t.expect(is_popov_s(b.P, {0, 0, 0}), "not in 0-Popov form");
    t.expect(b.delta == MinimalDegree{2, 1, 0}, "pivot degrees differ from (2,1,0)");
    for (std::size_t i = 0; i < 3; ++i) t.expect(pivot_s(b.P, i, {0, 0, 0}).degree == 2 - static_cast<Degree>(i), "pivot degree of a row");
    t.expect(oracle::module_equivalent(b.P, example_basis(F97), E, Z, {0, 0, 0}), "not equivalent to the reference rows");
    t.expect(b.P == oracle::oracle_popov(E, Z, {0, 0, 0}).P, "differs from the oracle Popov basis");
    t.expect(b.P == example_popov(F97), "differs from the expected matrix");
  });

  criterion(2, 1, [&](Tally& t) {
    Matrix E = example_E(F97);
    MulMat Z(example_J());
    struct Case {
      Shift s;
      MinimalDegree deg;
      std::vector<std::size_t> idx;
    };
    for (const Case& c : {Case{{0, 0, 0}, {2, 1, 0}, {0, 1, 3}}, Case{{0, 3, 6}, {3, 0, 0}, {0, 1, 2}},
                          Case{{3, 0, 2}, {0, 3, 0}, {0, 1, 2}}}) {
      RankProfile rp = krylov_rank_profile(E, Z, c.s, 4);
      t.expect(minimal_degree(rp, 3) == c.deg, "minimal degree");
      t.expect(rp.row_indices == c.idx, "row rank profile");
    }
  });

  std::vector<DncCase> cases = dnc_cases();
  std::vector<PolyMatrix> dnc_out(cases.size());

  criterion(3, 30, [&](Tally& t) {
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const DncCase& c = cases[i];
      PolyMatrix B = interpolation_basis(c.E, c.J, c.s);
      dnc_out[i] = B;
      std::string tag = instance_tag(static_cast<int>(i));
      t.expect(oracle::naive_residual(c.J, B, c.E).is_zero(), tag + ": nonzero residual");
      t.expect(is_reduced_s(B, c.s), tag + ": not s-reduced");
      PopovBasis o = oracle::oracle_popov(c.E, MulMat(c.J), c.s);
      t.expect(sum(rdeg_s(B, c.s)) - sum(c.s) == sum_of(o.delta), tag + ": degree sum differs from the oracle");
    }
  });

  criterion(4, 0, [&](Tally& t) {
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const DncCase& c = cases[i];
      const PolyMatrix& B = dnc_out[i];
      if (B.rows() == 0) {
        t.expect(false, "missing output of criterion 3");
        continue;
      }
      std::string tag = instance_tag(static_cast<int>(i));
      Degree lo = *std::min_element(c.s.begin(), c.s.end());
      Shift s0 = c.s;
      for (auto& v : s0) v -= lo;
      Degree sigma = static_cast<Degree>(c.E.cols());
      t.expect(sum(rdeg_s(B, s0)) <= sigma + sum(s0), tag + ": shifted degree sum bound");
      bool uniform = std::all_of(c.s.begin(), c.s.end(), [&](Degree v) { return v == c.s[0]; });
      if (uniform) {
        Degree dd = oracle::determinant(B).degree();
        Degree sr = sum(rdeg(B));
        t.expect(dd == sr, tag + ": deg det differs from the row degree sum");
        t.expect(sr <= sigma, tag + ": row degree sum exceeds sigma");
      }
    }
  });

  criterion(5, 0, [&](Tally& t) {
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
      PrimeField F(k % 2 ? 97 : 7);
      std::size_t m = rand_int(rng, 1, 5), sigma = rand_int(rng, 1, 10);
      Matrix E = rand_matrix(rng, F, m, sigma);
      MulMat M(rand_dense(rng, F, sigma, k % 2 == 0));
      Shift s(m);
      for (auto& v : s) v = static_cast<Degree>(rand_int(rng, 0, 6));
      PopovBasis lin = lin_interp_basis(E, M, s, next_power_of_two(sigma));
      PopovBasis orc = oracle::oracle_popov(E, M, s);
      std::string tag = instance_tag(k);
      t.expect(lin.P == orc.P, tag + ": differs from the oracle");
      t.expect(is_popov_s(lin.P, s), tag + ": not in s-Popov form");
      Degree cdeg_sum = 0;
      for (std::size_t j = 0; j < m; ++j) {
        Degree cj = 0;
        for (std::size_t i = 0; i < m; ++i) cj = std::max(cj, lin.P(i, j).degree());
        cdeg_sum += cj;
      }
      t.expect(cdeg_sum <= static_cast<Degree>(sigma), tag + ": column degree sum exceeds sigma");
    }
  });

  criterion(6, 10, [&](Tally& t) {
    Rng rng(6);
    for (int k = 0; k < 500; ++k) {
      PrimeField F(k % 2 ? 97 : 7);
      std::size_t m = rand_int(rng, 1, 6);
      long xi = static_cast<long>(rand_int(rng, m, 48));
      std::vector<long> d(m);
      int kind = k % 4;
      long left = xi;
      for (std::size_t i = 0; i < m; ++i) {
        if (kind == 0) d[i] = xi / static_cast<long>(m);
        else if (kind == 1) d[i] = i == 0 ? xi : 0;
        else d[i] = static_cast<long>(rand_int(rng, 0, static_cast<std::size_t>(left)));
        if (kind >= 2) left -= d[i];
        if (kind == 3 && rand_int(rng, 0, 3) == 0) d[i] = -1;
      }
      auto [B, A] = rand_pair(rng, F, d, xi, k % 3 == 0);
      Degree need = unbalanced_xi(B, A);
      t.expect(unbalanced_mul(B, A, std::max<Degree>(need, xi)) == naive_mul(B, A), instance_tag(k));
    }
  });

  criterion(7, 10, [&](Tally& t) {
    Rng rng(7);
    std::size_t shifting = 0, crt = 0, infinite = 0;
    for (int k = 0; k < 300; ++k) {
      PrimeField F(k % 2 ? 97 : 7);
      std::size_t m = rand_int(rng, 1, 6), sigma = rand_int(rng, 1, 48);
      JordanRep J = rand_jordan_kind(rng, F, sigma, k % 5);
      PolyMatrix Pm = rand_polymat(rng, F, m, m, static_cast<long>(rand_int(rng, 0, 2 * sigma / m + 2)));
      Matrix E = rand_matrix(rng, F, m, sigma);
      for (const ResidualBucket& b : plan_residuals(J, m).buckets) {
        if (b.infinite) ++infinite;
        else if (b.strategy == ResidualStrategy::Shifting) ++shifting;
        else ++crt;
      }
      t.expect(compute_residuals(J, Pm, E) == oracle::naive_residual(J, Pm, E), instance_tag(k));
    }
    t.expect(shifting > 0, "no bucket took the shifting path");
    t.expect(crt > 0, "no finite bucket took the CRT path");
    t.expect(infinite > 0, "the large-block bucket was never exercised");
  });

  criterion(8, 0, [&](Tally& t) {
    Rng rng(8);
    for (int k = 0; k < 100; ++k) {
      PrimeField F(k % 3 ? 97 : 7);
      std::size_t m = rand_int(rng, 2, 6), n = rand_int(rng, 1, m - 1);
      PolyMatrix G = rand_full_rank(rng, F, m, n, 4);
      DegreeVector d = rdeg(G);
      Shift s(m);
      for (std::size_t i = 0; i < m; ++i) s[i] = std::max<Degree>(d[i], 0) + static_cast<Degree>(rand_int(rng, 0, k % 2 ? 0 : 3));
      NullspaceBasis r = minimal_nullspace_basis(G, s);
      std::string tag = instance_tag(k);
      t.expect(r.N.rows() == m - n, tag + ": row count");
      t.expect(naive_mul(r.N, G).is_zero(), tag + ": N F is not zero");
      t.expect(is_reduced_s(r.N, s), tag + ": not s-reduced");
      PolyMatrix K = oracle::rational_kernel(G);
      for (std::size_t i = 0; i < K.rows(); ++i)
        t.expect(oracle::in_row_module(K.select_rows({i}), r.N), tag + ": kernel generator outside the row module");
      t.expect(sum(rdeg_s(r.N, s)) == sum(rdeg_s(oracle::kernel_popov(G, s), s)), tag + ": degree sum is not minimal");
    }
  });

  criterion(9, 0, [&](Tally& t) {
    Rng rng(9);
    for (int k = 0; k < 100; ++k) {
      PrimeField F(k % 2 ? 97 : 7);
      std::size_t m = rand_int(rng, 1, 5);
      Shift s = rand_shift(rng, m, 4), tt = rand_shift(rng, m, 6);
      PolyMatrix Pm = rand_reduced(rng, F, m, s);
      ShiftChange c = change_shift(Pm, s, tt);
      Shift st = s;
      for (std::size_t i = 0; i < m; ++i) st[i] += tt[i];
      std::string tag = instance_tag(k);
      t.expect(naive_mul(c.U, Pm) == c.R, tag + ": U P differs from R");
      t.expect(is_reduced_s(c.R, st), tag + ": R is not (s+t)-reduced");
      t.expect(sum(rdeg_s(c.R, st)) == sum(rdeg_s(Pm, s)) + sum(tt), tag + ": degree sum identity");
    }
  });

  criterion(10, 1, [&](Tally& t) {
    PolyMatrix f(F97, 3, 1);
    f(0, 0) = P(F97, {27, 49, 29});
    f(1, 0) = P(F97, {50, 58});
    f(2, 0) = P(F97, {77, 10, 29});
    PolyMatrix B = pm_basis({f, {3}, {0, 0, 0}});
    InterpolationInstance hp = hermite_pade_instance(f, {3});
    t.expect(oracle::module_equivalent(B, example_basis(F97), hp.E, MulMat(hp.J), {0, 0, 0}), "not equivalent to the reference basis");
    DegreeVector r = rdeg(B);
    std::sort(r.begin(), r.end());
    t.expect(r == DegreeVector{0, 1, 2}, "sorted row degrees differ from (0,1,2)");
  });

  criterion(11, 5, [&](Tally& t) {
    const PrimeField& F = F97;
    Poly msg = P(F, {3, 1, 4, 1});
    std::vector<u64> xs, ys;
    for (u64 x = 1; x <= 16; ++x) {
      xs.push_back(x);
      ys.push_back(msg.eval(x));
    }
    ys[2] = F.add(ys[2], 5);
    ys[11] = F.add(ys[11], 1);
    const std::size_t b = 2;
    ListSize ls = rs_list_size(16 * b * (b + 1) / 2, 3);
    RsInterpolation r = rs_interpolation(F, xs, ys, std::vector<std::size_t>(16, b), 3, ls.m);
    t.expect(!r.Q.row_is_zero(0), "Q is zero");
    for (std::size_t k = 0; k < 16; ++k)
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; i + j < b; ++j)
          t.expect(recentred_coeff(r.Q, xs[k], ys[k], i, j) == 0, "Q does not vanish at point " + std::to_string(k));
    // Division of Q = sum_j Q_j Y^j by Y - f as a polynomial in Y over K[X].
    std::size_t n = r.Q.cols();
    std::vector<Poly> quo(n > 1 ? n - 1 : 0, Poly(F));
    Poly carry(F);
    for (std::size_t j = n; j-- > 0;) {
      Poly c = r.Q(0, j) + carry * msg;
      if (j == 0) {
        t.expect(c.is_zero(), "nonzero remainder on division by Y - f");
      } else {
        quo[j - 1] = c;
        carry = c;
      }
    }
    // Quotient times (Y - f) gives Q back.
    for (std::size_t j = 0; j < n; ++j) {
      Poly back(F);
      if (j >= 1) back += quo[j - 1];
      if (j < quo.size()) back -= quo[j] * msg;
      t.expect(back == r.Q(0, j), "quotient check at Y^" + std::to_string(j));
    }
  });

  criterion(12, 0, [&](Tally& t) {
    std::string cmd = "\"" + mib_exe + "\" bench --m 4 --sizes 256,512,1024,2048 --seed 1";
    FILE* pipe = popen(cmd.c_str(), "r");
    t.expect(pipe != nullptr, "could not start the benchmark");
    if (!pipe) return;
    std::string csv;
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe)) csv += buf;
    int rc = pclose(pipe);
    std::ofstream(csv_path) << csv;
    t.expect(rc == 0, "benchmark exited with status " + std::to_string(rc));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    t.expect(line == "engine,m,sigma,seconds", "missing CSV header");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    t.expect(rows == 12, "expected one row per engine and size");
    std::cout << csv;
  });

  std::cout << (failed_criteria ? "acceptance: FAILED " + std::to_string(failed_criteria) + " criterion(s)" : std::string("acceptance: all criteria passed")) << std::endl;
  return failed_criteria ? 1 : 0;
}
