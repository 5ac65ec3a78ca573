#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "mib/approx_basis.hpp"
#include "mib/dnc_interp.hpp"
#include "mib/io.hpp"
#include "mib/linearization.hpp"
#include "mib/nullspace.hpp"
#include "mib/oracle.hpp"
#include "mib/reductions.hpp"
#include "mib/shift_change.hpp"

using namespace mib;

namespace {

// Domain failures that should exit with status 1.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string path;
  void emit(const io::Document& d) const {
    if (path.empty() || path == "-")
      std::cout << io::serialize(d);
    else
      io::write_file(path, d);
  }
};

const PrimeField& field_of(const io::Document& d, const std::string& what) {
  if (!d.field) throw Failure(what + ": missing field line");
  return *d.field;
}

template <class T>
const T& need(const T* p, const std::string& what) {
  if (!p) throw Failure("missing " + what);
  return *p;
}

Shift to_shift(const io::Vector& v) {
  Shift s = v.values;
  return s;
}

Shift shift_from(const std::string& path, const io::Document& fallback, std::size_t m) {
  if (!path.empty()) {
    io::Document d = io::read_file(path);
    return to_shift(need(d.vector("shift"), "shift section in " + path));
  }
  if (const io::Vector* v = fallback.vector("shift")) return to_shift(*v);
  return Shift(m, 0);
}

std::vector<std::size_t> sizes_of(const io::Vector& v) {
  std::vector<std::size_t> o;
  for (Degree x : v.values) o.push_back(static_cast<std::size_t>(x));
  return o;
}

io::Document basis_doc(const PrimeField& F, const PolyMatrix& B, const Shift& s) {
  io::Document d;
  d.field = F;
  d.items.push_back(B);
  d.items.push_back(io::Vector{"shift", s});
  return d;
}

// Interpolation instance read from --instance or the separate flags.
struct InstanceFlags {
  std::string instance, evals, jordan, dense, shift;

  struct Loaded {
    PrimeField F;
    Matrix E;
    std::optional<JordanRep> J;
    std::optional<Matrix> M;
    Shift s;
    MulMat mulmat() const { return J ? MulMat(*J) : MulMat(*M); }
  };

  void add(CLI::App* c) {
    c->add_option("--instance", instance, "file with E and a Jordan or dense multiplication matrix");
    c->add_option("--evals", evals, "file whose first mat is E");
    c->add_option("--jordan", jordan, "file with a jordan section");
    c->add_option("--dense-mulmat", dense, "file whose first mat is a dense multiplication matrix");
    c->add_option("--shift", shift, "file with a shift section");
  }

  Loaded load() const {
    io::Document base;
    if (!instance.empty()) base = io::read_file(instance);
    io::Document ev = evals.empty() ? base : io::read_file(evals);
    const PrimeField& F = field_of(ev, "evaluation file");
    Loaded L{F, need(ev.matrix(0), "evaluation matrix"), std::nullopt, std::nullopt, {}};
    if (!jordan.empty())
      L.J = need(io::read_file(jordan).jordan(), "jordan section");
    else if (!dense.empty())
      L.M = need(io::read_file(dense).matrix(0), "dense multiplication matrix");
    else if (base.jordan())
      L.J = *base.jordan();
    else if (base.matrix(1))
      L.M = *base.matrix(1);
    else
      throw Failure("no multiplication matrix given");
    if (L.M && (L.M->rows() != L.E.cols() || L.M->cols() != L.E.cols()))
      throw Failure("multiplication matrix must be sigma x sigma");
    if (L.J && L.J->order() != L.E.cols()) throw Failure("Jordan order differs from the column count of E");
    L.s = shift_from(shift, base, L.E.rows());
    check_shift(L.s, L.E.rows());
    return L;
  }
};

PolyMatrix run_engine(const std::string& algo, const InstanceFlags::Loaded& L) {
  if (algo == "oracle") return oracle::oracle_popov(L.E, L.mulmat(), L.s).P;
  if (algo == "lin") {
    std::size_t sigma = L.E.cols();
    if (sigma == 0) return PolyMatrix::identity(L.F, L.E.rows());
    return lin_interp_basis(L.E, L.mulmat(), L.s, next_power_of_two(sigma)).P;
  }
  if (!L.J) throw Failure("the dnc engine needs a Jordan multiplication matrix");
  return interpolation_basis(L.E, *L.J, L.s);
}

void cmd_interp(const std::string& algo, const InstanceFlags& f, const Output& out) {
  auto L = f.load();
  out.emit(basis_doc(L.F, run_engine(algo, L), L.s));
}

void cmd_random(std::size_t m, std::size_t sigma, u64 p, u64 seed, bool repeat, bool dense, const Output& out) {
  PrimeField F(p);
  std::mt19937_64 rng(seed);
  auto elem = [&] { return std::uniform_int_distribution<u64>(0, p - 1)(rng); };
  io::Document d;
  d.field = F;
  Matrix E(F, m, sigma);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < sigma; ++j) E(i, j) = elem();
  d.items.push_back(E);
  if (dense) {
    Matrix M(F, sigma, sigma);
    for (std::size_t i = 0; i < sigma; ++i)
      for (std::size_t j = 0; j < sigma; ++j) M(i, j) = elem();
    d.items.push_back(M);
  } else {
    std::vector<JordanBlock> b;
    std::size_t left = sigma;
    u64 pool = repeat ? std::min<u64>(3, p) : p;
    while (left) {
      std::size_t s = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(left, 4))(rng);
      b.push_back({std::uniform_int_distribution<u64>(0, pool - 1)(rng), s});
      left -= s;
    }
    d.items.push_back(normalize(b).rep);
  }
  out.emit(d);
}

void cmd_hermite_pade(const std::string& file, const std::string& algo, const std::string& shift, const Output& out) {
  io::Document d = io::read_file(file);
  const PrimeField& F = field_of(d, file);
  const PolyMatrix& Fm = need(d.polymat(0), "polymat section");
  std::vector<std::size_t> orders = sizes_of(need(d.vector("orders"), "orders section"));
  Shift s = shift_from(shift, d, Fm.rows());
  check_shift(s, Fm.rows());
  PolyMatrix B;
  if (algo == "pm" || algo == "mbasis") {
    ApproximantInstance inst{Fm, orders, s};
    B = algo == "pm" ? pm_basis(inst) : mbasis(inst);
  } else {
    InterpolationInstance hp = hermite_pade_instance(Fm, orders);
    InstanceFlags::Loaded L{F, hp.E, hp.J, std::nullopt, s};
    B = run_engine(algo, L);
  }
  out.emit(basis_doc(F, B, s));
}

void cmd_mpade(const std::string& file, const std::string& algo, const std::string& shift, const Output& out) {
  io::Document d = io::read_file(file);
  const PrimeField& F = field_of(d, file);
  const PolyMatrix& Fm = need(d.polymat(0), "polymat section");
  std::vector<std::size_t> orders = sizes_of(need(d.vector("orders"), "orders section"));
  std::vector<u64> pts;
  for (Degree x : need(d.vector("abscissas"), "abscissas section").values) pts.push_back(static_cast<u64>(x));
  Shift s = shift_from(shift, d, Fm.rows());
  check_shift(s, Fm.rows());
  InterpolationInstance mp = mpade_instance(Fm, pts, orders);
  InstanceFlags::Loaded L{F, mp.E, mp.J, std::nullopt, s};
  out.emit(basis_doc(F, run_engine(algo, L), s));
}

MultivariateInstance multivariate_from(const io::Document& d) {
  MultivariateInstance mi;
  mi.r = need(d.scalar("vars"), "vars section").value;
  if (const io::Vector* w = d.vector("weights")) mi.weights = w->values;
  for (const auto& g : need(d.tables("gamma").empty() ? nullptr : d.tables("gamma")[0], "gamma section").rows)
    mi.gamma.push_back(Exponent(g.begin(), g.end()));
  for (const auto& p : need(d.tables("points").empty() ? nullptr : d.tables("points")[0], "points section").rows) {
    if (p.size() != mi.r + 1) throw Failure("each point needs x and r coordinates");
    mi.points.push_back({p[0], std::vector<u64>(p.begin() + 1, p.end())});
  }
  for (const io::Table* t : d.tables("support")) {
    std::vector<Exponent> mu;
    for (const auto& e : t->rows) mu.push_back(Exponent(e.begin(), e.end()));
    mi.supports.push_back(std::move(mu));
  }
  return mi;
}

void cmd_multi(const std::string& file, const Output& out) {
  io::Document d = io::read_file(file);
  const PrimeField& F = field_of(d, file);
  MultivariateReduction red = multivariate_instance(F, multivariate_from(d));
  out.emit(basis_doc(F, interpolation_basis(red.inst.E, red.inst.J, red.s), red.s));
}

void cmd_rs(const std::string& file, Degree w, std::size_t list, const Output& out) {
  io::Document d = io::read_file(file);
  const PrimeField& F = field_of(d, file);
  std::vector<u64> xs, ys;
  for (const auto& p : need(d.tables("points").empty() ? nullptr : d.tables("points")[0], "points section").rows) {
    if (p.size() != 2) throw Failure("each point needs x and y");
    xs.push_back(p[0]);
    ys.push_back(p[1]);
  }
  std::vector<std::size_t> b = d.vector("multiplicity") ? sizes_of(*d.vector("multiplicity")) : std::vector<std::size_t>(xs.size(), 1);
  if (list == 0) {
    std::size_t sigma = 0;
    for (auto bk : b) sigma += bk * (bk + 1) / 2;
    list = rs_list_size(sigma, std::max<Degree>(w, 1)).m;
  }
  RsInterpolation r = rs_interpolation(F, xs, ys, b, w, list);
  io::Document o;
  o.field = F;
  o.items.push_back(r.Q);
  o.items.push_back(r.basis);
  Shift s(list);
  for (std::size_t j = 0; j < list; ++j) s[j] = w * static_cast<Degree>(j);
  o.items.push_back(io::Vector{"shift", s});
  out.emit(o);
}

void cmd_nullspace(const std::string& file, const std::string& shift, const Output& out) {
  io::Document d = io::read_file(file);
  const PrimeField& F = field_of(d, file);
  const PolyMatrix& G = need(d.polymat(0), "polymat section");
  Shift s;
  if (!shift.empty() || d.vector("shift")) {
    s = shift_from(shift, d, G.rows());
  } else {
    for (Degree x : rdeg(G)) s.push_back(std::max<Degree>(x, 0));
  }
  NullspaceBasis nb = minimal_nullspace_basis(G, s);
  out.emit(basis_doc(F, nb.N, s));
}

void cmd_shift_change(const std::string& file, const Output& out) {
  io::Document d = io::read_file(file);
  const PrimeField& F = field_of(d, file);
  const PolyMatrix& P = need(d.polymat(0), "polymat section");
  Shift s = to_shift(need(d.vector("shift", 0), "first shift section (s)"));
  Shift t = to_shift(need(d.vector("shift", 1), "second shift section (t)"));
  ShiftChange c = change_shift(P, s, t);
  io::Document o;
  o.field = F;
  o.items.push_back(c.R);
  o.items.push_back(c.U);
  Shift st = s;
  for (std::size_t i = 0; i < st.size(); ++i) st[i] += t[i];
  o.items.push_back(io::Vector{"shift", st});
  out.emit(o);
}

int cmd_check(const std::string& what, const std::string& basis, const std::string& other, const InstanceFlags& f) {
  io::Document d = io::read_file(basis);
  const PolyMatrix& B = need(d.polymat(0), "polymat section in " + basis);
  std::string why;
  bool ok = true;
  if (what == "popov" || what == "reduced") {
    Shift s = shift_from(f.shift, d, B.cols());
    check_shift(s, B.cols());
    if (what == "popov")
      ok = B.rows() == B.cols() && is_popov_s(B, s);
    else
      ok = std::none_of(rdeg(B).begin(), rdeg(B).end(), [](Degree x) { return x == kMinusInf; }) && is_reduced_s(B, s);
    why = what == "popov" ? "not in shifted Popov form" : "not shifted reduced";
  } else {
    auto L = f.load();
    if (what == "interpolant") {
      ok = oracle::naive_residual(L.mulmat(), B, L.E).is_zero();
      why = "some row is not an interpolant";
    } else {
      io::Document od = io::read_file(other);
      const PolyMatrix& B2 = need(od.polymat(0), "polymat section in " + other);
      ok = B.rows() == B.cols() && B2.rows() == B2.cols() && oracle::module_equivalent(B, B2, L.E, L.mulmat(), L.s);
      why = "the bases generate different modules";
    }
  }
  std::cout << (ok ? "ok" : "fail: " + why) << '\n';
  return ok ? 0 : 1;
}

void cmd_bench(const std::string& sizes, std::size_t m, u64 seed, u64 p, double budget, const std::string& engines) {
  PrimeField F(p);
  std::vector<std::size_t> sz;
  for (const auto& tok : CLI::detail::split(sizes, ',')) sz.push_back(std::stoul(tok));
  std::vector<std::string> eng = CLI::detail::split(engines, ',');
  std::cout << "engine,m,sigma,seconds\n";
  for (const std::string& e : eng) {
    if (e != "dnc" && e != "lin" && e != "oracle") throw Failure("unknown engine " + e);
    double last = 0;
    std::size_t last_sigma = 0;
    for (std::size_t sigma : sz) {
      // Skip sizes whose predicted cost (cubic growth for the dense engines) exceeds the budget.
      double growth = e == "dnc" ? 2.5 : 8.0;
      double ratio = last_sigma ? static_cast<double>(sigma) / static_cast<double>(last_sigma) : 1.0;
      if (last_sigma && last * std::pow(ratio, std::log2(growth)) > budget) {
        std::cout << e << ',' << m << ',' << sigma << ",skipped\n" << std::flush;
        continue;
      }
      std::mt19937_64 rng(seed + sigma);
      PolyMatrix f(F, m, 1);
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<u64> c(sigma);
        for (auto& x : c) x = std::uniform_int_distribution<u64>(0, p - 1)(rng);
        f(i, 0) = Poly(F, std::move(c));
      }
      InterpolationInstance hp = hermite_pade_instance(f, {sigma});
      InstanceFlags::Loaded L{F, hp.E, hp.J, std::nullopt, Shift(m, 0)};
      auto t0 = std::chrono::steady_clock::now();
      PolyMatrix B = run_engine(e, L);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (B.rows() != m) throw Failure("engine returned a malformed basis");
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", secs);
      std::cout << e << ',' << m << ',' << sigma << ',' << buf << '\n' << std::flush;
      last = secs;
      last_sigma = sigma;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal interpolation bases over prime fields"};
  app.require_subcommand(1);
  Output out;

  std::string algo = "dnc";
  InstanceFlags inst;
  auto* interp = app.add_subcommand("interp", "interpolation basis of an (E, M, s) instance");
  interp->add_option("--algo", algo)->check(CLI::IsMember({"lin", "dnc", "oracle"}));
  inst.add(interp);
  interp->add_option("-o,--output", out.path);

  std::size_t rm = 3, rsigma = 8;
  u64 rp = 97, rseed = 1;
  bool rrepeat = false, rdense = false;
  auto* rnd = app.add_subcommand("random", "random interpolation instance");
  rnd->add_option("--m", rm);
  rnd->add_option("--sigma", rsigma);
  rnd->add_option("--p", rp);
  rnd->add_option("--seed", rseed);
  rnd->add_flag("--repeat", rrepeat, "few distinct eigenvalues");
  rnd->add_flag("--dense", rdense, "dense multiplication matrix instead of a Jordan one");
  rnd->add_option("-o,--output", out.path);

  std::string file, shift, happ_algo = "pm";
  auto* hp = app.add_subcommand("hermite-pade", "approximant basis of a polymat with orders");
  hp->add_option("file", file)->required();
  hp->add_option("--algo", happ_algo)->check(CLI::IsMember({"pm", "mbasis", "lin", "dnc", "oracle"}));
  hp->add_option("--shift", shift);
  hp->add_option("-o,--output", out.path);

  std::string mp_algo = "dnc";
  auto* mp = app.add_subcommand("mpade", "M-Pade basis of a polymat with orders and abscissas");
  mp->add_option("file", file)->required();
  mp->add_option("--algo", mp_algo)->check(CLI::IsMember({"lin", "dnc", "oracle"}));
  mp->add_option("--shift", shift);
  mp->add_option("-o,--output", out.path);

  auto* mi = app.add_subcommand("multi-interp", "constrained multivariate interpolation");
  mi->add_option("file", file)->required();
  mi->add_option("-o,--output", out.path);

  Degree weight = 1;
  std::size_t list = 0;
  auto* rs = app.add_subcommand("rs-interp", "Reed-Solomon interpolation step");
  rs->add_option("file", file)->required();
  rs->add_option("--weight", weight)->check(CLI::NonNegativeNumber);
  rs->add_option("--list-size", list, "number of Y powers; default from the unknown-counting rule");
  rs->add_option("-o,--output", out.path);

  auto* ns = app.add_subcommand("nullspace", "minimal left nullspace basis");
  ns->add_option("file", file)->required();
  ns->add_option("--shift", shift);
  ns->add_option("-o,--output", out.path);

  auto* sc = app.add_subcommand("shift-change", "reduced form for shift s + t of an s-reduced matrix");
  sc->add_option("file", file)->required();
  sc->add_option("-o,--output", out.path);

  std::string basis, other;
  auto* ck = app.add_subcommand("check", "verify a basis");
  ck->add_option("basis", basis)->required();
  auto* g = ck->add_option_group("property");
  bool popov = false, reduced = false, interpolant = false, equiv = false;
  g->add_flag("--popov", popov);
  g->add_flag("--reduced", reduced);
  g->add_flag("--interpolant", interpolant);
  g->add_flag("--equiv", equiv);
  g->require_option(1);
  ck->add_option("--other", other, "second basis for --equiv");
  inst.add(ck);

  std::string sizes = "256,512,1024,2048", engines = "dnc,lin,oracle";
  std::size_t bm = 4;
  u64 bseed = 1, bp = 998244353;
  double budget = 60;
  auto* bench = app.add_subcommand("bench", "wall time versus sigma on Hermite-Pade instances (CSV)");
  bench->add_option("--sizes", sizes);
  bench->add_option("--m", bm);
  bench->add_option("--seed", bseed);
  bench->add_option("--p", bp);
  bench->add_option("--engines", engines);
  bench->add_option("--budget", budget, "per-run seconds above which larger sizes are skipped");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*interp) cmd_interp(algo, inst, out);
    if (*rnd) cmd_random(rm, rsigma, rp, rseed, rrepeat, rdense, out);
    if (*hp) cmd_hermite_pade(file, happ_algo, shift, out);
    if (*mp) cmd_mpade(file, mp_algo, shift, out);
    if (*mi) cmd_multi(file, out);
    if (*rs) cmd_rs(file, weight, list, out);
    if (*ns) cmd_nullspace(file, shift, out);
    if (*sc) cmd_shift_change(file, out);
    if (*ck) {
      if (equiv && other.empty()) {
        std::cerr << "mib: --equiv needs --other\n";
        return 2;
      }
      return cmd_check(popov ? "popov" : reduced ? "reduced" : interpolant ? "interpolant" : "equiv", basis, other, inst);
    }
    if (*bench) cmd_bench(sizes, bm, bseed, bp, budget, engines);
  } catch (const std::exception& e) {
    std::cerr << "mib: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
