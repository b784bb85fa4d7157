// Exit gate: one PASS/FAIL line per acceptance criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "regge/asympt.hpp"
#include "regge/charfn.hpp"
#include "regge/kernel.hpp"
#include "regge/partialinv.hpp"
#include "regge/reconstruct.hpp"
#include "regge/roots.hpp"

using namespace regge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Closest entry of `pool` to z.
double nearest(const std::vector<Complex>& pool, Complex z) {
  double d = INFINITY;
  for (Complex w : pool) d = std::min(d, std::abs(w - z));
  return d;
}

// Every expected value has a match and the counts agree.
double set_distance(const std::vector<Complex>& got, const std::vector<Complex>& want) {
  if (got.size() != want.size()) return INFINITY;
  double worst = 0.0;
  for (Complex w : want) worst = std::max(worst, nearest(got, w));
  for (Complex g : got) worst = std::max(worst, nearest(want, g));
  return worst;
}

Potential random_grid(std::mt19937_64& rng, double a, bool real) {
  std::uniform_int_distribution<int> count(17, 65);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<Complex> s(static_cast<std::size_t>(count(rng)));
  for (Complex& v : s) v = real ? Complex(u(rng), 0.0) : Complex(u(rng), u(rng));
  return Potential::grid(s, a);
}

Complex random_in_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) <= 1.0) return radius * z;
  }
}

// 1. Closed-form spectrum of the zero potential.
Outcome zero_potential_spectrum() {
  const auto start = std::chrono::steady_clock::now();
  const ReggeProblem p = make_problem(1.0, 2.0, 0.0, 3.0, 0.0, Potential::zero(1.0));
  const Spectrum sp = problem_spectrum(CharFn(p), Sign::Plus, {-7, 7, -1, 2}, 1e-12);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double eta = std::log(6.0) / 2.0;
  std::vector<Complex> want{0.0, {0.0, eta}};
  for (double re : {kPi, 2 * kPi}) {
    want.push_back({re, eta});
    want.push_back({-re, eta});
  }
  const double err = set_distance(sp.values(), want);
  return {err <= 1e-8 && secs <= 5.0,
          std::to_string(sp.entries.size()) + " zeros, max error " + fmt("%.2e", err) + ", " +
              fmt("%.3f", secs) + " s"};
}

// 2. Delta+(l)Delta+(-l) - Delta-(l)Delta-(-l) = 4 alpha alpha0 l^2 on random grids.
Outcome identity_suite() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.2, 3.0), ub(-2.0, 2.0), ua(0.5, 2.0);
  double worst = 0.0;
  for (int run = 0; run < 5; ++run) {
    const double a = ua(rng);
    const double alpha0 = run == 0 ? 0.0 : u(rng);
    const ReggeProblem p = make_problem(a, alpha0, {ub(rng), ub(rng)}, u(rng), {ub(rng), ub(rng)},
                                        random_grid(rng, a, run % 2 == 0));
    const CharFn cf(p);
    for (int i = 0; i < 100; ++i) {
      const Complex z = random_in_disc(rng, 20.0);
      const Complex pp = cf.value(CharKind::Plus, z) * cf.value(CharKind::Plus, -z);
      const Complex mm = cf.value(CharKind::Minus, z) * cf.value(CharKind::Minus, -z);
      const Complex rhs = 4.0 * p.alpha * p.alpha0 * z * z;
      const double scale = std::abs(pp) + std::abs(mm) + std::abs(rhs);
      worst = std::max(worst, std::abs(pp - mm - rhs) / scale);
    }
  }
  return {worst <= 1e-8, "500 samples, max relative residual " + fmt("%.2e", worst)};
}

// 3. Energy identity on a random grid, and the closed-form value.
Outcome energy_identity() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> ub(-2.0, 2.0);
  const ReggeProblem p = make_problem(1.0, 1.5, {ub(rng), 0.3}, 2.5, {ub(rng), -0.4},
                                      random_grid(rng, 1.0, false));
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const EnergyTerms e = energy_terms(p, random_in_disc(rng, 10.0));
    worst = std::max(worst, std::abs(e.residual()) / std::max(std::abs(e.lhs), std::abs(e.rhs)));
  }
  const ReggeProblem z = make_problem(1.0, 2.0, 0.0, 3.0, 0.0, Potential::zero(1.0));
  const EnergyTerms e = energy_terms(z, kPi / 2.0);
  const Complex expected(-1.5 * kPi, 4.0);
  const double closed = std::max(std::abs(e.lhs - expected), std::abs(e.rhs - expected));
  return {worst <= 1e-6 && closed <= 1e-6,
          "max relative residual " + fmt("%.2e", worst) + ", closed-form deviation " +
              fmt("%.2e", closed)};
}

// 4. Constant potential against omega = sqrt(lambda^2 - c) closed forms.
Outcome constant_oracle() {
  double worst = 0.0;
  for (Complex c : {Complex(1.0, 0.0), Complex(-2.0, 0.5)}) {
    const double alpha0 = 1.5, alpha = 0.7;
    const Complex beta0(0.4, -0.2), beta(-1.0, 0.3);
    const ReggeProblem p = make_problem(1.0, alpha0, beta0, alpha, beta, Potential::constant(c, 1.0));
    for (double re = -20.0; re <= 20.0; re += 2.5) {
      for (double im = -5.0; im <= 5.0; im += 1.25) {
        const Complex l(re, im);
        if (std::abs(l) > 20.0) continue;
        const Complex w = std::sqrt(l * l - c);
        for (double x : {0.3, 0.75, 1.0}) {
          const Complex sn = std::sin(w * x) / w, cs = std::cos(w * x);
          const Complex s = sn, ds = cs;
          const Complex cc = cs + beta0 * sn, dc = -w * std::sin(w * x) + beta0 * cs;
          const Complex y = cc + kI * alpha0 * l * s, dy = dc + kI * alpha0 * l * ds;
          const double r = 1.0 - x;
          const Complex sr = std::sin(w * r) / w, cr = std::cos(w * r);
          const Complex kp = kI * alpha * l + beta, km = kI * alpha * l - beta;
          const Complex phip = cr + kp * sr, dphip = w * std::sin(w * r) - kp * cr;
          const Complex phim = cr - km * sr, dphim = w * std::sin(w * r) + km * cr;

          const SCValues v = solve_sc(p, l, x);
          const auto [yy, dyy] = solve_y(p, l, x);
          const auto [fp, dfp] = solve_phi(p, Sign::Plus, l, x);
          const auto [fm, dfm] = solve_phi(p, Sign::Minus, l, x);
          for (double e : {std::abs(v.s - s), std::abs(v.ds - ds), std::abs(v.c - cc),
                           std::abs(v.dc - dc), std::abs(yy - y), std::abs(dyy - dy),
                           std::abs(fp - phip), std::abs(dfp - dphip), std::abs(fm - phim),
                           std::abs(dfm - dphim)}) {
            worst = std::max(worst, e);
          }
        }
      }
    }
  }
  return {worst <= 1e-8, "max absolute error " + fmt("%.2e", worst)};
}

// 5. K(x, x) = (1/2) int_0^x q, and the transformation-operator form of s.
Outcome kernel_diagonal() {
  std::vector<double> xs;
  for (int i = 0; i <= 100; ++i) xs.push_back(i / 100.0);
  std::vector<Complex> ramp;
  for (double x : xs) ramp.push_back(x);
  double diag = 0.0, rep = 0.0;
  const std::vector<std::pair<Potential, std::function<double(double)>>> cases{
      {Potential::constant(1.0, 1.0), [](double x) { return 0.5 * x; }},
      {Potential::grid(ramp, 1.0), [](double x) { return 0.25 * x * x; }}};
  for (const auto& [q, half_integral] : cases) {
    const ReggeProblem p = make_problem(1.0, 1.0, 0.5, 2.0, 0.0, q);
    const KernelGrid kg = kernel_K(p, 201, 200, 1e-13);
    for (int i = 0; 2 * i < kg.points(); ++i) {
      const double x = 2 * i * kg.step();
      diag = std::max(diag, std::abs(kg.K(x, x) - half_integral(x)));
    }
    for (Complex l : {Complex(2.0, 0.0), Complex(3.0, 0.0), Complex(1.0, 1.0)}) {
      for (double x : {0.5, 1.0}) {
        rep = std::max(rep, std::abs(transform_rep_s(kg, l, x) - solve_sc(p, l, x).s));
      }
    }
  }
  return {diag <= 1e-6 && rep <= 1e-5,
          "diagonal error " + fmt("%.2e", diag) + ", representation vs ODE " + fmt("%.2e", rep)};
}

// 6. k (lambda_k - mu~_k) -> P for q = 1, alpha0 = 2, alpha = 3, beta0 = 1, beta = 2.
Outcome asymptotics() {
  const ReggeProblem p = make_problem(1.0, 2.0, 1.0, 3.0, 2.0, Potential::constant(1.0, 1.0));
  const AsymptoticModel m = asymptotic_model(p);
  // P recomputed from its defining sum with K1(a, a) = 1/2.
  const double P = (1.0 / (1.0 - 4.0) + 2.0 / (1.0 - 9.0) + 0.5) / kPi;
  const double im = std::log(6.0) / 2.0;
  const Spectrum sp =
      problem_spectrum(CharFn(p), Sign::Plus, {-41.3 * kPi, 41.3 * kPi, im - 1.5, im + 1.5}, 1e-12);
  std::vector<double> mags;
  for (const TailEntry& t : residual_tail(sp, m, Sign::Plus, 5)) {
    if (t.k >= 5 && t.k <= 40) mags.push_back(std::abs(t.beta));
  }
  bool decreasing = mags.size() == 36;
  for (std::size_t i = 1; i < mags.size(); ++i) decreasing = decreasing && mags[i] < mags[i - 1];
  double last = INFINITY;
  for (const SpectrumEntry& e : sp.entries) {
    if (e.k == 40) {
      const Complex mu(lattice_point(m, 40), im);
      last = std::abs(40.0 * (e.lambda - mu) - P);
    }
  }
  return {decreasing && last <= 0.05 && std::abs(m.P - P) <= 1e-14,
          "P = " + fmt("%.6f", P) + ", |beta_k| k=5..40 " + (decreasing ? "decreasing" : "NOT decreasing") +
              ", |40(lambda_40 - mu~_40) - P| = " + fmt("%.2e", last)};
}

// 7. One zero below the real axis for beta = -5, with the sign conditions.
Outcome lower_half_plane() {
  const ReggeProblem p = make_problem(1.0, 2.0, 0.0, 3.0, -5.0, Potential::zero(1.0));
  const Spectrum sp = problem_spectrum(CharFn(p), Sign::Plus, {-10.5, 10.5, -10.5, 3.0}, 1e-12);
  std::vector<Complex> below;
  for (Complex z : sp.values()) {
    if (z.imag() < -1e-9 && std::abs(z) <= 10.0) below.push_back(z);
  }
  const std::vector<ImagZero> axis = imaginary_axis_zeros(p, 10.0);
  const InterlaceReport rep = interlace_and_signs(p, axis);
  const bool located = below.size() == 1 && std::abs(below[0] - Complex(0.0, -1.231)) <= 0.01;
  const bool symmetric = pair_symmetry_check(sp, 1e-7);
  return {located && rep.passed && axis.size() == 1 && symmetric,
          std::to_string(below.size()) + " zero(s) below the axis" +
              (below.empty() ? std::string() : " at " + fmt("%.6f", below[0].imag()) + "i") +
              ", signs " + (rep.passed ? "ok" : "violated: " + rep.message) + ", pair symmetry " +
              (symmetric ? "ok" : "broken") + " over " + std::to_string(sp.entries.size()) + " zeros"};
}

// 8. Delta- of an even problem recovered from Delta+ by branch continuation.
Outcome even_pipeline() {
  std::vector<Complex> bump;
  for (int i = 0; i <= 64; ++i) {
    const double x = i / 64.0;
    bump.push_back(6.0 * x * (1.0 - x));
  }
  const std::vector<Potential> qs{Potential::zero(1.0), Potential::constant(1.0, 1.0),
                                  Potential::grid(bump, 1.0)};
  double worst = 0.0, zero_err = 0.0;
  bool counts = true;
  Complex at_pi{};
  for (std::size_t n = 0; n < qs.size(); ++n) {
    const ReggeProblem p = make_problem(1.0, 2.0, 1.0, 2.0, 1.0, qs[n]);
    const CharFn cf(p);
    const ComplexFn dp = cf.fn(CharKind::Plus);
    const auto dm = even_delta_minus(dp, p.alpha, p.a, 4.0 * kPi);
    for (int i = 0; i <= 400; ++i) {
      const double x = 4.0 * kPi * i / 400.0;
      const Complex direct = cf.value(CharKind::Minus, x);
      worst = std::max(worst, std::abs((*dm)(x)-direct) / std::abs(direct));
    }
    if (n == 0) at_pi = (*dm)(kPi);
    const ComplexFn dmf = [dm](Complex z) { return (*dm)(z); };
    const ComplexFn d0 = [&](Complex z) { return delta0_from_pair(dp, dmf, p.alpha, z); };
    const Rectangle r{0.05, 10.0, -2.0, 2.0};
    const std::vector<Complex> direct = find_zeros(cf.fn(CharKind::Zero), cf.dfn(CharKind::Zero), r, 1e-12).values();
    const std::vector<Complex> rebuilt = find_zeros(d0, {}, r, 1e-12).values();
    counts = counts && !direct.empty() && direct.size() == rebuilt.size();
    zero_err = std::max(zero_err, set_distance(rebuilt, direct));
  }
  return {worst <= 1e-6 && zero_err <= 1e-8 && counts && std::abs(at_pi + 2.0) <= 1e-8,
          "max relative error on [0,4pi] " + fmt("%.2e", worst) + ", Delta0 zero mismatch " +
              fmt("%.2e", zero_err) + ", Delta-(pi) = " + fmt("%.10f", at_pi.real()) +
              fmt("%+.1e", at_pi.imag()) + "i"};
}

// 9. Zeros of (Delta+ + Delta-)/2 against the Robin function.
Outcome two_spectra() {
  std::mt19937_64 rng(9);
  const std::vector<ReggeProblem> ps{
      make_problem(1.0, 2.0, 0.0, 3.0, 0.0, Potential::zero(1.0)),
      make_problem(1.0, 0.5, 1.0, 2.0, -0.5, Potential::constant(2.0, 1.0)),
      make_problem(1.5, 1.3, {0.2, 0.1}, 0.6, {0.7, -0.2}, random_grid(rng, 1.5, false))};
  double worst = 0.0;
  std::size_t total = 0;
  for (const ReggeProblem& p : ps) {
    const CharFn cf(p);
    const ComplexFn dp = cf.fn(CharKind::Plus), dm = cf.fn(CharKind::Minus);
    const ComplexFn half = [&](Complex z) { return two_spectra_robin(dp, dm, z); };
    const Rectangle r{-8.1, 8.2, -3.1, 3.2};
    const auto a = find_zeros(half, {}, r, 1e-13).values();
    const auto b = find_zeros(cf.fn(CharKind::Robin), cf.dfn(CharKind::Robin), r, 1e-13).values();
    worst = std::max(worst, b.empty() ? INFINITY : set_distance(a, b));
    total += b.size();
  }
  return {worst <= 1e-8, std::to_string(total) + " Robin zeros over 3 problems, max mismatch " +
                             fmt("%.2e", worst)};
}

// 10. Hadamard reconstruction of z cos z and of -i Delta+ for the zero potential.
Outcome hadamard() {
  const long N = 10000;
  std::vector<Complex> zeros{0.0};
  for (long k = -N; k < N; ++k) zeros.push_back((k + 0.5) * kPi);
  HadamardOptions opt;
  opt.truncation = static_cast<std::size_t>(N);
  const HadamardModel zc = hadamard_build(make_zero_set(zeros), {Coefficient::C1, 1.0}, opt);

  const double eta = std::log(6.0) / 2.0;
  std::vector<Complex> dz{0.0};
  for (long k = -N; k < N; ++k) dz.push_back({k * kPi, eta});
  const HadamardModel d = hadamard_build(make_zero_set(dz), {Coefficient::C1, 5.0}, opt);
  double rel = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double x = -5.0 + 10.0 * i / 200.0;
    if (x == 0.0) continue;
    const Complex exact = x * (5.0 * std::cos(x) + 7.0 * kI * std::sin(x));
    rel = std::max(rel, std::abs(d.evaluate(x) - exact) / std::abs(exact));
  }
  const double eb = std::abs(zc.b()), ec = std::abs(zc.c() - 1.0);
  return {eb <= 1e-3 && ec <= 1e-3 && rel <= 1e-3,
          "z cos z: |b| = " + fmt("%.2e", eb) + ", |c - 1| = " + fmt("%.2e", ec) +
              "; -i Delta+ max relative error " + fmt("%.2e", rel)};
}

// 11. Partial-inverse diagnostics for twins agreeing on (0.3, 1).
Outcome partial_inverse() {
  const double b = 0.3;
  std::vector<Complex> wedge;
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    wedge.push_back(x < b ? 4.0 * (b - x) : 0.0);
  }
  const ReggeProblem p1 = make_problem(1.0, 2.0, 0.5, 0.5, 0.3, Potential::zero(1.0));
  const ReggeProblem p2 = make_problem(1.0, 2.0, 0.5, 0.5, 0.3, Potential::grid(wedge, 1.0));

  const LogAbsFn lf = [&](Complex z) { return F_log_abs(p1, p2, b, z); };
  const IndicatorEstimate est = indicator_estimate(lf, uniform_angles(32), default_radii(1.0));
  double excess = -INFINITY;
  for (std::size_t i = 0; i < est.angles.size(); ++i) {
    excess = std::max(excess, est.h[i] - (2.0 * b * std::abs(std::sin(est.angles[i])) + 0.1));
  }

  const CharFn cf(p1);
  const AsymptoticModel m = asymptotic_model(p1);
  const double im = m.P0_plus / 2.0;
  const double R = 100.0 * kPi;
  const Spectrum full =
      find_zeros(cf.fn(CharKind::Plus), cf.dfn(CharKind::Plus), {-R - 1.3, R + 1.7, im - 2.0, im + 2.0}, 1e-10);
  const DensityReport dens = density_check(make_zero_set(full.values()), 1.0, {R / 4, R / 2, R});
  const double ratio = dens.ratios.back();

  const double J = 200;
  auto subset = [&](Sign s) {
    const double re = (J + 0.75) * kPi;
    const double c = m.P0(s) / 2.0;
    const Spectrum sp = problem_spectrum(cf, s, {-re, re, std::min(c, 0.0) - 1.0, std::max(c, 0.0) + 1.0}, 1e-10);
    std::vector<IndexedValue> out;
    for (const SpectrumEntry& e : sp.entries)
      if (std::abs(e.k) <= J) out.push_back({e.k, e.lambda});
    return out;
  };
  const CriticalDiagnostics d =
      critical_diagnostics(p1, p2, b, b, b, subset(Sign::Plus), subset(Sign::Minus));
  std::string profile;
  for (const Complex& e : d.E0) profile += fmt(" %.2e", std::abs(e));
  return {excess <= 0.0 && std::abs(ratio - 1.0) <= 0.1 && d.e0_decreasing(),
          "indicator margin " + fmt("%.3f", -excess) + ", density ratio at 100pi " +
              fmt("%.4f", ratio) + ", |E0(it)|:" + profile};
}

// 12. recover_alphas inverts the P0 map.
Outcome remark3_round_trip() {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.05, 4.0);
  double worst = 0.0;
  int draws = 0;
  while (draws < 20) {
    const double a0 = u(rng), al = u(rng);
    if (std::abs(a0 - 1.0) < 0.05 || std::abs(al - 1.0) < 0.05) continue;
    ++draws;
    const AsymptoticModel m =
        asymptotic_model(make_problem(1.0, a0, 0.0, al, 0.0, Potential::zero(1.0)));
    const auto [r0, r] = recover_alphas(m.P0_plus, m.P0_minus, a0 > 1.0 ? 1 : -1, m.case_sign);
    worst = std::max({worst, std::abs(r0 - a0), std::abs(r - al)});
  }
  return {worst <= 1e-10, "20 draws, max error " + fmt("%.2e", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"zero-potential exact spectra", zero_potential_spectrum},
      {"characteristic identity suite", identity_suite},
      {"energy identity", energy_identity},
      {"constant-potential oracle", constant_oracle},
      {"kernel diagonal", kernel_diagonal},
      {"eigenvalue asymptotics", asymptotics},
      {"lower half-plane structure", lower_half_plane},
      {"even-potential pipeline", even_pipeline},
      {"two-spectra pipeline", two_spectra},
      {"Hadamard reconstruction", hadamard},
      {"partial-inverse diagnostics", partial_inverse},
      {"alpha recovery round trip", remark3_round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
