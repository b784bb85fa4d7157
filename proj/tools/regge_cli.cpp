#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "regge/asympt.hpp"
#include "regge/charfn.hpp"
#include "regge/io.hpp"
#include "regge/partialinv.hpp"
#include "regge/reconstruct.hpp"
#include "regge/roots.hpp"

using namespace regge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

// Raised for user-facing precondition failures (exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::vector<std::string> configs;
  std::string out;
  double tol = 0.0;  // 0: per-command default
  std::string rect;
  long kmax = 10;
  int threads = 0;
};

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("REGGE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

double tol_or(const Globals& g, double fallback) { return g.tol > 0.0 ? g.tol : fallback; }

ReggeProblem config(const Globals& g, std::size_t i = 0) {
  if (g.configs.size() <= i) throw UsageError("missing --config");
  return load_problem(g.configs[i]);
}

Rectangle parse_rect(const std::string& text) {
  std::stringstream ss(text);
  std::vector<double> v;
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      v.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw UsageError("--rect expects four numbers \"re_min,re_max,im_min,im_max\"");
    }
  }
  if (v.size() != 4) throw UsageError("--rect expects four numbers \"re_min,re_max,im_min,im_max\"");
  Rectangle r{v[0], v[1], v[2], v[3]};
  if (!(r.width() > 0.0) || !(r.height() > 0.0)) throw UsageError("--rect is empty");
  return r;
}

// Explicit --rect, or a box around the first kmax lattice points.
Rectangle search_rect(const Globals& g, const ReggeProblem& p) {
  if (!g.rect.empty()) return parse_rect(g.rect);
  double lo = -3.0, hi = 3.0;
  try {
    const AsymptoticModel m = asymptotic_model(p);
    for (double P0 : {m.P0_plus, m.P0_minus}) {
      lo = std::min(lo, P0 / (2.0 * p.a) - 2.0);
      hi = std::max(hi, P0 / (2.0 * p.a) + 2.0);
    }
  } catch (const Error&) {
  }
  const double re = (double(g.kmax) + 0.75) * kPi / p.a;
  return {-re, re, lo, hi};
}

Sign parse_sign(const std::string& s) {
  if (s == "plus" || s == "+") return Sign::Plus;
  if (s == "minus" || s == "-") return Sign::Minus;
  throw UsageError("--sign must be plus or minus");
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
  } else {
    write_file_atomic(g.out, text);
  }
}

std::string with_suffix(const std::string& base, const std::string& suffix) {
  return (base.empty() ? std::string("partial") : base) + suffix;
}

RootOptions root_options(int threads) {
  RootOptions o;
  o.threads = threads;
  return o;
}

// --- spectrum / plot -------------------------------------------------------

struct SpectrumArgs {
  std::string sign = "plus";
  bool predict = false;
  std::string svg;
  bool lattice = false;
};

int cmd_spectrum(const Globals& g, const SpectrumArgs& a) {
  const ReggeProblem p = config(g);
  const Sign s = parse_sign(a.sign);
  const Rectangle r = search_rect(g, p);
  const int threads = resolve_threads(g.threads);
  const CharFn cf(p);
  const Spectrum sp = problem_spectrum(cf, s, r, tol_or(g, 1e-10), root_options(threads));
  std::optional<AsymptoticModel> m;
  if (a.predict || a.lattice) {
    try {
      m = asymptotic_model(p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateCase) throw;
    }
  }
  emit(g, spectrum_table(sp, a.predict && m ? &*m : nullptr).str());
  if (!a.svg.empty()) {
    std::vector<SvgSeries> series{{sp.values(), "#1f4e9c", false, "eigenvalues"}};
    if (a.lattice && m) {
      SvgSeries lat{{}, "#c0392b", true, "mu lattice"};
      for (long k = -g.kmax - 1; k <= g.kmax + 1; ++k) {
        if (!m->valid_index(k)) continue;
        const Complex mu = mu_k(*m, s, k);
        if (r.contains(mu)) lat.points.push_back(mu);
      }
      series.push_back(lat);
    }
    write_file_atomic(a.svg, svg_scatter(series, s == Sign::Plus ? "zeros of Delta+" : "zeros of Delta-"));
  }
  std::cerr << sp.entries.size() << " zeros in [" << r.re_min << "," << r.re_max << "]x["
            << r.im_min << "," << r.im_max << "]\n";
  return kExitOk;
}

int cmd_plot(const Globals& g, const SpectrumArgs& a) {
  if (g.out.empty()) throw UsageError("plot needs --out for the SVG file");
  const ReggeProblem p = config(g);
  const Sign s = parse_sign(a.sign);
  const Rectangle r = search_rect(g, p);
  const CharFn cf(p);
  const Spectrum sp =
      problem_spectrum(cf, s, r, tol_or(g, 1e-10), root_options(resolve_threads(g.threads)));
  std::vector<SvgSeries> series{{sp.values(), "#1f4e9c", false, "eigenvalues"}};
  if (a.lattice) {
    const AsymptoticModel m = asymptotic_model(p);
    SvgSeries lat{{}, "#c0392b", true, "mu lattice"};
    for (long k = -g.kmax - 1; k <= g.kmax + 1; ++k) {
      if (m.valid_index(k) && r.contains(mu_k(m, s, k))) lat.points.push_back(mu_k(m, s, k));
    }
    series.push_back(lat);
  }
  write_file_atomic(g.out, svg_scatter(series, s == Sign::Plus ? "zeros of Delta+" : "zeros of Delta-"));
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string check = "identity";
  int samples = 20;
  unsigned seed = 1;
  double radius = 20.0;
  double tau_max = 10.0;
};

std::vector<Complex> random_points(const VerifyArgs& v) {
  std::mt19937_64 rng(v.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> out;
  while (out.size() < static_cast<std::size_t>(v.samples)) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) <= 1.0) out.push_back(v.radius * z);
  }
  return out;
}

bool report(const std::string& name, bool pass, double max_residual, const std::string& extra = {}) {
  std::cout << name << ": " << (pass ? "PASS" : "FAIL") << " max_residual=" << format_number(max_residual)
            << extra << "\n";
  return pass;
}

int cmd_verify(const Globals& g, const VerifyArgs& v) {
  const ReggeProblem p = config(g);
  const int threads = resolve_threads(g.threads);
  const CharFn cf(p);
  if ((v.check == "symmetry" || v.check == "interlace") && !p.real_data) {
    throw UsageError(v.check + " check needs real boundary data and a real potential (real_data)");
  }
  bool pass = true;
  if (v.check == "identity") {
    double worst = 0.0;
    for (Complex z : random_points(v)) {
      const Complex pp = cf.value(CharKind::Plus, z) * cf.value(CharKind::Plus, -z);
      const Complex mm = cf.value(CharKind::Minus, z) * cf.value(CharKind::Minus, -z);
      const double scale = std::abs(pp) + std::abs(mm) + 4.0 * p.alpha * p.alpha0 * std::norm(z);
      const double res = std::abs(pp - mm - 4.0 * p.alpha * p.alpha0 * z * z) / std::max(scale, 1e-300);
      worst = std::max(worst, res);
    }
    pass = report("identity", worst <= tol_or(g, 1e-8), worst);
  } else if (v.check == "energy") {
    double worst = 0.0;
    for (Complex z : random_points(v)) {
      const EnergyTerms e = energy_terms(p, z);
      worst = std::max(worst, std::abs(e.residual()) /
                                  std::max({1.0, std::abs(e.lhs), std::abs(e.rhs)}));
    }
    pass = report("energy", worst <= tol_or(g, 1e-6), worst);
  } else if (v.check == "wronskian") {
    double worst = 0.0;
    for (Complex z : random_points(v)) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const Complex d = cf.value(to_kind(s), z);
        for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
          const Complex w = wronskian_delta(p, s, z, frac * p.a);
          worst = std::max(worst, std::abs(w - d) / std::max(1.0, std::abs(d)));
        }
      }
    }
    pass = report("wronskian", worst <= tol_or(g, 1e-8), worst);
  } else if (v.check == "symmetry") {
    const Rectangle r = search_rect(g, p);
    const Spectrum sp = problem_spectrum(cf, Sign::Plus, r, 1e-10, root_options(threads));
    // Only zeros whose mirror image also lies in the box are expected to pair.
    std::vector<Complex> inner;
    const double half = std::min(-r.re_min, r.re_max);
    for (Complex z : sp.values()) {
      if (std::abs(z.real()) <= half - 1e-6) inner.push_back(z);
    }
    const double t = tol_or(g, 1e-7);
    pass = report("symmetry", pair_symmetry_check(inner, t), 0.0,
                  " zeros=" + std::to_string(inner.size()));
  } else if (v.check == "interlace") {
    const std::vector<ImagZero> zs = imaginary_axis_zeros(p, v.tau_max);
    const InterlaceReport rep = interlace_and_signs(p, zs);
    std::ostringstream extra;
    extra << " zeros=" << zs.size();
    for (const ImagZero& z : zs) extra << " tau=" << format_number(z.tau);
    if (!rep.passed) extra << " reason=" << rep.message;
    pass = report("interlace", rep.passed, 0.0, extra.str());
  } else {
    throw UsageError("--check must be identity, energy, wronskian, symmetry or interlace");
  }
  return pass ? kExitOk : kExitCheckFailed;
}

// --- asympt ----------------------------------------------------------------

int cmd_asympt(const Globals& g, const std::string& sign, long kmin) {
  const ReggeProblem p = config(g);
  const Sign s = parse_sign(sign);
  const AsymptoticModel m = asymptotic_model(p);
  const Rectangle r = search_rect(g, p);
  const CharFn cf(p);
  const Spectrum sp =
      problem_spectrum(cf, s, r, tol_or(g, 1e-10), root_options(resolve_threads(g.threads)));
  emit(g, tail_table(residual_tail(sp, m, s, kmin)).str());
  std::cerr << "case_sign=" << m.case_sign << " P0+=" << format_number(m.P0_plus)
            << " P0-=" << format_number(m.P0_minus) << " P=" << format_number(m.P.real()) << "+"
            << format_number(m.P.imag()) << "i zeros=" << sp.entries.size() << "\n";
  return kExitOk;
}

// --- reconstruct -----------------------------------------------------------

struct ReconstructArgs {
  std::string mode = "hadamard";
  std::string zeros;
  std::string coef = "c1";
  std::vector<double> value{1.0, 0.0};
  double type_a = 1.0;
  std::size_t truncation = 0;
  bool no_tail = false;
  double from = -5.0, to = 5.0;
  int points = 101;
};

std::vector<double> grid(double from, double to, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(n == 1 ? from : from + (to - from) * i / (n - 1));
  return out;
}

int cmd_reconstruct(const Globals& g, const ReconstructArgs& a) {
  if (a.mode == "hadamard") {
    if (a.zeros.empty()) throw UsageError("hadamard mode needs --zeros FILE");
    const ZeroSet zs = load_zero_set(a.zeros);
    KnownCoefficient kc;
    if (a.coef == "c1") kc.which = Coefficient::C1;
    else if (a.coef == "c2") kc.which = Coefficient::C2;
    else if (a.coef == "c1+c2") kc.which = Coefficient::C1PlusC2;
    else if (a.coef == "c1-c2") kc.which = Coefficient::C1MinusC2;
    else throw UsageError("--coef must be c1, c2, c1+c2 or c1-c2");
    kc.value = {a.value.at(0), a.value.size() > 1 ? a.value[1] : 0.0};
    HadamardOptions opt;
    opt.a = a.type_a;
    opt.truncation = a.truncation;
    opt.lattice_tail = !a.no_tail;
    opt.tolerance = tol_or(g, opt.tolerance);
    const HadamardModel m = hadamard_build(zs, kc, opt);
    std::vector<CharFnSample> rows;
    for (double x : grid(a.from, a.to, a.points)) rows.push_back({x, m.evaluate(x), {}, 0.0, false});
    emit(g, charfn_table(rows).str());
    std::cerr << "b=" << format_number(m.b().real()) << "+" << format_number(m.b().imag())
              << "i c=" << format_number(m.c().real()) << "+" << format_number(m.c().imag())
              << "i spread_b=" << format_number(m.b_trace().spread)
              << " spread_c=" << format_number(m.c_trace().spread) << "\n";
    return kExitOk;
  }
  const ReggeProblem p = config(g);
  const CharFn cf(p);
  const ComplexFn dp = cf.fn(CharKind::Plus);
  if (a.mode == "even") {
    if (p.alpha0 != p.alpha || p.beta0 != p.beta ||
        !potential_is_even(p.potential, p.a, default_even_tolerance(p.potential))) {
      throw UsageError("even mode needs alpha0 = alpha, beta0 = beta and q(x) = q(a - x)");
    }
    const double to = a.to > 0.0 ? a.to : 4.0 * kPi;
    const auto dm = even_delta_minus(dp, p.alpha, p.a, to);
    CsvTable t({"lambda", "recovered_re", "recovered_im", "direct_re", "direct_im", "rel_error"});
    double worst = 0.0;
    for (double x : grid(0.0, to, a.points)) {
      const Complex rec = (*dm)(x), dir = cf.value(CharKind::Minus, x);
      const double err = std::abs(rec - dir) / std::max(1.0, std::abs(dir));
      worst = std::max(worst, err);
      t.row(std::vector<double>{x, rec.real(), rec.imag(), dir.real(), dir.imag(), err});
    }
    emit(g, t.str());
    std::cerr << "max_rel_error=" << format_number(worst) << "\n";
    return kExitOk;
  }
  if (a.mode == "two-spectra") {
    const ComplexFn dm = cf.fn(CharKind::Minus);
    const ComplexFn half_sum = [&](Complex z) { return two_spectra_robin(dp, dm, z); };
    const ComplexFn robin = cf.fn(CharKind::Robin);
    const Rectangle r = search_rect(g, p);
    const RootOptions ro = root_options(resolve_threads(g.threads));
    const std::vector<Complex> from_pair = find_zeros(half_sum, {}, r, 1e-12, ro).values();
    const std::vector<Complex> direct = find_zeros(robin, cf.dfn(CharKind::Robin), r, 1e-12, ro).values();
    CsvTable t({"pair_re", "pair_im", "robin_re", "robin_im", "distance"});
    double worst = from_pair.size() == direct.size() ? 0.0 : INFINITY;
    for (const Complex z : from_pair) {
      Complex best = NAN;
      double d = INFINITY;
      for (Complex w : direct) {
        if (std::abs(w - z) < d) d = std::abs(w - z), best = w;
      }
      worst = std::max(worst, d);
      t.row(std::vector<double>{z.real(), z.imag(), best.real(), best.imag(), d});
    }
    emit(g, t.str());
    std::cerr << "pair_zeros=" << from_pair.size() << " robin_zeros=" << direct.size()
              << " max_distance=" << format_number(worst) << "\n";
    return kExitOk;
  }
  throw UsageError("--mode must be hadamard, even or two-spectra");
}

// --- partial ---------------------------------------------------------------

struct PartialArgs {
  double b = 0.0;
  int angles = 32;
  std::vector<double> radii;
  bool critical = false;
  long J = 200;
  std::vector<double> t_schedule;
  double density_radius = 0.0;
};

std::vector<IndexedValue> indexed_subset(const CharFn& cf, Sign s, long J, double im_lo,
                                         double im_hi, const RootOptions& ro) {
  const double re = (double(J) + 0.75) * kPi / cf.problem().a;
  const Spectrum sp = problem_spectrum(cf, s, {-re, re, im_lo, im_hi}, 1e-10, ro);
  std::vector<IndexedValue> out;
  for (const SpectrumEntry& e : sp.entries) {
    if (std::abs(e.k) <= J) out.push_back({e.k, e.lambda});
  }
  return out;
}

int cmd_partial(const Globals& g, const PartialArgs& a) {
  if (g.configs.size() != 2) throw UsageError("partial needs two --config files");
  const ReggeProblem p1 = config(g, 0), p2 = config(g, 1);
  if (!(a.b > 0.0 && a.b < p1.a) || p1.a != p2.a) {
    throw UsageError("partial needs configs with equal a and 0 < --b < a");
  }
  const int threads = resolve_threads(g.threads);
  const RootOptions ro = root_options(threads);
  const std::vector<double> radii = a.radii.empty() ? default_radii(p1.a) : a.radii;

  CsvTable growth({"r", "max_scaled_F"});
  const std::vector<double> gr = F_growth(p1, p2, a.b, radii, a.angles, {}, threads);
  for (std::size_t i = 0; i < radii.size(); ++i) growth.row(std::vector<double>{radii[i], gr[i]});
  write_file_atomic(with_suffix(g.out, "_growth.csv"), growth.str());

  const bool vanishing = std::all_of(gr.begin(), gr.end(), [](double v) { return v == 0.0; });
  CsvTable ind({"theta", "h", "bound"});
  bool bounded = true;
  if (vanishing) {
    // F is identically zero; its indicator is -inf everywhere.
    for (double th : uniform_angles(a.angles)) {
      ind.row(std::vector<double>{th, -INFINITY, 2.0 * a.b * std::abs(std::sin(th)) + 0.1});
    }
  } else {
    const LogAbsFn lf = [&](Complex z) { return F_log_abs(p1, p2, a.b, z); };
    const IndicatorEstimate est = indicator_estimate(lf, uniform_angles(a.angles), radii, threads);
    for (std::size_t i = 0; i < est.angles.size(); ++i) {
      const double bound = 2.0 * a.b * std::abs(std::sin(est.angles[i])) + 0.1;
      if (est.h[i] > bound) bounded = false;
      ind.row(std::vector<double>{est.angles[i], est.h[i], bound});
    }
  }
  write_file_atomic(with_suffix(g.out, "_indicator.csv"), ind.str());

  const CharFn cf(p1);
  const double dr = a.density_radius > 0.0 ? a.density_radius : 20.0 * kPi;
  double im_lo = -3.0, im_hi = 3.0;
  std::optional<AsymptoticModel> m;
  try {
    m = asymptotic_model(p1);
    for (double P0 : {m->P0_plus, m->P0_minus}) {
      im_lo = std::min(im_lo, P0 / (2.0 * p1.a) - 2.0);
      im_hi = std::max(im_hi, P0 / (2.0 * p1.a) + 2.0);
    }
  } catch (const Error&) {
  }
  const Spectrum sp = find_zeros(cf.fn(CharKind::Plus), cf.dfn(CharKind::Plus),
                                 {-dr - 1.0, dr + 1.0, im_lo, im_hi}, 1e-10, ro);
  const ZeroSet zs = make_zero_set(sp.values());
  const DensityReport dens = density_check(zs, p1.a, {dr / 4.0, dr / 2.0, dr});
  CsvTable den({"r", "ratio"});
  for (std::size_t i = 0; i < dens.radii.size(); ++i) den.row(std::vector<double>{dens.radii[i], dens.ratios[i]});
  write_file_atomic(with_suffix(g.out, "_density.csv"), den.str());

  if (vanishing) std::cout << "F vanishes identically on the sampled circles\n";
  std::cout << "indicator bounded by 2b|sin|+0.1: " << (bounded ? "yes" : "no") << "\n";
  std::cout << "density ratio at r=" << format_number(dr) << ": " << format_number(dens.ratios.back())
            << (dens.stable ? " (within window)" : " (outside window)") << "\n";

  if (a.critical) {
    if (!m) throw Error(ErrorCode::DegenerateCase, "critical diagnostics need a lattice");
    const auto plus = indexed_subset(cf, Sign::Plus, a.J, im_lo, im_hi, ro);
    const auto minus = indexed_subset(cf, Sign::Minus, a.J, im_lo, im_hi, ro);
    const DeviationReport dev = weighted_deviation(plus, minus, a.b, a.b, *m);
    CriticalOptions co;
    co.J = a.J;
    co.threads = threads;
    if (!a.t_schedule.empty()) co.t_schedule = a.t_schedule;
    const CriticalDiagnostics d = critical_diagnostics(p1, p2, a.b, a.b, a.b, plus, minus, co);
    write_file_atomic(with_suffix(g.out, "_critical.csv"), critical_table(d).str());
    std::cout << "weighted deviation (b+ = b- = b): " << format_number(dev.value) << " over j in ["
              << dev.j_min << "," << dev.j_max << "], " << dev.terms << " terms\n";
    std::cout << "E0 decreasing over schedule: " << (d.e0_decreasing() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regge boundary-value problems: spectra, checks, reconstruction"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.configs, "problem config (JSON); give twice for partial");
  app.add_option("--out", g.out, "output file (or prefix for partial)");
  app.add_option("--tol", g.tol, "tolerance override")->check(CLI::PositiveNumber);
  app.add_option("--rect", g.rect, "search rectangle \"re_min,re_max,im_min,im_max\"");
  app.add_option("--kmax", g.kmax, "lattice points covered by the default rectangle")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "worker threads (REGGE_THREADS fallback)");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "zeros of Delta+ or Delta- as CSV");
  spectrum->add_option("--sign", sa.sign, "plus or minus");
  spectrum->add_flag("--predict", sa.predict, "add predicted lattice columns");
  spectrum->add_option("--svg", sa.svg, "also write an SVG scatter");
  spectrum->add_flag("--lattice", sa.lattice, "overlay the mu lattice in the SVG");

  SpectrumArgs pa;
  auto* plot = app.add_subcommand("plot", "SVG scatter of a spectrum");
  plot->add_option("--sign", pa.sign, "plus or minus");
  plot->add_flag("--lattice", pa.lattice, "overlay the mu lattice");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check one identity or structural property");
  verify->add_option("--check", va.check, "identity|energy|wronskian|symmetry|interlace");
  verify->add_option("--samples", va.samples, "random points");
  verify->add_option("--seed", va.seed, "random seed");
  verify->add_option("--radius", va.radius, "sample disc radius");
  verify->add_option("--tau-max", va.tau_max, "imaginary-axis scan length");

  std::string asign = "plus";
  long kmin = 5;
  auto* asympt = app.add_subcommand("asympt", "residual tail k(lambda_k - mu_k) - P as CSV");
  asympt->add_option("--sign", asign, "plus or minus");
  asympt->add_option("--kmin", kmin, "smallest |k| reported");

  ReconstructArgs ra;
  auto* recon = app.add_subcommand("reconstruct", "rebuild characteristic functions");
  recon->add_option("--mode", ra.mode, "hadamard|even|two-spectra");
  recon->add_option("--zeros", ra.zeros, "zero-set file (hadamard)");
  recon->add_option("--coef", ra.coef, "known coefficient: c1|c2|c1+c2|c1-c2");
  recon->add_option("--value", ra.value, "known coefficient value: re [im]")->expected(1, 2);
  recon->add_option("--type", ra.type_a, "exponential type a");
  recon->add_option("--truncation", ra.truncation, "zeros kept per side (0 keeps all)");
  recon->add_flag("--no-tail", ra.no_tail, "disable the lattice tail completion");
  recon->add_option("--from", ra.from, "sample interval start");
  recon->add_option("--to", ra.to, "sample interval end");
  recon->add_option("--points", ra.points, "number of samples");

  PartialArgs pta;
  auto* partial = app.add_subcommand("partial", "partial inverse diagnostics for two configs");
  partial->add_option("--b", pta.b, "split point b")->required();
  partial->add_option("--angles", pta.angles, "angle grid size");
  partial->add_option("--radii", pta.radii, "radius schedule");
  partial->add_flag("--critical", pta.critical, "emit the E0 decay report");
  partial->add_option("--J", pta.J, "lattice index cut");
  partial->add_option("--t", pta.t_schedule, "t schedule for E0");
  partial->add_option("--density-radius", pta.density_radius, "largest density probe radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*spectrum) return cmd_spectrum(g, sa);
    if (*plot) return cmd_plot(g, pa);
    if (*verify) return cmd_verify(g, va);
    if (*asympt) return cmd_asympt(g, asign, kmin);
    if (*recon) return cmd_reconstruct(g, ra);
    if (*partial) return cmd_partial(g, pta);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::ConfigError ? kExitConfig : kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitConfig;
}
