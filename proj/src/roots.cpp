#include "regge/roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "regge/parallel.hpp"

namespace regge {

void check_rectangle(const Rectangle& r) {
  if (!(r.re_max > r.re_min) || !(r.im_max > r.im_min) || !std::isfinite(r.re_min) ||
      !std::isfinite(r.re_max) || !std::isfinite(r.im_min) || !std::isfinite(r.im_max)) {
    throw Error(ErrorCode::InvalidArgument, "rectangle must be nonempty and finite");
  }
}

std::vector<Complex> Spectrum::values() const {
  std::vector<Complex> out;
  for (const auto& e : entries)
    for (int m = 0; m < e.multiplicity; ++m) out.push_back(e.lambda);
  return out;
}

bool spectral_less(Complex a, Complex b) {
  const double tol = 1e-9 * (1.0 + std::max(std::abs(a), std::abs(b)));
  if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
  return a.imag() < b.imag();
}

void sort_entries(std::vector<SpectrumEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectrumEntry& x, const SpectrumEntry& y) {
                     return spectral_less(x.lambda, y.lambda);
                   });
}

namespace {

/// Memoizes f on exact sample coordinates so edges shared by sibling cells
/// are evaluated once.
class CachedFn {
 public:
  explicit CachedFn(const ComplexFn& f) : f_(f) {}

  Complex operator()(Complex z) const {
    const auto key = std::make_pair(z.real(), z.imag());
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    const Complex v = f_(z);
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, v);
    return v;
  }

 private:
  const ComplexFn& f_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<double, double>, Complex> cache_;
};

template <class F>
double segment_phase(const F& f, const WindingOptions& opt, Complex z0, Complex f0, Complex z1,
                     Complex f1, int depth) {
  const Complex zm = 0.5 * (z0 + z1);
  const Complex fm = f(zm);
  if (fm == Complex{} || !std::isfinite(std::abs(fm))) {
    throw Error(ErrorCode::BoundaryZero, "function vanishes on the contour");
  }
  const double d0 = std::arg(f1 / f0);
  const double d1 = std::arg(fm / f0);
  const double d2 = std::arg(f1 / fm);
  if (std::abs(d1) < opt.max_step_phase && std::abs(d2) < opt.max_step_phase &&
      std::abs(d1 + d2 - d0) < opt.consistency) {
    // Quarter points catch a full turn hidden inside one half, which a
    // clustered zero close to the segment can produce.
    const Complex fa = f(0.5 * (z0 + zm));
    const Complex fb = f(0.5 * (zm + z1));
    const double q1 = std::arg(fa / f0), q2 = std::arg(fm / fa);
    const double q3 = std::arg(fb / fm), q4 = std::arg(f1 / fb);
    const double qmax = std::max({std::abs(q1), std::abs(q2), std::abs(q3), std::abs(q4)});
    if (std::isfinite(std::abs(fa)) && std::isfinite(std::abs(fb)) && qmax < opt.max_step_phase &&
        std::abs(q1 + q2 - d1) < opt.consistency && std::abs(q3 + q4 - d2) < opt.consistency) {
      return d1 + d2;
    }
  }
  if (depth >= opt.max_depth) {
    throw Error(ErrorCode::BoundaryZero, "phase unresolved near the contour");
  }
  return segment_phase(f, opt, z0, f0, zm, fm, depth + 1) +
         segment_phase(f, opt, zm, fm, z1, f1, depth + 1);
}

bool lex_less(Complex a, Complex b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

template <class F>
double edge_phase(const F& f, const WindingOptions& opt, Complex a, Complex b) {
  if (lex_less(b, a)) return -edge_phase(f, opt, b, a);
  const double len = std::abs(b - a);
  const int n = std::max(opt.min_samples_per_edge,
                         static_cast<int>(std::ceil(len / opt.sample_spacing)));
  double total = 0.0;
  Complex z0 = a;
  Complex f0 = f(a);
  if (f0 == Complex{} || !std::isfinite(std::abs(f0))) {
    throw Error(ErrorCode::BoundaryZero, "function vanishes on the contour");
  }
  for (int k = 1; k <= n; ++k) {
    const Complex z1 = k == n ? b : a + (b - a) * (double(k) / n);
    const Complex f1 = f(z1);
    if (f1 == Complex{} || !std::isfinite(std::abs(f1))) {
      throw Error(ErrorCode::BoundaryZero, "function vanishes on the contour");
    }
    total += segment_phase(f, opt, z0, f0, z1, f1, 0);
    z0 = z1;
    f0 = f1;
  }
  return total;
}

template <class F>
int winding_impl(const F& f, const Rectangle& r, const WindingOptions& opt) {
  const Complex c0(r.re_min, r.im_min), c1(r.re_max, r.im_min), c2(r.re_max, r.im_max),
      c3(r.re_min, r.im_max);
  const double total = edge_phase(f, opt, c0, c1) + edge_phase(f, opt, c1, c2) +
                       edge_phase(f, opt, c2, c3) + edge_phase(f, opt, c3, c0);
  const double turns = total / (2.0 * kPi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.2) {
    throw Error(ErrorCode::BoundaryZero, "winding number not close to an integer");
  }
  if (rounded < 0) throw Error(ErrorCode::NoConvergence, "negative winding: f is not analytic");
  return static_cast<int>(rounded);
}

struct Finder {
  CachedFn f;
  ComplexFn df;
  RootOptions opt;
  double min_size;
  std::mutex mu;
  std::vector<SpectrumEntry> found;

  Complex derivative(Complex z, double h) const {
    if (df) return df(z);
    return (f(z + h) - f(z - h)) / (2.0 * h);
  }

  // Returns true with the refined point if Newton converges.
  bool newton(Complex z, int m, double size, Complex& out, double& residual) const {
    const Complex start = z;
    Complex fz = f(z);
    for (int it = 0; it < opt.max_newton; ++it) {
      if (fz == Complex{}) break;
      const Complex d = derivative(z, 1e-6 * (1.0 + std::abs(z)));
      if (d == Complex{} || !std::isfinite(std::abs(d))) return false;
      const Complex step = double(m) * fz / d;
      z -= step;
      if (!std::isfinite(std::abs(z)) || std::abs(z - start) > 2.0 * size + 1e-12) return false;
      fz = f(z);
      if (std::abs(step) <= opt.xtol * (1.0 + std::abs(z))) break;
      if (it + 1 == opt.max_newton && std::abs(fz) > opt.ftol) return false;
    }
    out = z;
    residual = std::abs(fz);
    return true;
  }

  void record(Complex z, int m, double residual) {
    std::lock_guard<std::mutex> lock(mu);
    found.push_back({0, z, m, residual});
  }

  void process(const Rectangle& cell, int count, int depth = 0) {
    if (count == 0) return;
    const double size = std::max(cell.width(), cell.height());
    const bool tiny = size <= min_size;
    if (count > opt.multiplicity_cap && tiny) {
      throw Error(ErrorCode::MultiplicityCap, "zero cluster exceeds multiplicity cap");
    }
    if (count == 1 || tiny) {
      Complex z;
      double res = 0.0;
      const Complex center(0.5 * (cell.re_min + cell.re_max), 0.5 * (cell.im_min + cell.im_max));
      if (newton(center, count, size, z, res) && cell.contains(z, 1e-9 * size)) {
        record(z, count, res);
        return;
      }
      if (tiny) throw Error(ErrorCode::NewtonDivergence, "Newton failed in a minimal cell");
    }
    std::vector<Rectangle> kids;
    std::vector<int> counts;
    bool ok = false;
    for (int attempt = 0; attempt <= opt.boundary_retries && !ok; ++attempt) {
      const double fx = 0.5371 + 0.0613 * attempt - (attempt % 2) * 0.1347;
      const double fy = 0.5371 + 0.0479 * attempt - (attempt % 2) * 0.1211;
      const double xm = cell.re_min + fx * cell.width();
      const double ym = cell.im_min + fy * cell.height();
      if (cell.width() > 2.0 * cell.height()) {
        kids = {{cell.re_min, xm, cell.im_min, cell.im_max},
                {xm, cell.re_max, cell.im_min, cell.im_max}};
      } else if (cell.height() > 2.0 * cell.width()) {
        kids = {{cell.re_min, cell.re_max, cell.im_min, ym},
                {cell.re_min, cell.re_max, ym, cell.im_max}};
      } else {
        kids = {{cell.re_min, xm, cell.im_min, ym},
                {xm, cell.re_max, cell.im_min, ym},
                {cell.re_min, xm, ym, cell.im_max},
                {xm, cell.re_max, ym, cell.im_max}};
      }
      counts.assign(kids.size(), 0);
      try {
        int sum = 0;
        for (std::size_t i = 0; i < kids.size(); ++i) {
          counts[i] = winding_impl(f, kids[i], opt.winding);
          sum += counts[i];
        }
        ok = sum == count;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BoundaryZero) throw;
      }
    }
    if (!ok) throw Error(ErrorCode::BoundaryZero, "could not split a cell cleanly");
    parallel_for(kids.size(), depth == 0 ? opt.threads : 1,
                 [&](std::size_t i) { process(kids[i], counts[i], depth + 1); });
  }
};

}  // namespace

int winding_count(const ComplexFn& f, const Rectangle& r, const WindingOptions& opt) {
  check_rectangle(r);
  return winding_impl(f, r, opt);
}

Spectrum find_zeros(const ComplexFn& f, const ComplexFn& df, const Rectangle& r, double tol,
                    RootOptions opt) {
  check_rectangle(r);
  if (tol > 0.0) opt.ftol = tol;
  Finder finder{CachedFn(f), df, opt, opt.min_cell * std::max(r.width(), r.height()), {}, {}};
  Rectangle region = r;
  int count = -1;
  for (int attempt = 0; attempt <= opt.boundary_retries; ++attempt) {
    try {
      count = winding_impl(finder.f, region, opt.winding);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundaryZero || attempt == opt.boundary_retries) throw;
      const double dx = opt.boundary_shift * region.width();
      const double dy = opt.boundary_shift * region.height();
      region = {region.re_min - dx, region.re_max + dx, region.im_min - dy, region.im_max + dy};
    }
  }
  finder.process(region, count);

  std::vector<SpectrumEntry> merged;
  sort_entries(finder.found);
  for (const auto& e : finder.found) {
    bool dup = false;
    for (auto& m : merged) {
      if (std::abs(m.lambda - e.lambda) <= 1e-8 * (1.0 + std::abs(e.lambda))) {
        m.multiplicity = std::max(m.multiplicity, e.multiplicity);
        dup = true;
        break;
      }
    }
    if (!dup) merged.push_back(e);
  }
  Spectrum sp;
  sp.entries = std::move(merged);
  sp.region = region;
  return sp;
}

Spectrum problem_spectrum(const CharFn& cf, Sign s, const Rectangle& r, double tol,
                          RootOptions opt) {
  const CharKind kind = to_kind(s);
  Spectrum sp = find_zeros(cf.fn(kind), cf.dfn(kind), r, tol, opt);
  sp.sign = s;
  return index_eigenvalues(sp, cf.problem(), s);
}

std::vector<ImagZero> imaginary_axis_zeros(const ReggeProblem& p, double tau_max,
                                           double scan_step, const OdeOptions& opt) {
  if (!p.real_data) throw Error(ErrorCode::InvalidArgument, "imaginary-axis scan needs real data");
  if (!(scan_step > 0.0)) throw Error(ErrorCode::InvalidArgument, "scan step must be positive");
  const CharFn cf(p, opt);
  auto g = [&](double tau) { return cf.value(CharKind::Plus, Complex(0.0, -tau)).real(); };
  std::vector<ImagZero> out;
  double t0 = std::min(scan_step, tau_max) * 1e-3;
  double g0 = g(t0);
  const long n = static_cast<long>(std::ceil(tau_max / scan_step));
  for (long k = 1; k <= n; ++k) {
    const double t1 = std::min(k * scan_step, tau_max);
    if (t1 <= t0) continue;
    const double g1 = g(t1);
    if (g1 == 0.0) {
      out.push_back({t1, Complex(0.0, -t1)});
    } else if (g0 != 0.0 && (g0 < 0.0) != (g1 < 0.0)) {
      double lo = t0, hi = t1, glo = g0;
      while (hi - lo > 1e-15 * (1.0 + hi)) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double gm = g(mid);
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((gm < 0.0) == (glo < 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      const double tau = 0.5 * (lo + hi);
      out.push_back({tau, Complex(0.0, -tau)});
    }
    t0 = t1;
    g0 = g1;
  }
  return out;
}

InterlaceReport interlace_and_signs(const ReggeProblem& p, std::vector<ImagZero> zeros,
                                    const OdeOptions& opt) {
  if (!p.real_data) throw Error(ErrorCode::InvalidArgument, "interlacing needs real data");
  std::sort(zeros.begin(), zeros.end(),
            [](const ImagZero& x, const ImagZero& y) { return x.tau < y.tau; });
  const CharFn cf(p, opt);
  InterlaceReport rep;
  const int kappa = static_cast<int>(zeros.size());
  auto d0 = [&](double tau) { return cf.value(CharKind::Zero, Complex(0.0, -tau)).real(); };
  for (int j = 1; j <= kappa; ++j) {
    const double tau = zeros[j - 1].tau;
    const double sgn = (kappa - j) % 2 == 0 ? 1.0 : -1.0;
    InterlaceWitness w;
    w.j = j;
    w.tau = tau;
    w.i_delta_plus_dot = (kI * cf.derivative(CharKind::Plus, Complex(0.0, -tau))).real() * sgn;
    w.delta_zero = d0(tau) * sgn;
    if (rep.passed && !(w.i_delta_plus_dot < 0.0 && w.delta_zero > 0.0)) {
      rep.passed = false;
      rep.failure = ErrorCode::SignViolation;
      rep.message = "sign condition fails at j = " + std::to_string(j);
    }
    if (j < kappa) {
      const double next = zeros[j].tau;
      const int n = 200;
      double a = tau, ga = d0(tau);
      for (int k = 1; k <= n; ++k) {
        const double b = k == n ? next : tau + (next - tau) * k / n;
        const double gb = d0(b);
        if ((ga < 0.0) != (gb < 0.0)) {
          double lo = a, hi = b, glo = ga;
          for (int it = 0; it < 100 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            const double gm = d0(mid);
            if ((gm < 0.0) == (glo < 0.0)) {
              lo = mid;
              glo = gm;
            } else {
              hi = mid;
            }
          }
          w.delta_zero_roots_between.push_back(0.5 * (lo + hi));
        }
        a = b;
        ga = gb;
      }
      if (rep.passed && w.delta_zero_roots_between.size() != 1) {
        rep.passed = false;
        rep.failure = ErrorCode::InterlacingViolation;
        rep.message = "expected one Delta0 zero between tau_" + std::to_string(j) + " and tau_" +
                      std::to_string(j + 1) + ", found " +
                      std::to_string(w.delta_zero_roots_between.size());
      }
    }
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

bool pair_symmetry_check(const std::vector<Complex>& zeros, double tol) {
  std::vector<bool> used(zeros.size(), false);
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (used[i]) continue;
    const Complex target = -std::conj(zeros[i]);
    // Prefer a partner other than i itself; a point on the imaginary axis may pair with itself.
    std::size_t best = zeros.size();
    double bd = INFINITY;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
      if (used[j] || j == i) continue;
      const double d = std::abs(zeros[j] - target);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    const double self = std::abs(zeros[i] - target);
    if (self <= tol && (best == zeros.size() || self <= bd)) {
      used[i] = true;
      continue;
    }
    if (best == zeros.size() || bd > tol) return false;
    used[i] = used[best] = true;
  }
  return true;
}

bool pair_symmetry_check(const Spectrum& sp, double tol) {
  return pair_symmetry_check(sp.values(), tol);
}

}  // namespace regge
