#include "regge/partialinv.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "regge/parallel.hpp"

namespace regge {

namespace {

void check_pair(const ReggeProblem& p1, const ReggeProblem& p2, double b) {
  if (std::abs(p1.a - p2.a) > 1e-12 * p1.a) {
    throw Error(ErrorCode::InvalidArgument, "the two problems must share the length a");
  }
  if (!(b > 0.0 && b < p1.a)) throw Error(ErrorCode::InvalidArgument, "need 0 < b < a");
}

}  // namespace

Complex F_mismatch(const ReggeProblem& p1, const ReggeProblem& p2, double b, Complex lambda,
                   const OdeOptions& opt) {
  check_pair(p1, p2, b);
  const auto [y, dy] = solve_y(p1, lambda, b, opt);
  const auto [yt, dyt] = solve_y(p2, lambda, b, opt);
  return y * dyt - yt * dy;
}

double F_log_abs(const ReggeProblem& p1, const ReggeProblem& p2, double b, Complex lambda,
                 const OdeOptions& opt) {
  check_pair(p1, p2, b);
  const ScaledSolution s1 = solve_y_scaled(p1, lambda, b, opt);
  const ScaledSolution s2 = solve_y_scaled(p2, lambda, b, opt);
  return std::log(std::abs(s1.u * s2.du - s2.u * s1.du)) + s1.sigma + s2.sigma;
}

std::vector<double> F_growth(const ReggeProblem& p1, const ReggeProblem& p2, double b,
                             const std::vector<double>& radii, int angles, const OdeOptions& opt,
                             int threads) {
  check_pair(p1, p2, b);
  const std::vector<double> th = uniform_angles(angles);
  std::vector<double> out(radii.size(), 0.0);
  std::vector<double> cell(radii.size() * th.size());
  parallel_for(cell.size(), threads, [&](std::size_t idx) {
    const double r = radii[idx / th.size()];
    const Complex z = std::polar(r, th[idx % th.size()]);
    const double la = F_log_abs(p1, p2, b, z, opt);
    cell[idx] = std::exp(la - 2.0 * b * std::abs(z.imag())) / r;
  });
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (std::size_t k = 0; k < th.size(); ++k) out[i] = std::max(out[i], cell[i * th.size() + k]);
  }
  return out;
}

CountingFunction::CountingFunction(const ZeroSet& zs) {
  moduli_.assign(static_cast<std::size_t>(zs.order_at_origin), 0.0);
  for (const Complex& z : zs.expanded()) moduli_.push_back(std::abs(z));
  std::sort(moduli_.begin(), moduli_.end());
}

CountingFunction::CountingFunction(const std::vector<Complex>& zeros) {
  for (const Complex& z : zeros) moduli_.push_back(std::abs(z));
  std::sort(moduli_.begin(), moduli_.end());
}

std::size_t CountingFunction::operator()(double r) const {
  if (r < 0.0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
  return static_cast<std::size_t>(std::upper_bound(moduli_.begin(), moduli_.end(), r) -
                                  moduli_.begin());
}

std::size_t counting_function(const ZeroSet& zs, double r) { return CountingFunction(zs)(r); }

std::vector<double> uniform_angles(int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(2.0 * kPi * i / n);
  return out;
}

std::vector<double> default_radii(double a) {
  const double s = std::max(1.0, 1.0 / a);
  return {25.0 * s, 50.0 * s, 100.0 * s, 200.0 * s};
}

IndicatorEstimate indicator_estimate(const LogAbsFn& log_abs_f, const std::vector<double>& angles,
                                     const std::vector<double>& radii, int threads) {
  if (radii.empty() || angles.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty angle grid or radius schedule");
  }
  for (std::size_t j = 0; j < radii.size(); ++j) {
    if (!(radii[j] > 0.0) || (j > 0 && !(radii[j] > radii[j - 1]))) {
      throw Error(ErrorCode::InvalidArgument, "radius schedule must be positive and increasing");
    }
  }
  IndicatorEstimate est;
  est.angles = angles;
  est.radii = radii;
  est.ratios.assign(angles.size(), std::vector<double>(radii.size()));
  parallel_for(angles.size() * radii.size(), threads, [&](std::size_t idx) {
    const std::size_t i = idx / radii.size(), j = idx % radii.size();
    double r = radii[j];
    double v = log_abs_f(std::polar(r, angles[i]));
    // A sample landing on a zero is moved slightly outward.
    for (int retry = 0; !std::isfinite(v) && retry < 4; ++retry) {
      r *= 1.0 + 1e-6;
      v = log_abs_f(std::polar(r, angles[i]));
    }
    if (!std::isfinite(v)) throw Error(ErrorCode::Overflow, "ln|f| not finite on the schedule");
    est.ratios[i][j] = v / r;
  });
  const std::size_t from = radii.size() / 2;
  for (const auto& row : est.ratios) {
    est.h.push_back(*std::max_element(row.begin() + static_cast<long>(from), row.end()));
  }
  return est;
}

IndicatorEstimate indicator_estimate(const ComplexFn& f, const std::vector<double>& angles,
                                     const std::vector<double>& radii, int threads) {
  return indicator_estimate(LogAbsFn([&f](Complex z) { return std::log(std::abs(f(z))); }), angles,
                            radii, threads);
}

double indicator_mean(const IndicatorEstimate& est) {
  const std::size_t n = est.angles.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double next = i + 1 < n ? est.angles[i + 1] : est.angles[0] + 2.0 * kPi;
    const double h_next = est.h[(i + 1) % n];
    sum += 0.5 * (est.h[i] + h_next) * (next - est.angles[i]);
  }
  return sum / (2.0 * kPi);
}

DensityReport density_check(const ZeroSet& zs, double m, const std::vector<double>& r_probe,
                            double window) {
  for (std::size_t j = 1; j < r_probe.size(); ++j) {
    if (!(r_probe[j] > r_probe[j - 1])) {
      throw Error(ErrorCode::InvalidArgument, "probe radii must increase");
    }
  }
  const CountingFunction n(zs);
  DensityReport rep;
  rep.m = m;
  rep.window = window;
  rep.radii = r_probe;
  for (double r : r_probe) rep.ratios.push_back(double(n(r)) * kPi / (2.0 * r));
  rep.stable = !r_probe.empty();
  for (std::size_t j = r_probe.size() / 2; j < r_probe.size(); ++j) {
    if (std::abs(rep.ratios[j] - m) > window * std::abs(m)) rep.stable = false;
  }
  if (m <= 0.0) rep.stable = false;
  return rep;
}

DeviationReport weighted_deviation(const std::vector<IndexedValue>& subset_plus,
                                   const std::vector<IndexedValue>& subset_minus, double b_plus,
                                   double b_minus, const AsymptoticModel& m) {
  if (!(b_plus > 0.0) || !(b_minus > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "b_plus and b_minus must be positive");
  }
  DeviationReport rep;
  bool first = true;
  auto accumulate = [&](const std::vector<IndexedValue>& subset, Sign s, double bs) {
    std::set<long> seen;
    for (const IndexedValue& v : subset) {
      if (!m.valid_index(v.j) || !seen.insert(v.j).second) {
        throw Error(ErrorCode::MisalignedInput,
                    "index " + std::to_string(v.j) + " is invalid or repeated");
      }
      const Complex target = m.a * mu_k(m, s, v.j) / bs;
      rep.value += std::abs(v.lambda - target) / (std::abs(double(v.j)) + 1.0);
      ++rep.terms;
      rep.j_min = first ? v.j : std::min(rep.j_min, v.j);
      rep.j_max = first ? v.j : std::max(rep.j_max, v.j);
      first = false;
    }
  };
  accumulate(subset_plus, Sign::Plus, b_plus);
  accumulate(subset_minus, Sign::Minus, b_minus);
  return rep;
}

Complex g_pm(Sign s, double alpha0, double alpha, double a, Complex lambda) {
  const double f = sign_factor(s);
  return lambda * (kI * (alpha0 + f * alpha) * std::cos(lambda * a) -
                   (1.0 + f * alpha * alpha0) * std::sin(lambda * a));
}

bool CriticalDiagnostics::e0_decreasing() const {
  for (std::size_t i = 1; i < E0.size(); ++i)
    if (!(std::abs(E0[i]) < std::abs(E0[i - 1]))) return false;
  return true;
}

CriticalDiagnostics critical_diagnostics(const ReggeProblem& p1, const ReggeProblem& p2, double b,
                                         double b_plus, double b_minus,
                                         const std::vector<IndexedValue>& subset_plus,
                                         const std::vector<IndexedValue>& subset_minus,
                                         const CriticalOptions& opt) {
  check_pair(p1, p2, b);
  if (std::abs(b_plus + b_minus - 2.0 * b) > 1e-14 * b || !(b_plus > 0.0) || !(b_minus > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "need positive b_plus, b_minus with b_plus + b_minus = 2b");
  }
  const AsymptoticModel m = asymptotic_model(p1);
  if (m.case_sign == 0) throw Error(ErrorCode::DegenerateCase, "(alpha0 - 1)(1 - alpha) = 0");

  CriticalDiagnostics d;
  d.b = b;
  d.b_plus = b_plus;
  d.b_minus = b_minus;
  d.t = opt.t_schedule;
  for (long j = -opt.J; j <= opt.J; ++j) {
    if (!m.valid_index(j)) continue;
    d.zeta_plus.push_back(m.a * mu_k(m, Sign::Plus, j) / b_plus);
    d.zeta_minus.push_back(m.a * mu_k(m, Sign::Minus, j) / b_minus);
  }

  std::vector<Complex> factors;
  double t_max = 0.0;
  for (double t : d.t) t_max = std::max(t_max, t);
  for (const auto* subset : {&subset_plus, &subset_minus}) {
    double largest = 0.0;
    for (const IndexedValue& v : *subset) {
      if (std::abs(v.j) > opt.J) continue;
      factors.push_back(v.lambda);
      largest = std::max(largest, std::abs(v.lambda));
    }
    if (largest > 0.0) d.truncation = std::max(d.truncation, t_max / (largest * largest));
  }
  if (d.truncation > opt.truncation_ratio) {
    throw Error(ErrorCode::TruncationDominates,
                "t / |lambda_J|^2 = " + std::to_string(d.truncation) + " exceeds the cut");
  }

  const std::size_t n = d.t.size();
  d.G.resize(n);
  d.Phi.resize(n);
  d.Phi0.resize(n);
  d.E0.resize(n);
  d.phi0_bound.resize(n);
  const double a = p1.a;
  parallel_for(n, opt.threads, [&](std::size_t i) {
    const double t = d.t[i];
    const Complex rho{0.0, t};
    const Complex lam = std::sqrt(rho);
    d.G[i] = F_mismatch(p1, p2, b, lam, opt.ode) * F_mismatch(p1, p2, b, -lam, opt.ode);
    Complex phi = 1.0;
    for (const Complex& z : factors) {
      phi *= std::abs(z) < 1e-12 ? rho : 1.0 - rho / (z * z);
    }
    d.Phi[i] = phi;
    const double a0 = p1.alpha0, al = p1.alpha;
    d.Phi0[i] = g_pm(Sign::Plus, a0, al, a, b_plus * lam / a) *
                g_pm(Sign::Plus, a0, al, a, -b_plus * lam / a) *
                g_pm(Sign::Minus, a0, al, a, b_minus * lam / a) *
                g_pm(Sign::Minus, a0, al, a, -b_minus * lam / a);
    d.E0[i] = d.G[i] / d.Phi[i];
    d.phi0_bound[i] = std::abs(d.Phi0[i]) * std::exp(-4.0 * b * std::abs(lam.imag())) / (t * t);
  });
  return d;
}

}  // namespace regge
