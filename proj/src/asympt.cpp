#include "regge/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace regge {

AsymptoticModel asymptotic_model(const ReggeProblem& p) {
  validate_problem(p);
  if (p.alpha0 == 1.0 || p.alpha == 1.0) {
    throw Error(ErrorCode::DegenerateCase, "alpha0 = 1 or alpha = 1: no eigenvalue lattice");
  }
  AsymptoticModel m;
  m.a = p.a;
  m.alpha0 = p.alpha0;
  m.alpha = p.alpha;
  const double disc = (p.alpha0 - 1.0) * (1.0 - p.alpha);
  m.case_sign = disc > 0.0 ? 1 : -1;
  const double a0 = p.alpha0, al = p.alpha;
  m.P0_plus = std::log(std::abs(a0 + al + 1.0 + al * a0) / std::abs(a0 + al - (1.0 + al * a0)));
  m.P0_minus = std::log(std::abs(a0 - al + 1.0 - al * a0) / std::abs(a0 - al - (1.0 - al * a0)));
  m.K1aa = 0.5 * p.potential.prefix_integral(p.a);
  m.omega = p.beta0 + m.K1aa;
  m.M_plus = a0 * p.beta + al * m.omega + a0 * m.K1aa;
  m.M_minus = a0 * p.beta - al * m.omega + a0 * m.K1aa;
  m.N_plus = m.omega + p.beta + a0 * al * m.K1aa;
  m.N_minus = m.omega + p.beta - a0 * al * m.K1aa;
  m.P = p.beta0 / (kPi * (1.0 - a0 * a0)) + p.beta / (kPi * (1.0 - al * al)) + m.K1aa / kPi;
  return m;
}

double lattice_point(const AsymptoticModel& m, long k) {
  if (m.case_sign == 0) throw Error(ErrorCode::DegenerateCase, "no lattice in case (3)");
  if (!m.valid_index(k)) throw Error(ErrorCode::InvalidArgument, "index 0 is not on this lattice");
  if (k == m.origin_index()) return 0.0;
  const double sgn = k > 0 ? 1.0 : -1.0;
  const double shift = m.case_sign > 0 ? 0.5 : 1.0;
  return kPi / m.a * (std::abs(static_cast<double>(k)) - shift) * sgn;
}

Complex mu_k(const AsymptoticModel& m, Sign s, long k) {
  const double re = lattice_point(m, k);
  if (k == m.origin_index()) return 0.0;
  return {re, m.P0(s) / (2.0 * m.a)};
}

Complex predicted_lambda(const AsymptoticModel& m, Sign s, long k) {
  const Complex mu = mu_k(m, s, k);
  if (k == m.origin_index()) return mu;
  return mu + m.P / static_cast<double>(k);
}

namespace {

// Lattice indices whose points are nearest to z (a few candidates).
std::vector<long> nearby_indices(const AsymptoticModel& m, Complex z) {
  const double x = z.real() * m.a / kPi;
  std::vector<long> out{m.origin_index()};
  const double shift = m.case_sign > 0 ? 0.5 : 1.0;
  for (int side : {1, -1}) {
    const double t = side * x + shift;  // |k| for which (|k| - shift) = side * x
    const long base = static_cast<long>(std::llround(t));
    for (long d = -1; d <= 1; ++d) {
      const long mag = base + d;
      if (mag < 1) continue;
      const long k = side * mag;
      if (k != m.origin_index() && m.valid_index(k)) out.push_back(k);
    }
  }
  return out;
}

}  // namespace

Spectrum index_eigenvalues(const Spectrum& sp, const std::optional<AsymptoticModel>& model,
                           Sign s) {
  Spectrum out = sp;
  out.sign = s;
  out.indexed = true;
  sort_entries(out.entries);
  const std::size_t n = out.entries.size();
  if (!model) {
    for (std::size_t i = 0; i < n; ++i) out.entries[i].k = static_cast<long>(i) + 1;
    return out;
  }
  const AsymptoticModel& m = *model;
  std::vector<long> best(n);
  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    double dmin = INFINITY;
    for (long k : nearby_indices(m, out.entries[i].lambda)) {
      const double d = std::abs(out.entries[i].lambda - mu_k(m, s, k));
      if (d < dmin) {
        dmin = d;
        best[i] = k;
      }
    }
    dist[i] = dmin;
  }
  // Resolve collisions: the closest zero keeps the index.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return dist[x] < dist[y]; });
  std::set<long> used;
  std::vector<bool> matched(n, false);
  for (std::size_t i : order) {
    if (used.insert(best[i]).second) matched[i] = true;
  }
  std::vector<std::size_t> unmatched;
  for (std::size_t i = 0; i < n; ++i)
    if (!matched[i]) unmatched.push_back(i);
  if (!unmatched.empty()) {
    std::vector<long> free;
    for (long mag = 0; free.size() < unmatched.size(); ++mag) {
      for (long k : {mag, -mag}) {
        if ((mag == 0 && k != 0) || !m.valid_index(k) || used.count(k)) continue;
        if (std::find(free.begin(), free.end(), k) == free.end()) free.push_back(k);
      }
    }
    std::sort(free.begin(), free.end());
    for (std::size_t j = 0; j < unmatched.size(); ++j) best[unmatched[j]] = free[j];
  }
  for (std::size_t i = 0; i < n; ++i) out.entries[i].k = best[i];
  return out;
}

Spectrum index_eigenvalues(const Spectrum& sp, const ReggeProblem& p, Sign s) {
  std::optional<AsymptoticModel> m;
  try {
    m = asymptotic_model(p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateCase) throw;
  }
  return index_eigenvalues(sp, m, s);
}

std::vector<TailEntry> residual_tail(const Spectrum& sp, const AsymptoticModel& m, Sign s,
                                     long kmin) {
  std::vector<TailEntry> out;
  for (const SpectrumEntry& e : sp.entries) {
    if (std::abs(e.k) < kmin || e.k == m.origin_index() || !m.valid_index(e.k)) continue;
    const Complex shifted = e.lambda - lattice_point(m, e.k) - kI * m.P0(s) / (2.0 * m.a);
    out.push_back({e.k, static_cast<double>(e.k) * shifted - m.P});
  }
  std::sort(out.begin(), out.end(), [](const TailEntry& x, const TailEntry& y) { return x.k < y.k; });
  return out;
}

Complex phi1_zeros(double sigma1, double sigma2, double a, long k) {
  if (sigma1 == sigma2 || sigma1 == -sigma2) {
    throw Error(ErrorCode::DegenerateSigma, "sigma1 = +-sigma2");
  }
  const double shift_im = std::log(std::abs(sigma2 + sigma1) / std::abs(sigma2 - sigma1)) / (2.0 * a);
  const double sgn = k > 0 ? 1.0 : -1.0;
  const double absk = std::abs(static_cast<double>(k));
  if ((sigma2 - sigma1) * (sigma2 + sigma1) < 0.0) {
    if (k == 0) return 0.0;
    return {kPi / a * (absk - 0.5) * sgn, shift_im};
  }
  if (k == -1) return 0.0;
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "index 0 is not used in this case");
  return {kPi / a * (absk - 1.0) * sgn, shift_im};
}

Complex appendix_P(double sigma1, double sigma2, Complex M, Complex N) {
  if (sigma1 == sigma2 || sigma1 == -sigma2) {
    throw Error(ErrorCode::DegenerateSigma, "sigma1 = +-sigma2");
  }
  return (sigma2 * N - sigma1 * M) / (kPi * (sigma2 * sigma2 - sigma1 * sigma1));
}

AlphaCandidates recover_alpha_candidates(double P0p, double P0m, int sign_alpha0_minus_1) {
  if (sign_alpha0_minus_1 == 0) {
    throw Error(ErrorCode::InconsistentInput, "alpha0 = 1 has no finite P0");
  }
  const double r0 = std::exp(0.5 * (P0p + P0m));  // (alpha0+1)/|alpha0-1|
  const double r = std::exp(0.5 * (P0p - P0m));   // (alpha+1)/|alpha-1|
  if (!(r0 > 1.0) || !(r > 1.0) || !std::isfinite(r0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InconsistentInput, "no positive alpha0, alpha match these P0 values");
  }
  AlphaCandidates c;
  c.alpha0 = sign_alpha0_minus_1 > 0 ? (r0 + 1.0) / (r0 - 1.0) : (r0 - 1.0) / (r0 + 1.0);
  c.alpha_above_one = (r + 1.0) / (r - 1.0);
  c.alpha_below_one = (r - 1.0) / (r + 1.0);
  return c;
}

std::pair<double, double> recover_alphas(double P0p, double P0m, int sign_alpha0_minus_1,
                                         int case_sign) {
  if (case_sign == 0) throw Error(ErrorCode::InconsistentInput, "case sign must be nonzero");
  const AlphaCandidates c = recover_alpha_candidates(P0p, P0m, sign_alpha0_minus_1);
  // case_sign = sgn((alpha0-1)(1-alpha)) fixes sgn(alpha-1).
  const int sign_alpha_minus_1 = -case_sign * (sign_alpha0_minus_1 > 0 ? 1 : -1);
  return {c.alpha0, sign_alpha_minus_1 > 0 ? c.alpha_above_one : c.alpha_below_one};
}

}  // namespace regge
