#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "regge/spectrum.hpp"

namespace regge {

/// Leading-order data of the eigenvalue asymptotics.
struct AsymptoticModel {
  int case_sign = 0;  // sign of (alpha0 - 1)(1 - alpha)
  double P0_plus = 0.0;
  double P0_minus = 0.0;
  Complex P{};
  Complex M_plus{}, M_minus{}, N_plus{}, N_minus{};
  Complex omega{};  // beta0 + K1(a, a)
  Complex K1aa{};   // (1/2) int_0^a q
  double a = 1.0;
  double alpha0 = 0.0;
  double alpha = 1.0;

  double P0(Sign s) const { return s == Sign::Plus ? P0_plus : P0_minus; }
  /// Indices carried by the lattice: all of Z when case_sign > 0, Z minus {0} otherwise.
  bool valid_index(long k) const { return case_sign > 0 || k != 0; }
  /// The index whose lattice point is the origin (0 or -1).
  long origin_index() const { return case_sign > 0 ? 0 : -1; }
};

/// DegenerateCase when alpha0 = 1 or alpha = 1.
AsymptoticModel asymptotic_model(const ReggeProblem& p);

/// Zero of g(lambda) = lambda [i (alpha0 +- alpha) cos(lambda a) - (1 +- alpha alpha0) sin(lambda a)].
Complex mu_k(const AsymptoticModel& m, Sign s, long k);
/// Real lattice position pi/a (|k| - 1/2) sgn k or pi/a (|k| - 1) sgn k.
double lattice_point(const AsymptoticModel& m, long k);
/// mu_k plus the P / k correction (the origin index returns 0).
Complex predicted_lambda(const AsymptoticModel& m, Sign s, long k);

/// Assigns lattice indices; with no model the entries get ordinal indices 1..n.
Spectrum index_eigenvalues(const Spectrum& sp, const std::optional<AsymptoticModel>& model,
                           Sign s);
/// Builds the model from the problem and falls back to ordinal indexing in
/// the degenerate case.
Spectrum index_eigenvalues(const Spectrum& sp, const ReggeProblem& p, Sign s);

struct TailEntry {
  long k = 0;
  Complex beta{};  // k (lambda_k - lattice_k - i P0 / 2a) - P
};

/// Estimates of the l2 sequence beta_k for |k| >= kmin.
std::vector<TailEntry> residual_tail(const Spectrum& sp, const AsymptoticModel& m, Sign s,
                                     long kmin = 5);

/// k-th zero of lambda (sigma1 cos(lambda a) + i sigma2 sin(lambda a)).
Complex phi1_zeros(double sigma1, double sigma2, double a, long k);
/// (sigma2 N - sigma1 M) / (pi (sigma2^2 - sigma1^2)).
Complex appendix_P(double sigma1, double sigma2, Complex M, Complex N);

struct AlphaCandidates {
  double alpha0 = 0.0;
  double alpha_above_one = 0.0;  // branch alpha > 1
  double alpha_below_one = 0.0;  // branch 0 < alpha < 1
};

/// Solves e^{P+ + P-} = ((alpha0+1)/(alpha0-1))^2 on the branch given by the
/// sign of alpha0 - 1; both alpha branches are returned.
AlphaCandidates recover_alpha_candidates(double P0p, double P0m, int sign_alpha0_minus_1);
/// Same, selecting the alpha branch from the case sign of (alpha0-1)(1-alpha).
std::pair<double, double> recover_alphas(double P0p, double P0m, int sign_alpha0_minus_1,
                                         int case_sign);

}  // namespace regge
