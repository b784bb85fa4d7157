#pragma once

#include <functional>
#include <vector>

#include "regge/asympt.hpp"
#include "regge/reconstruct.hpp"

namespace regge {

/// y(l, b) y~'(l, b) - y~(l, b) y'(l, b) for the y-solutions of p1 (plain) and p2 (tilde).
Complex F_mismatch(const ReggeProblem& p1, const ReggeProblem& p2, double b, Complex lambda,
                   const OdeOptions& opt = {});

/// ln|F| computed from scaled solutions, usable where F itself overflows.
double F_log_abs(const ReggeProblem& p1, const ReggeProblem& p2, double b, Complex lambda,
                 const OdeOptions& opt = {});

/// max over |lambda| = R of |F| e^{-2b|Im lambda|} / |lambda|, one entry per radius.
std::vector<double> F_growth(const ReggeProblem& p1, const ReggeProblem& p2, double b,
                             const std::vector<double>& radii, int angles = 64,
                             const OdeOptions& opt = {}, int threads = 1);

class CountingFunction {
 public:
  CountingFunction() = default;
  explicit CountingFunction(const ZeroSet& zs);
  explicit CountingFunction(const std::vector<Complex>& zeros);

  /// Number of zeros with modulus <= r.
  std::size_t operator()(double r) const;
  const std::vector<double>& moduli() const { return moduli_; }

 private:
  std::vector<double> moduli_;  // sorted ascending, repeated by multiplicity
};

std::size_t counting_function(const ZeroSet& zs, double r);

using LogAbsFn = std::function<double(Complex)>;

struct IndicatorEstimate {
  std::vector<double> angles;
  std::vector<double> radii;
  std::vector<std::vector<double>> ratios;  // ratios[i][j] = ln|f(r_j e^{i theta_i})| / r_j
  std::vector<double> h;                    // sup over the upper half of the schedule
};

std::vector<double> uniform_angles(int n);
/// {25, 50, 100, 200} * max(1, 1/a).
std::vector<double> default_radii(double a);

IndicatorEstimate indicator_estimate(const LogAbsFn& log_abs_f, const std::vector<double>& angles,
                                     const std::vector<double>& radii, int threads = 1);
IndicatorEstimate indicator_estimate(const ComplexFn& f, const std::vector<double>& angles,
                                     const std::vector<double>& radii, int threads = 1);

/// (1 / 2pi) times the periodic trapezoid integral of h over the angle grid.
double indicator_mean(const IndicatorEstimate& est);

struct DensityReport {
  double m = 0.0;
  double window = 0.1;
  std::vector<double> radii;
  std::vector<double> ratios;  // n(r) pi / (2r)
  bool stable = false;         // upper half of the probes within window * m of m
};

DensityReport density_check(const ZeroSet& zs, double m, const std::vector<double>& r_probe,
                            double window = 0.1);

/// An eigenvalue tagged with its lattice index j.
struct IndexedValue {
  long j = 0;
  Complex lambda{};
};

struct DeviationReport {
  double value = 0.0;
  long j_min = 0;
  long j_max = 0;
  std::size_t terms = 0;
};

/// sum |lambda_j - a mu_j / b| / (|j| + 1) over both subsets, with the plus
/// subset scaled by b_plus and lattice P0+, the minus subset by b_minus and P0-.
DeviationReport weighted_deviation(const std::vector<IndexedValue>& subset_plus,
                                   const std::vector<IndexedValue>& subset_minus, double b_plus,
                                   double b_minus, const AsymptoticModel& m);

/// lambda [i (alpha0 +- alpha) cos(lambda a) - (1 +- alpha alpha0) sin(lambda a)].
Complex g_pm(Sign s, double alpha0, double alpha, double a, Complex lambda);

struct CriticalOptions {
  std::vector<double> t_schedule{10, 20, 40, 80, 160, 320, 640, 1280};
  long J = 200;                  // lattice index cut for the Phi product
  double truncation_ratio = 0.1; // largest allowed t / |lambda_J|^2
  int threads = 1;
  OdeOptions ode{};
};

struct CriticalDiagnostics {
  double b = 0.0, b_plus = 0.0, b_minus = 0.0;
  std::vector<double> t;
  std::vector<Complex> G, Phi, Phi0, E0;
  std::vector<double> phi0_bound;  // |Phi0(it)| e^{-4b |Im sqrt(it)|} / t^2
  std::vector<Complex> zeta_plus, zeta_minus;  // a mu_j / b_pm, |j| <= J
  double truncation = 0.0;         // max t / |lambda_J|^2 over the subsets

  bool e0_decreasing() const;
};

/// Throws InvalidArgument unless b_plus + b_minus = 2b, DegenerateCase when
/// (alpha0 - 1)(1 - alpha) = 0, TruncationDominates when the product cut is too close.
CriticalDiagnostics critical_diagnostics(const ReggeProblem& p1, const ReggeProblem& p2, double b,
                                         double b_plus, double b_minus,
                                         const std::vector<IndexedValue>& subset_plus,
                                         const std::vector<IndexedValue>& subset_minus,
                                         const CriticalOptions& opt = {});

}  // namespace regge
