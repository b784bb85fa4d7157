#pragma once

#include <string>
#include <vector>

#include "regge/asympt.hpp"
#include "regge/charfn.hpp"

namespace regge {

struct WindingOptions {
  int min_samples_per_edge = 8;
  double sample_spacing = 0.5;  // initial samples every this many units of length
  int max_depth = 40;           // bisection depth per boundary segment
  double max_step_phase = kPi / 4.0;
  double consistency = 0.1;     // allowed disagreement between halves and whole
};

/// Number of zeros (with multiplicity) inside r by the argument principle.
/// Throws BoundaryZero if the boundary phase cannot be resolved.
int winding_count(const ComplexFn& f, const Rectangle& r, const WindingOptions& opt = {});

struct RootOptions {
  double ftol = 1e-12;        // Newton stops once |f| <= ftol
  double xtol = 1e-14;        // or once |step| <= xtol (1 + |z|)
  int max_newton = 50;
  int multiplicity_cap = 4;
  double min_cell = 1e-7;     // relative to the search rectangle size
  int boundary_retries = 5;
  double boundary_shift = 1e-3;
  int threads = 1;
  WindingOptions winding{};
};

/// Zeros of f in r by quadrisection and Newton refinement. If df is empty a
/// central difference is used. Entries come back unindexed and sorted.
Spectrum find_zeros(const ComplexFn& f, const ComplexFn& df, const Rectangle& r, double tol,
                    RootOptions opt = {});

/// Zeros of a problem's characteristic function, indexed on the lattice when
/// the model exists.
Spectrum problem_spectrum(const CharFn& cf, Sign s, const Rectangle& r, double tol,
                          RootOptions opt = {});

struct ImagZero {
  double tau = 0.0;
  Complex lambda{};  // -i tau
};

/// Zeros of tau -> Delta+(-i tau) on (0, tau_max] by sign scan and bisection.
std::vector<ImagZero> imaginary_axis_zeros(const ReggeProblem& p, double tau_max,
                                           double scan_step = 0.01,
                                           const OdeOptions& opt = {});

struct InterlaceWitness {
  int j = 0;
  double tau = 0.0;
  double i_delta_plus_dot = 0.0;  // i dDelta+/dlambda at -i tau, times (-1)^(kappa-j)
  double delta_zero = 0.0;        // Delta0(-i tau) (-1)^(kappa-j)
  std::vector<double> delta_zero_roots_between;  // Delta0 zeros in (tau_j, tau_{j+1})
};

struct InterlaceReport {
  bool passed = true;
  std::optional<ErrorCode> failure;  // SignViolation or InterlacingViolation
  std::string message;
  std::vector<InterlaceWitness> witnesses;
};

/// Sign pattern and interlacing checks on the negative imaginary semiaxis.
InterlaceReport interlace_and_signs(const ReggeProblem& p, std::vector<ImagZero> zeros,
                                    const OdeOptions& opt = {});

/// True iff the zero multiset is closed under lambda -> -conj(lambda).
bool pair_symmetry_check(const Spectrum& sp, double tol);
bool pair_symmetry_check(const std::vector<Complex>& zeros, double tol);

}  // namespace regge
