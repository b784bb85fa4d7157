#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "regge/charfn.hpp"

namespace regge {

struct ZeroSet {
  std::vector<std::pair<Complex, int>> zeros;  // nonzero zeros with multiplicity
  int order_at_origin = 0;                     // s

  /// Flattens to a list with each zero repeated by multiplicity (origin excluded).
  std::vector<Complex> expanded() const;
  std::size_t total() const;
};

/// Builds a zero set, moving values within merge_tol of 0 into order_at_origin
/// and merging duplicates.
ZeroSet make_zero_set(const std::vector<Complex>& values, double merge_tol = 1e-9);

/// Which leading coefficient of f(z) = z [c1 cos(az) + c2 sin(az)] + O(e^{a|Im z|}) is known.
enum class Coefficient { C1, C2, C1PlusC2, C1MinusC2 };

struct KnownCoefficient {
  Coefficient which = Coefficient::C1;
  Complex value{1.0, 0.0};
};

struct HadamardOptions {
  double a = 1.0;            // exponential type; zero spacing pi / a
  std::size_t truncation = 0;  // zeros kept per side of the imaginary axis; 0 keeps all
  bool lattice_tail = true;  // close the product with a lattice tail through log Gamma
  int n_min_exp = 6;         // sample n from 2^n_min_exp
  int n_max_exp = 12;        // up to 2^n_max_exp
  double tolerance = 1e-4;   // relative agreement of the last two extrapolants
};

struct LimitTrace {
  std::vector<long> n;
  std::vector<Complex> raw;
  Complex extrapolated{};
  double spread = 0.0;  // |last two extrapolants| difference, relative
};

/// f(z) = c e^{bz} E(z) rebuilt from zeros.
class HadamardModel {
 public:
  const ZeroSet& zeroset() const { return zs_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  KnownCoefficient known() const { return known_; }
  std::size_t truncation() const { return truncation_; }
  const LimitTrace& b_trace() const { return b_trace_; }
  const LimitTrace& c_trace() const { return c_trace_; }
  /// Largest |z| for which evaluate() is trusted (tail completion radius).
  double radius() const { return radius_; }

  /// ln E(z) with principal factor logs, plus the lattice tail when enabled.
  /// The b and c limits are always taken on the tail-completed product.
  Complex log_E(Complex z) const;
  Complex evaluate(Complex z) const;

 private:
  friend HadamardModel hadamard_build(const ZeroSet&, KnownCoefficient, HadamardOptions);

  ZeroSet zs_;
  std::vector<Complex> kept_;  // truncated, expanded zeros
  Complex log_product(Complex z, bool with_tail) const;

  Complex right_tail_{}, left_tail_{};
  bool use_tail_ = true;
  double spacing_ = kPi;
  Complex b_{}, c_{};
  KnownCoefficient known_;
  std::size_t truncation_ = 0;
  double radius_ = INFINITY;
  LimitTrace b_trace_, c_trace_;
};

/// LimitNotConverged when the extrapolated b or c limits disagree beyond tolerance.
HadamardModel hadamard_build(const ZeroSet& zs, KnownCoefficient c0, HadamardOptions opt = {});

/// Delta- of an even problem recovered from Delta+ by continuing the square
/// root branch of Delta+(l) Delta+(-l) - 4 alpha^2 l^2 from Delta-(0) = Delta+(0).
class EvenDeltaMinus {
 public:
  /// path_end: right end of the real tracking path [0, path_end];
  /// step <= 0 selects pi / (50 a).
  EvenDeltaMinus(ComplexFn delta_plus, double alpha, double a, double path_end,
                 double step = 0.0);

  Complex operator()(Complex lambda) const;
  /// Number of real anchors tracked so far.
  std::size_t anchors() const;

 private:
  struct Radicand {
    Complex value;
    double terms;  // |Delta+(l) Delta+(-l)| + |4 alpha^2 l^2|, the rounding scale
  };
  Radicand radicand(Complex lambda) const;
  Complex choose(Complex lambda, Complex predicted, Complex previous) const;
  Complex track(Complex from, Complex from_value, Complex from_slope, Complex to) const;
  void extend_to(double x) const;

  ComplexFn dp_;
  double alpha_;
  double step_;
  double scale_;
  mutable std::mutex mu_;
  mutable std::vector<double> xs_;
  mutable std::vector<Complex> vals_;
};

/// ZeroAtOrigin when Delta+(0) = 0; BranchAmbiguity when continuation fails.
std::shared_ptr<EvenDeltaMinus> even_delta_minus(ComplexFn delta_plus, double alpha, double a,
                                                 double path_end, double step = 0.0);

/// (Delta+ - Delta-) / (2 i alpha lambda), with the lambda -> 0 limit by central difference.
Complex delta0_from_pair(const ComplexFn& dp, const ComplexFn& dm, double alpha, Complex lambda);

/// (Delta+ + Delta-) / 2.
Complex two_spectra_robin(const ComplexFn& dp, const ComplexFn& dm, Complex lambda);

/// Zeros reported as xi (sign +1 or 0) or conj(xi) (sign -1).
ZeroSet sign_disambiguate(const std::vector<Complex>& g_zeros_upper, const std::vector<int>& signs);

}  // namespace regge
