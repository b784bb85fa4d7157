#pragma once

#include <complex>
#include <vector>

#include "regge/error.hpp"

namespace regge {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Selects L(q, a0, b0, +a, b) or L(q, a0, b0, -a, b).
enum class Sign { Plus, Minus };

inline double sign_factor(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

enum class Interpolation { Linear, Cubic };

/// Complex potential on [0, a]: identically zero, constant, or a uniform
/// sample grid with linear or natural-cubic interpolation.
class Potential {
 public:
  enum class Kind { Zero, Constant, Grid };

  static Potential zero(double a);
  static Potential constant(Complex value, double a);
  /// Samples are taken at x_i = i * a / (n - 1), i = 0..n-1.
  static Potential grid(std::vector<Complex> samples, double a,
                        Interpolation interpolation = Interpolation::Linear);

  Kind kind() const { return kind_; }
  double length() const { return a_; }
  Interpolation interpolation() const { return interpolation_; }
  const std::vector<Complex>& samples() const { return samples_; }
  Complex constant_value() const { return value_; }

  /// True when q is a constant function (Zero or Constant).
  bool is_uniform() const { return kind_ != Kind::Grid; }
  bool real_valued() const { return real_valued_; }

  /// q(x); throws OutOfDomain outside [0, a].
  Complex operator()(double x) const;
  /// Same as operator() without the domain check (x is clamped).
  Complex eval_unchecked(double x) const;
  /// Integral of q over [0, x], exact for the interpolant.
  Complex prefix_integral(double x) const;
  /// q1(x) = q(a - x).
  Potential reflected() const;
  /// sup over the sample mesh of |q(x) - q(a - x)|.
  double asymmetry() const;

 private:
  Potential() = default;
  void prepare();

  Kind kind_ = Kind::Zero;
  double a_ = 1.0;
  Complex value_{};
  std::vector<Complex> samples_;
  Interpolation interpolation_ = Interpolation::Linear;
  std::vector<Complex> second_derivs_;  // natural spline moments
  std::vector<Complex> cumulative_;     // integral up to each node
  bool real_valued_ = true;
};

Complex potential_eval(const Potential& q, double x);
Complex potential_prefix_integral(const Potential& q, double x);
Potential potential_reflect(const Potential& q, double a);
bool potential_is_even(const Potential& q, double a, double tol);

/// Default evenness tolerance: 1e-10 for exact variants, 1e-8 for grids.
double default_even_tolerance(const Potential& q);

/// The boundary-value problem
///   -y'' + q y = lambda^2 y on (0, a),
///   y'(0) - (i alpha0 lambda + beta0) y(0) = 0,
///   y'(a) + (i alpha lambda + beta) y(a) = 0.
struct ReggeProblem {
  double a = 1.0;
  double alpha0 = 0.0;
  Complex beta0{};
  double alpha = 1.0;
  Complex beta{};
  Potential potential = Potential::zero(1.0);
  bool real_data = false;
};

/// Returns p unchanged or throws the first violated constraint.
ReggeProblem validate_problem(const ReggeProblem& p);

/// Convenience constructor for the common case; validates.
ReggeProblem make_problem(double a, double alpha0, Complex beta0, double alpha, Complex beta,
                          Potential q);

}  // namespace regge
