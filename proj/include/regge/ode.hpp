#pragma once

#include <Eigen/Core>
#include <functional>

#include "regge/model.hpp"

namespace regge {

using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;

enum class Integrator {
  Magnus4,  // fourth-order exponential integrator, exact for constant q
  Rk4,      // classical Runge-Kutta, kept as an independent reference
};

struct OdeOptions {
  int steps = 4096;  // mesh steps over [0, a]
  Integrator method = Integrator::Magnus4;
  /// When set, every solve is repeated with twice the steps and must agree
  /// to tolerance * (1 + |value|), otherwise ToleranceNotMet is thrown.
  bool check_tolerance = false;
  double tolerance = 1e-9;
};

/// Value u * e^sigma and derivative du * e^sigma.
struct ScaledSolution {
  Complex u{};
  Complex du{};
  double sigma = 0.0;

  Complex value() const;
  Complex derivative() const;
};

/// A solution together with its lambda-derivative, all sharing one scale.
struct ScaledState {
  Vec2 v = Vec2::Zero();   // (y, y')
  Vec2 dv = Vec2::Zero();  // (d/dlambda y, d/dlambda y')
  double sigma = 0.0;
};

struct ScaledMatrix {
  Mat2 m = Mat2::Identity();
  double sigma = 0.0;
};

/// Integrates -y'' + q y = lambda^2 y on the uniform mesh of a potential.
/// Cheap to copy; holds only a reference-free copy of the potential.
class Propagator {
 public:
  explicit Propagator(Potential q, OdeOptions options = {});

  const Potential& potential() const { return q_; }
  const OdeOptions& options() const { return options_; }

  /// Fundamental matrix mapping (y, y')(x0) to (y, y')(x1); x1 < x0 allowed.
  ScaledMatrix transfer(Complex lambda, double x0, double x1) const;

  /// Carries value and lambda-derivative from x0 to x1.
  ScaledState propagate(Complex lambda, double x0, double x1, const Vec2& init,
                        const Vec2& dinit) const;

  /// Visits every mesh node of [x0, x1] (x0 < x1) with the state there.
  /// Uses the full mesh even for constant potentials.
  void walk(Complex lambda, double x0, double x1, const Vec2& init,
            const std::function<void(double, const ScaledState&)>& visit) const;

 private:
  ScaledState run(Complex lambda, double x0, double x1, ScaledState state, bool with_derivative,
                  int steps, const std::function<void(double, const ScaledState&)>* visit) const;

  Potential q_;
  OdeOptions options_;
};

struct SCValues {
  Complex s, ds, c, dc;
};

SCValues solve_sc(const ReggeProblem& p, Complex lambda, double x, const OdeOptions& opt = {});

/// Returns (y, y') at x where y(0) = 1, y'(0) = beta0 + i alpha0 lambda.
std::pair<Complex, Complex> solve_y(const ReggeProblem& p, Complex lambda, double x,
                                    const OdeOptions& opt = {});
ScaledSolution solve_y_scaled(const ReggeProblem& p, Complex lambda, double x,
                              const OdeOptions& opt = {});

/// Backward solve from x = a with phi(a) = 1, phi'(a) = -(i alpha lambda + beta)
/// for Plus and phi'(a) = i alpha lambda - beta for Minus.
std::pair<Complex, Complex> solve_phi(const ReggeProblem& p, Sign s, Complex lambda, double x,
                                      const OdeOptions& opt = {});
ScaledSolution solve_phi_scaled(const ReggeProblem& p, Sign s, Complex lambda, double x,
                                const OdeOptions& opt = {});

/// Returns (d/dlambda y, d/dlambda y') at x.
std::pair<Complex, Complex> solve_y_lambda_derivative(const ReggeProblem& p, Complex lambda,
                                                      double x, const OdeOptions& opt = {});
ScaledState solve_y_with_derivative(const ReggeProblem& p, Complex lambda, double x,
                                    const OdeOptions& opt = {});

/// Throws Overflow if e^sigma would not fit in a double.
Complex descale(Complex u, double sigma);

}  // namespace regge
