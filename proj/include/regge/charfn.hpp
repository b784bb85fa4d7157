#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "regge/ode.hpp"

namespace regge {

/// Which characteristic function to evaluate.
enum class CharKind {
  Plus,   // y'(a) + (i alpha lambda + beta) y(a)
  Minus,  // y'(a) - (i alpha lambda - beta) y(a)
  Zero,   // y(a)
  Robin,  // y'(a) + beta y(a)
};

inline CharKind to_kind(Sign s) { return s == Sign::Plus ? CharKind::Plus : CharKind::Minus; }

struct CharFnSample {
  Complex lambda{};
  Complex value{};
  std::optional<Complex> derivative;
  double exponent = 0.0;  // log-scale carried by the integrator
  bool overflow = false;
};

using ComplexFn = std::function<Complex(Complex)>;

/// Characteristic-function evaluator bound to one problem. Immutable after
/// construction; concurrent calls are safe.
class CharFn {
 public:
  explicit CharFn(ReggeProblem p, OdeOptions options = {});

  const ReggeProblem& problem() const { return p_; }
  const OdeOptions& options() const { return prop_.options(); }

  Complex value(CharKind kind, Complex lambda) const;
  Complex derivative(CharKind kind, Complex lambda) const;
  CharFnSample sample(CharKind kind, Complex lambda, bool with_derivative = false) const;
  /// ln|f(lambda)| without forming e^sigma; -inf at exact zeros.
  double log_abs(CharKind kind, Complex lambda) const;

  ComplexFn fn(CharKind kind) const;
  ComplexFn dfn(CharKind kind) const;

  /// y(lambda, a) and y'(lambda, a), scaled.
  ScaledSolution endpoint(Complex lambda) const;
  /// Value and lambda-derivative of y at x = a.
  ScaledState endpoint_with_derivative(Complex lambda) const;
  /// int_0^a y(lambda, x)^2 dx by composite Simpson on the integration mesh.
  Complex integral_y_squared(Complex lambda) const;

 private:
  ReggeProblem p_;
  Propagator prop_;
};

Complex delta(const ReggeProblem& p, Sign s, Complex lambda, const OdeOptions& opt = {});
Complex delta_zero(const ReggeProblem& p, Complex lambda, const OdeOptions& opt = {});
Complex delta_dot(const ReggeProblem& p, Sign s, Complex lambda, const OdeOptions& opt = {});
/// phi y' - phi' y at x, with phi = phi(+-lambda, .) for the selected sign.
Complex wronskian_delta(const ReggeProblem& p, Sign s, Complex lambda, double x,
                        const OdeOptions& opt = {});
/// Delta+(l) Delta+(-l) - Delta-(l) Delta-(-l) - 4 alpha alpha0 l^2.
Complex identity_residual(const ReggeProblem& p, Complex lambda, const OdeOptions& opt = {});
Complex robin_charfn(const ReggeProblem& p, Complex lambda, const OdeOptions& opt = {});

struct EnergyTerms {
  Complex lhs;  // 2 lambda int_0^a y^2
  Complex rhs;  // Delta+ dDelta0 - dDelta+ Delta0 + i alpha Delta0^2 + i alpha0
  Complex residual() const { return rhs - lhs; }
};
EnergyTerms energy_terms(const ReggeProblem& p, Complex lambda, const OdeOptions& opt = {});
Complex energy_identity_residual(const ReggeProblem& p, Complex lambda,
                                 const OdeOptions& opt = {});

/// Samples one characteristic function over a list of points, in parallel.
std::vector<CharFnSample> sample_charfn(const CharFn& f, CharKind kind,
                                        const std::vector<Complex>& points, int threads = 1);

}  // namespace regge
