#include "regge/charfn.hpp"

#include <cmath>
#include <limits>

#include "regge/parallel.hpp"

namespace regge {

namespace {

// Scaled boundary combination for kind at lambda given (y, y') scaled.
Complex combine(const ReggeProblem& p, CharKind kind, Complex lambda, Complex y, Complex dy) {
  switch (kind) {
    case CharKind::Plus: return dy + (kI * p.alpha * lambda + p.beta) * y;
    case CharKind::Minus: return dy - (kI * p.alpha * lambda - p.beta) * y;
    case CharKind::Zero: return y;
    case CharKind::Robin: return dy + p.beta * y;
  }
  return {};
}

Complex combine_dot(const ReggeProblem& p, CharKind kind, Complex lambda, const ScaledState& st) {
  const Complex y = st.v(0), ydot = st.dv(0), dydot = st.dv(1);
  switch (kind) {
    case CharKind::Plus:
      return dydot + kI * p.alpha * y + (kI * p.alpha * lambda + p.beta) * ydot;
    case CharKind::Minus:
      return dydot - kI * p.alpha * y - (kI * p.alpha * lambda - p.beta) * ydot;
    case CharKind::Zero: return ydot;
    case CharKind::Robin: return dydot + p.beta * ydot;
  }
  return {};
}

}  // namespace

CharFn::CharFn(ReggeProblem p, OdeOptions options)
    : p_(validate_problem(p)), prop_(p_.potential, options) {}

ScaledSolution CharFn::endpoint(Complex lambda) const {
  const ScaledMatrix t = prop_.transfer(lambda, 0.0, p_.a);
  const Vec2 y = t.m * Vec2(1.0, p_.beta0 + kI * p_.alpha0 * lambda);
  return {y(0), y(1), t.sigma};
}

ScaledState CharFn::endpoint_with_derivative(Complex lambda) const {
  return prop_.propagate(lambda, 0.0, p_.a, Vec2(1.0, p_.beta0 + kI * p_.alpha0 * lambda),
                         Vec2(0.0, kI * p_.alpha0));
}

Complex CharFn::value(CharKind kind, Complex lambda) const {
  const ScaledSolution e = endpoint(lambda);
  return descale(combine(p_, kind, lambda, e.u, e.du), e.sigma);
}

Complex CharFn::derivative(CharKind kind, Complex lambda) const {
  const ScaledState st = endpoint_with_derivative(lambda);
  return descale(combine_dot(p_, kind, lambda, st), st.sigma);
}

CharFnSample CharFn::sample(CharKind kind, Complex lambda, bool with_derivative) const {
  CharFnSample out;
  out.lambda = lambda;
  ScaledState st;
  if (with_derivative) {
    st = endpoint_with_derivative(lambda);
  } else {
    const ScaledSolution e = endpoint(lambda);
    st.v = Vec2(e.u, e.du);
    st.sigma = e.sigma;
  }
  out.exponent = st.sigma;
  try {
    out.value = descale(combine(p_, kind, lambda, st.v(0), st.v(1)), st.sigma);
    if (with_derivative) out.derivative = descale(combine_dot(p_, kind, lambda, st), st.sigma);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
    out.overflow = true;
    out.value = std::numeric_limits<double>::infinity();
  }
  return out;
}

double CharFn::log_abs(CharKind kind, Complex lambda) const {
  const ScaledSolution e = endpoint(lambda);
  const double m = std::abs(combine(p_, kind, lambda, e.u, e.du));
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(m) + e.sigma;
}

ComplexFn CharFn::fn(CharKind kind) const {
  return [this, kind](Complex l) { return value(kind, l); };
}

ComplexFn CharFn::dfn(CharKind kind) const {
  return [this, kind](Complex l) { return derivative(kind, l); };
}

Complex CharFn::integral_y_squared(Complex lambda) const {
  std::vector<double> xs;
  std::vector<Complex> vals;
  prop_.walk(lambda, 0.0, p_.a, Vec2(1.0, p_.beta0 + kI * p_.alpha0 * lambda),
             [&](double x, const ScaledState& st) {
               xs.push_back(x);
               const Complex y = st.v(0);
               vals.push_back(descale(y * y, 2.0 * st.sigma));
             });
  const std::size_t n = xs.size() - 1;  // uniform intervals
  const double h = (xs.back() - xs.front()) / n;
  Complex sum{};
  std::size_t simpson_end = n;
  if (n % 2 == 1 && n >= 3) {
    // Simpson 3/8 on the last three intervals.
    simpson_end = n - 3;
    sum += 3.0 * h / 8.0 * (vals[n - 3] + 3.0 * vals[n - 2] + 3.0 * vals[n - 1] + vals[n]);
  } else if (n == 1) {
    return 0.5 * h * (vals[0] + vals[1]);
  }
  for (std::size_t k = 0; k + 2 <= simpson_end; k += 2) {
    sum += h / 3.0 * (vals[k] + 4.0 * vals[k + 1] + vals[k + 2]);
  }
  return sum;
}

Complex delta(const ReggeProblem& p, Sign s, Complex lambda, const OdeOptions& opt) {
  return CharFn(p, opt).value(to_kind(s), lambda);
}

Complex delta_zero(const ReggeProblem& p, Complex lambda, const OdeOptions& opt) {
  return CharFn(p, opt).value(CharKind::Zero, lambda);
}

Complex delta_dot(const ReggeProblem& p, Sign s, Complex lambda, const OdeOptions& opt) {
  return CharFn(p, opt).derivative(to_kind(s), lambda);
}

Complex wronskian_delta(const ReggeProblem& p, Sign s, Complex lambda, double x,
                        const OdeOptions& opt) {
  validate_problem(p);
  const ScaledSolution y = solve_y_scaled(p, lambda, x, opt);
  const ScaledSolution phi = solve_phi_scaled(p, s, lambda, x, opt);
  return descale(phi.u * y.du - phi.du * y.u, y.sigma + phi.sigma);
}

Complex identity_residual(const ReggeProblem& p, Complex lambda, const OdeOptions& opt) {
  const CharFn f(p, opt);
  const Complex pp = f.value(CharKind::Plus, lambda) * f.value(CharKind::Plus, -lambda);
  const Complex mm = f.value(CharKind::Minus, lambda) * f.value(CharKind::Minus, -lambda);
  return pp - mm - 4.0 * p.alpha * p.alpha0 * lambda * lambda;
}

Complex robin_charfn(const ReggeProblem& p, Complex lambda, const OdeOptions& opt) {
  return CharFn(p, opt).value(CharKind::Robin, lambda);
}

EnergyTerms energy_terms(const ReggeProblem& p, Complex lambda, const OdeOptions& opt) {
  const CharFn f(p, opt);
  const ScaledState st = f.endpoint_with_derivative(lambda);
  const Complex y = descale(st.v(0), st.sigma);
  const Complex dy = descale(st.v(1), st.sigma);
  const Complex ydot = descale(st.dv(0), st.sigma);
  const Complex dydot = descale(st.dv(1), st.sigma);
  const Complex dplus = dy + (kI * p.alpha * lambda + p.beta) * y;
  const Complex dplus_dot = dydot + kI * p.alpha * y + (kI * p.alpha * lambda + p.beta) * ydot;
  EnergyTerms t;
  t.rhs = dplus * ydot - dplus_dot * y + kI * p.alpha * y * y + kI * p.alpha0;
  t.lhs = 2.0 * lambda * f.integral_y_squared(lambda);
  return t;
}

Complex energy_identity_residual(const ReggeProblem& p, Complex lambda, const OdeOptions& opt) {
  return energy_terms(p, lambda, opt).residual();
}

std::vector<CharFnSample> sample_charfn(const CharFn& f, CharKind kind,
                                        const std::vector<Complex>& points, int threads) {
  std::vector<CharFnSample> out(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) { out[i] = f.sample(kind, points[i]); });
  return out;
}

}  // namespace regge
