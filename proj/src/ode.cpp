#include "regge/ode.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace regge {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kSqrt3 = 1.73205080756887729353;

struct Core {
  Mat2 v = Mat2::Zero();
  Mat2 d = Mat2::Zero();
  double sigma = 0.0;
};

// C(z) = cosh(sqrt z), S(z) = sinh(sqrt z)/sqrt z and S'(z).
void cosh_sinc(Complex z, Complex& c, Complex& s, Complex& ds) {
  if (std::abs(z) < 0.5) {
    Complex term_c = 1.0;          // z^k / (2k)!
    Complex term_s = 1.0;          // z^k / (2k+1)!
    Complex term_d = 1.0 / 6.0;    // z^(k-1) / (2k+1)!
    c = term_c;
    s = term_s;
    ds = term_d;
    for (int k = 1; k <= 12; ++k) {
      term_c *= z / double((2 * k - 1) * (2 * k));
      term_s *= z / double((2 * k) * (2 * k + 1));
      c += term_c;
      s += term_s;
      if (k > 1) {
        term_d *= z / double((2 * k) * (2 * k + 1));
        ds += double(k) * term_d;
      }
    }
    return;
  }
  const Complex r = std::sqrt(z);
  c = std::cosh(r);
  s = std::sinh(r) / r;
  ds = (c - s) / (2.0 * z);
}

void rescale(Core& st, bool with_derivative) {
  double norm = st.v.cwiseAbs().maxCoeff();
  if (with_derivative) norm = std::max(norm, st.d.cwiseAbs().maxCoeff());
  if (norm == 0.0 || (norm >= 1e-8 && norm <= 1e8)) return;
  if (!std::isfinite(norm)) throw Error(ErrorCode::Overflow, "solution overflowed within a step");
  const int e = std::ilogb(norm);
  const double f = std::ldexp(1.0, -e);
  st.v *= f;
  if (with_derivative) st.d *= f;
  st.sigma += e * kLn2;
}

void magnus_step(const Potential& q, Complex lambda, double xa, double xb, Core& st,
                 bool with_derivative) {
  const double h = xb - xa;
  const double g1 = xa + (0.5 - kSqrt3 / 6.0) * h;
  const double g2 = xa + (0.5 + kSqrt3 / 6.0) * h;
  const Complex q1 = q.eval_unchecked(g1);
  const Complex q2 = q.eval_unchecked(g2);
  const Complex lam2 = lambda * lambda;
  const Complex vbar = 0.5 * (q1 + q2) - lam2;
  const Complex dd = (kSqrt3 / 12.0) * h * h * (q1 - q2);
  const Complex z = dd * dd + h * h * vbar;
  Complex c, s, ds;
  cosh_sinc(z, c, s, ds);
  Mat2 omega;
  omega << dd, h, h * vbar, -dd;
  const Mat2 e = c * Mat2::Identity() + s * omega;
  if (with_derivative) {
    const Complex zdot = -2.0 * lambda * h * h;
    Mat2 omega_dot = Mat2::Zero();
    omega_dot(1, 0) = -2.0 * lambda * h;
    const Mat2 edot = (0.5 * s * zdot) * Mat2::Identity() + (ds * zdot) * omega + s * omega_dot;
    st.d = (e * st.d + edot * st.v).eval();
  }
  st.v = (e * st.v).eval();
}

void rk4_step(const Potential& q, Complex lambda, double xa, double xb, Core& st,
              bool with_derivative) {
  const double h = xb - xa;
  const Complex lam2 = lambda * lambda;
  auto a_at = [&](double x) {
    Mat2 a;
    a << 0.0, 1.0, q.eval_unchecked(x) - lam2, 0.0;
    return a;
  };
  Mat2 adot = Mat2::Zero();
  adot(1, 0) = -2.0 * lambda;
  const Mat2 a0 = a_at(xa), a1 = a_at(xa + 0.5 * h), a2 = a_at(xb);
  const Mat2 kv1 = a0 * st.v;
  const Mat2 kd1 = a0 * st.d + adot * st.v;
  const Mat2 v2 = st.v + 0.5 * h * kv1, d2 = st.d + 0.5 * h * kd1;
  const Mat2 kv2 = a1 * v2;
  const Mat2 kd2 = a1 * d2 + adot * v2;
  const Mat2 v3 = st.v + 0.5 * h * kv2, d3 = st.d + 0.5 * h * kd2;
  const Mat2 kv3 = a1 * v3;
  const Mat2 kd3 = a1 * d3 + adot * v3;
  const Mat2 v4 = st.v + h * kv3, d4 = st.d + h * kd3;
  const Mat2 kv4 = a2 * v4;
  const Mat2 kd4 = a2 * d4 + adot * v4;
  st.v += h / 6.0 * (kv1 + 2.0 * kv2 + 2.0 * kv3 + kv4);
  if (with_derivative) st.d += h / 6.0 * (kd1 + 2.0 * kd2 + 2.0 * kd3 + kd4);
}

int mesh_steps(const Potential& q, int requested) {
  requested = std::max(requested, 1);
  if (q.kind() != Potential::Kind::Grid) return requested;
  const int intervals = static_cast<int>(q.samples().size()) - 1;
  const int per = (requested + intervals - 1) / intervals;
  return per * intervals;
}

// Breakpoints from x0 to x1 along the uniform mesh with n steps over [0, a].
std::vector<double> breakpoints(double a, int n, double x0, double x1) {
  std::vector<double> pts;
  const double h = a / n;
  const double lo = std::min(x0, x1), hi = std::max(x0, x1);
  const double eps = 1e-9 * h;
  pts.push_back(lo);
  const long first = static_cast<long>(std::floor(lo / h)) + 1;
  for (long k = first; k * h < hi - eps; ++k) {
    const double xk = k * h;
    if (xk > lo + eps) pts.push_back(xk);
  }
  if (hi > lo) pts.push_back(hi);
  if (x1 < x0) std::reverse(pts.begin(), pts.end());
  return pts;
}

Core to_core(const ScaledState& s) {
  Core c;
  c.v.col(0) = s.v;
  c.d.col(0) = s.dv;
  c.sigma = s.sigma;
  return c;
}

ScaledState from_core(const Core& c) {
  ScaledState s;
  s.v = c.v.col(0);
  s.dv = c.d.col(0);
  s.sigma = c.sigma;
  return s;
}

Core run_core(const Potential& q, const OdeOptions& opt, Complex lambda, double x0, double x1,
              Core st, bool with_derivative, int steps, bool full_mesh,
              const std::function<void(double, const Core&)>* visit) {
  const double a = q.length();
  std::vector<double> pts;
  if (q.is_uniform() && opt.method == Integrator::Magnus4 && !full_mesh) {
    // Exact exponential steps; keep |sqrt z| per step moderate.
    const Complex w = std::sqrt(q.constant_value() - lambda * lambda);
    const double len = std::abs(x1 - x0);
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(w) * len / 8.0)));
    for (int k = 0; k <= n; ++k) pts.push_back(x0 + (x1 - x0) * k / n);
  } else {
    pts = breakpoints(a, mesh_steps(q, steps), x0, x1);
  }
  if (visit) (*visit)(pts.front(), st);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (opt.method == Integrator::Magnus4) {
      magnus_step(q, lambda, pts[i - 1], pts[i], st, with_derivative);
    } else {
      rk4_step(q, lambda, pts[i - 1], pts[i], st, with_derivative);
    }
    rescale(st, with_derivative);
    if (visit) (*visit)(pts[i], st);
  }
  return st;
}

void check_domain(double a, double x) {
  if (!(x >= 0.0 && x <= a * (1.0 + 1e-14))) {
    throw Error(ErrorCode::OutOfDomain, "x = " + std::to_string(x) + " outside [0, a]");
  }
}

double compare(const Core& p, const Core& r, bool with_derivative) {
  const double sigma = std::max(p.sigma, r.sigma);
  const double fp = std::exp(p.sigma - sigma), fr = std::exp(r.sigma - sigma);
  double diff = (p.v * fp - r.v * fr).cwiseAbs().maxCoeff();
  double size = (r.v * fr).cwiseAbs().maxCoeff();
  if (with_derivative) {
    diff = std::max(diff, (p.d * fp - r.d * fr).cwiseAbs().maxCoeff());
    size = std::max(size, (r.d * fr).cwiseAbs().maxCoeff());
  }
  return diff / (1.0 + size);
}

}  // namespace

Complex descale(Complex u, double sigma) {
  if (u == Complex{}) return u;
  const double mag = std::log(std::abs(u)) + sigma;
  if (mag > 709.0) throw Error(ErrorCode::Overflow, "value exceeds double range");
  return u * std::exp(sigma);
}

Complex ScaledSolution::value() const { return descale(u, sigma); }
Complex ScaledSolution::derivative() const { return descale(du, sigma); }

Propagator::Propagator(Potential q, OdeOptions options) : q_(std::move(q)), options_(options) {
  if (options_.steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be positive");
}

ScaledState Propagator::run(Complex lambda, double x0, double x1, ScaledState state,
                            bool with_derivative, int steps,
                            const std::function<void(double, const ScaledState&)>* visit) const {
  check_domain(q_.length(), x0);
  check_domain(q_.length(), x1);
  std::function<void(double, const Core&)> core_visit;
  if (visit) core_visit = [visit](double x, const Core& c) { (*visit)(x, from_core(c)); };
  const Core out = run_core(q_, options_, lambda, x0, x1, to_core(state), with_derivative, steps,
                            visit != nullptr, visit ? &core_visit : nullptr);
  if (options_.check_tolerance && !visit) {
    const Core fine = run_core(q_, options_, lambda, x0, x1, to_core(state), with_derivative,
                               2 * steps, false, nullptr);
    if (compare(out, fine, with_derivative) > options_.tolerance) {
      throw Error(ErrorCode::ToleranceNotMet, "step-halving check failed");
    }
  }
  return from_core(out);
}

ScaledMatrix Propagator::transfer(Complex lambda, double x0, double x1) const {
  check_domain(q_.length(), x0);
  check_domain(q_.length(), x1);
  Core st;
  st.v = Mat2::Identity();
  const Core out =
      run_core(q_, options_, lambda, x0, x1, st, false, options_.steps, false, nullptr);
  if (options_.check_tolerance) {
    const Core fine =
        run_core(q_, options_, lambda, x0, x1, st, false, 2 * options_.steps, false, nullptr);
    if (compare(out, fine, false) > options_.tolerance) {
      throw Error(ErrorCode::ToleranceNotMet, "step-halving check failed");
    }
  }
  return {out.v, out.sigma};
}

ScaledState Propagator::propagate(Complex lambda, double x0, double x1, const Vec2& init,
                                  const Vec2& dinit) const {
  ScaledState st;
  st.v = init;
  st.dv = dinit;
  return run(lambda, x0, x1, st, true, options_.steps, nullptr);
}

void Propagator::walk(Complex lambda, double x0, double x1, const Vec2& init,
                      const std::function<void(double, const ScaledState&)>& visit) const {
  ScaledState st;
  st.v = init;
  run(lambda, x0, x1, st, false, options_.steps, &visit);
}

SCValues solve_sc(const ReggeProblem& p, Complex lambda, double x, const OdeOptions& opt) {
  const Propagator prop(p.potential, opt);
  const ScaledMatrix t = prop.transfer(lambda, 0.0, x);
  const Vec2 c = t.m * Vec2(1.0, p.beta0);
  return {descale(t.m(0, 1), t.sigma), descale(t.m(1, 1), t.sigma), descale(c(0), t.sigma),
          descale(c(1), t.sigma)};
}

ScaledState solve_y_with_derivative(const ReggeProblem& p, Complex lambda, double x,
                                    const OdeOptions& opt) {
  const Propagator prop(p.potential, opt);
  return prop.propagate(lambda, 0.0, x, Vec2(1.0, p.beta0 + kI * p.alpha0 * lambda),
                        Vec2(0.0, kI * p.alpha0));
}

ScaledSolution solve_y_scaled(const ReggeProblem& p, Complex lambda, double x,
                              const OdeOptions& opt) {
  const Propagator prop(p.potential, opt);
  const ScaledMatrix t = prop.transfer(lambda, 0.0, x);
  const Vec2 y = t.m * Vec2(1.0, p.beta0 + kI * p.alpha0 * lambda);
  return {y(0), y(1), t.sigma};
}

std::pair<Complex, Complex> solve_y(const ReggeProblem& p, Complex lambda, double x,
                                    const OdeOptions& opt) {
  const ScaledSolution s = solve_y_scaled(p, lambda, x, opt);
  return {s.value(), s.derivative()};
}

ScaledSolution solve_phi_scaled(const ReggeProblem& p, Sign s, Complex lambda, double x,
                                const OdeOptions& opt) {
  const Propagator prop(p.potential, opt);
  const Complex slope =
      s == Sign::Plus ? -(kI * p.alpha * lambda + p.beta) : kI * p.alpha * lambda - p.beta;
  const ScaledMatrix t = prop.transfer(lambda, p.a, x);
  const Vec2 phi = t.m * Vec2(1.0, slope);
  return {phi(0), phi(1), t.sigma};
}

std::pair<Complex, Complex> solve_phi(const ReggeProblem& p, Sign s, Complex lambda, double x,
                                      const OdeOptions& opt) {
  const ScaledSolution r = solve_phi_scaled(p, s, lambda, x, opt);
  return {r.value(), r.derivative()};
}

std::pair<Complex, Complex> solve_y_lambda_derivative(const ReggeProblem& p, Complex lambda,
                                                      double x, const OdeOptions& opt) {
  const ScaledState st = solve_y_with_derivative(p, lambda, x, opt);
  return {descale(st.dv(0), st.sigma), descale(st.dv(1), st.sigma)};
}

}  // namespace regge
