#include "regge/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace regge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::NegativeAlpha0: return "NegativeAlpha0";
    case ErrorCode::NonPositiveAlpha: return "NonPositiveAlpha";
    case ErrorCode::InconsistentRealFlag: return "InconsistentRealFlag";
    case ErrorCode::InvalidPotential: return "InvalidPotential";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BoundaryZero: return "BoundaryZero";
    case ErrorCode::NewtonDivergence: return "NewtonDivergence";
    case ErrorCode::MultiplicityCap: return "MultiplicityCap";
    case ErrorCode::DegenerateCase: return "DegenerateCase";
    case ErrorCode::DegenerateSigma: return "DegenerateSigma";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::LimitNotConverged: return "LimitNotConverged";
    case ErrorCode::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorCode::ZeroAtOrigin: return "ZeroAtOrigin";
    case ErrorCode::MisalignedInput: return "MisalignedInput";
    case ErrorCode::SignViolation: return "SignViolation";
    case ErrorCode::InterlacingViolation: return "InterlacingViolation";
    case ErrorCode::TruncationDominates: return "TruncationDominates";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Potential Potential::zero(double a) {
  Potential p;
  p.kind_ = Kind::Zero;
  p.a_ = a;
  p.prepare();
  return p;
}

Potential Potential::constant(Complex value, double a) {
  Potential p;
  p.kind_ = Kind::Constant;
  p.a_ = a;
  p.value_ = value;
  p.prepare();
  return p;
}

Potential Potential::grid(std::vector<Complex> samples, double a, Interpolation interpolation) {
  Potential p;
  p.kind_ = Kind::Grid;
  p.a_ = a;
  p.samples_ = std::move(samples);
  p.interpolation_ = interpolation;
  p.prepare();
  return p;
}

void Potential::prepare() {
  if (!(a_ > 0.0) || !std::isfinite(a_)) {
    throw Error(ErrorCode::NonPositiveLength, "potential domain length must be positive");
  }
  if (kind_ == Kind::Constant) {
    if (!finite(value_)) throw Error(ErrorCode::InvalidPotential, "non-finite constant");
    real_valued_ = value_.imag() == 0.0;
    return;
  }
  if (kind_ == Kind::Zero) {
    real_valued_ = true;
    return;
  }
  const std::size_t n = samples_.size();
  if (n < 2) throw Error(ErrorCode::InvalidPotential, "grid needs at least two samples");
  real_valued_ = true;
  for (const Complex& v : samples_) {
    if (!finite(v)) throw Error(ErrorCode::InvalidPotential, "non-finite grid sample");
    if (v.imag() != 0.0) real_valued_ = false;
  }
  const double h = a_ / static_cast<double>(n - 1);
  second_derivs_.assign(n, Complex{});
  if (interpolation_ == Interpolation::Cubic && n >= 3) {
    // Natural spline: tridiagonal system with diagonal 4, off-diagonals 1.
    const std::size_t m = n - 2;
    std::vector<Complex> rhs(m);
    std::vector<double> diag(m, 4.0);
    for (std::size_t i = 0; i < m; ++i) {
      rhs[i] = 6.0 * (samples_[i] - 2.0 * samples_[i + 1] + samples_[i + 2]) / (h * h);
    }
    for (std::size_t i = 1; i < m; ++i) {
      const double w = 1.0 / diag[i - 1];
      diag[i] -= w;
      rhs[i] -= w * rhs[i - 1];
    }
    std::vector<Complex> sol(m);
    sol[m - 1] = rhs[m - 1] / diag[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) sol[i] = (rhs[i] - sol[i + 1]) / diag[i];
    for (std::size_t i = 0; i < m; ++i) second_derivs_[i + 1] = sol[i];
  }
  cumulative_.assign(n, Complex{});
  for (std::size_t i = 1; i < n; ++i) {
    cumulative_[i] = cumulative_[i - 1] + 0.5 * h * (samples_[i - 1] + samples_[i]) -
                     h * h * h * (second_derivs_[i - 1] + second_derivs_[i]) / 24.0;
  }
}

Complex Potential::operator()(double x) const {
  if (!(x >= 0.0 && x <= a_)) {
    throw Error(ErrorCode::OutOfDomain, "x = " + std::to_string(x) + " outside [0, a]");
  }
  return eval_unchecked(x);
}

Complex Potential::eval_unchecked(double x) const {
  switch (kind_) {
    case Kind::Zero: return {};
    case Kind::Constant: return value_;
    case Kind::Grid: break;
  }
  const std::size_t n = samples_.size();
  const double h = a_ / static_cast<double>(n - 1);
  const double pos = std::clamp(x, 0.0, a_) / h;
  std::size_t i = static_cast<std::size_t>(pos);
  if (i >= n - 1) i = n - 2;
  const double t = pos - static_cast<double>(i);
  const double s = 1.0 - t;
  Complex v = s * samples_[i] + t * samples_[i + 1];
  if (interpolation_ == Interpolation::Cubic) {
    v += h * h / 6.0 * ((s * s * s - s) * second_derivs_[i] + (t * t * t - t) * second_derivs_[i + 1]);
  }
  return v;
}

Complex Potential::prefix_integral(double x) const {
  if (!(x >= 0.0 && x <= a_)) {
    throw Error(ErrorCode::OutOfDomain, "x = " + std::to_string(x) + " outside [0, a]");
  }
  switch (kind_) {
    case Kind::Zero: return {};
    case Kind::Constant: return value_ * x;
    case Kind::Grid: break;
  }
  const std::size_t n = samples_.size();
  const double h = a_ / static_cast<double>(n - 1);
  const double pos = x / h;
  std::size_t i = static_cast<std::size_t>(pos);
  if (i >= n - 1) i = n - 2;
  const double t = pos - static_cast<double>(i);
  const double s = 1.0 - t;
  Complex v = cumulative_[i] + h * ((t - 0.5 * t * t) * samples_[i] + 0.5 * t * t * samples_[i + 1]);
  if (interpolation_ == Interpolation::Cubic) {
    const double left = -0.25 * s * s * s * s + 0.5 * s * s - 0.25;
    const double right = 0.25 * t * t * t * t - 0.5 * t * t;
    v += h * h * h / 6.0 * (left * second_derivs_[i] + right * second_derivs_[i + 1]);
  }
  return v;
}

Potential Potential::reflected() const {
  if (kind_ != Kind::Grid) return *this;
  std::vector<Complex> rev(samples_.rbegin(), samples_.rend());
  return grid(std::move(rev), a_, interpolation_);
}

double Potential::asymmetry() const {
  if (kind_ != Kind::Grid) return 0.0;
  double worst = 0.0;
  const std::size_t n = samples_.size();
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(samples_[i] - samples_[n - 1 - i]));
  }
  return worst;
}

Complex potential_eval(const Potential& q, double x) { return q(x); }

Complex potential_prefix_integral(const Potential& q, double x) { return q.prefix_integral(x); }

Potential potential_reflect(const Potential& q, double a) {
  if (std::abs(a - q.length()) > 1e-12 * std::max(1.0, a)) {
    throw Error(ErrorCode::InvalidArgument, "reflection length differs from potential domain");
  }
  return q.reflected();
}

bool potential_is_even(const Potential& q, double a, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "evenness tolerance must be positive");
  if (std::abs(a - q.length()) > 1e-12 * std::max(1.0, a)) return false;
  return q.asymmetry() <= tol;
}

double default_even_tolerance(const Potential& q) { return q.is_uniform() ? 1e-10 : 1e-8; }

ReggeProblem validate_problem(const ReggeProblem& p) {
  if (!(p.a > 0.0) || !std::isfinite(p.a)) {
    throw Error(ErrorCode::NonPositiveLength, "a must be positive and finite");
  }
  if (!(p.alpha0 >= 0.0) || !std::isfinite(p.alpha0)) {
    throw Error(ErrorCode::NegativeAlpha0, "alpha0 must be nonnegative and finite");
  }
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) {
    throw Error(ErrorCode::NonPositiveAlpha, "alpha must be positive and finite");
  }
  if (!finite(p.beta0) || !finite(p.beta)) {
    throw Error(ErrorCode::InvalidArgument, "beta0 and beta must be finite");
  }
  if (std::abs(p.potential.length() - p.a) > 1e-12 * p.a) {
    throw Error(ErrorCode::InvalidPotential, "potential domain does not match a");
  }
  if (p.real_data &&
      (!p.potential.real_valued() || p.beta0.imag() != 0.0 || p.beta.imag() != 0.0)) {
    throw Error(ErrorCode::InconsistentRealFlag, "real_data set but complex entries present");
  }
  return p;
}

ReggeProblem make_problem(double a, double alpha0, Complex beta0, double alpha, Complex beta,
                          Potential q) {
  ReggeProblem p;
  p.a = a;
  p.alpha0 = alpha0;
  p.beta0 = beta0;
  p.alpha = alpha;
  p.beta = beta;
  p.potential = std::move(q);
  p.real_data = p.potential.real_valued() && beta0.imag() == 0.0 && beta.imag() == 0.0;
  return validate_problem(p);
}

}  // namespace regge
