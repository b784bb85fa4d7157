#pragma once

#include <vector>

#include "regge/model.hpp"

namespace regge {

/// Transformation kernel K(x, t) on |t| <= x <= a, stored in characteristic
/// coordinates u = (x + t)/2, w = (x - t)/2 over the triangle u, w >= 0,
/// u + w <= a with a uniform step.
class KernelGrid {
 public:
  KernelGrid(double a, int points, Complex beta0);

  int points() const { return points_; }
  double a() const { return a_; }
  double step() const { return delta_; }
  int iterations() const { return iterations_; }
  /// sup |H - T(H)| of the last Picard sweep.
  double residual() const { return residual_; }

  /// Node value H(i delta, j delta) = K((i+j) delta, (i-j) delta); needs i + j < points.
  Complex node(int i, int j) const { return h_[index(i, j)]; }

  Complex K(double x, double t) const;
  Complex K1(double x, double t) const { return K(x, t) - K(x, -t); }
  /// G(x, t, beta0) = beta0 + K(x,t) + K(x,-t) + beta0 * int_t^x K1(x, xi) dxi.
  Complex G(double x, double t) const;

 private:
  friend KernelGrid kernel_K(const ReggeProblem&, int, int, double);
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * points_ + j; }
  Complex H(double u, double w) const;

  double a_;
  int points_;
  double delta_;
  Complex beta0_;
  std::vector<Complex> h_;
  int iterations_ = 0;
  double residual_ = 0.0;
};

/// Picard iteration for the kernel integral equation; NoConvergence when the
/// successive sup-difference stays above tol after max_iter sweeps.
KernelGrid kernel_K(const ReggeProblem& p, int mesh, int max_iter, double tol);

/// s(lambda, x) through the transformation-operator representation.
Complex transform_rep_s(const KernelGrid& kg, Complex lambda, double x);

}  // namespace regge
