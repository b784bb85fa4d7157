#include "regge/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace regge {

KernelGrid::KernelGrid(double a, int points, Complex beta0)
    : a_(a),
      points_(points),
      delta_(a / (points - 1)),
      beta0_(beta0),
      h_(static_cast<std::size_t>(points) * points) {}

Complex KernelGrid::H(double u, double w) const {
  const int last = points_ - 1;
  const double pu = std::clamp(u / delta_, 0.0, double(last));
  const double pw = std::clamp(w / delta_, 0.0, double(last) - pu);
  int i = std::min(static_cast<int>(pu), last);
  int j = std::min(static_cast<int>(pw), last - i);
  if (i + j == last) return node(i, j);  // only reachable at a hypotenuse node
  const double fu = pu - i, fw = pw - j;
  if (fu + fw <= 1.0) {
    const Complex h00 = node(i, j);
    return h00 + fu * (node(i + 1, j) - h00) + fw * (node(i, j + 1) - h00);
  }
  const Complex h11 = node(i + 1, j + 1);
  return h11 + (1.0 - fu) * (node(i, j + 1) - h11) + (1.0 - fw) * (node(i + 1, j) - h11);
}

Complex KernelGrid::K(double x, double t) const {
  if (!(x >= 0.0 && x <= a_ * (1.0 + 1e-14) && std::abs(t) <= x * (1.0 + 1e-14))) {
    throw Error(ErrorCode::OutOfDomain, "kernel evaluated outside |t| <= x <= a");
  }
  return H(0.5 * (x + t), 0.5 * (x - t));
}

Complex KernelGrid::G(double x, double t) const {
  Complex g = beta0_ + K(x, t) + K(x, -t);
  if (beta0_ != Complex{}) {
    const int n = std::max(2, 2 * static_cast<int>(std::ceil((x - t) / delta_)));
    const double h = (x - t) / n;
    Complex sum{};
    for (int k = 0; k <= n; ++k) {
      const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
      sum += w * K1(x, t + k * h);
    }
    g += beta0_ * sum * h / 3.0;
  }
  return g;
}

KernelGrid kernel_K(const ReggeProblem& p, int mesh, int max_iter, double tol) {
  if (mesh < 16) throw Error(ErrorCode::InvalidArgument, "kernel mesh needs at least 16 points");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "kernel tolerance must be positive");
  KernelGrid kg(p.a, mesh, p.beta0);
  const int m = mesh;
  const double d = kg.delta_;
  const Potential& q = p.potential;

  std::vector<Complex> base(m), qline(m);
  for (int i = 0; i < m; ++i) {
    base[i] = 0.5 * q.prefix_integral(std::min(i * d, p.a));
    qline[i] = q.eval_unchecked(i * d);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; i + j < m; ++j) kg.h_[kg.index(i, j)] = base[i];

  std::vector<Complex> g(kg.h_.size()), acc(kg.h_.size());
  for (int iter = 1; iter <= max_iter; ++iter) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; i + j < m; ++j) g[kg.index(i, j)] = qline[i + j] * kg.h_[kg.index(i, j)];
    double diff = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; i + j < m; ++j) {
        Complex v{};
        if (i > 0 && j > 0) {
          v = acc[kg.index(i - 1, j)] + acc[kg.index(i, j - 1)] - acc[kg.index(i - 1, j - 1)] +
              0.25 * d * d *
                  (g[kg.index(i - 1, j - 1)] + g[kg.index(i - 1, j)] + g[kg.index(i, j - 1)] +
                   g[kg.index(i, j)]);
        }
        acc[kg.index(i, j)] = v;
      }
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; i + j < m; ++j) {
        const Complex next = base[i] + acc[kg.index(i, j)];
        diff = std::max(diff, std::abs(next - kg.h_[kg.index(i, j)]));
        kg.h_[kg.index(i, j)] = next;
      }
    }
    kg.iterations_ = iter;
    kg.residual_ = diff;
    if (diff <= tol) return kg;
  }
  throw Error(ErrorCode::NoConvergence,
              "kernel Picard iteration stalled at " + std::to_string(kg.residual_));
}

Complex transform_rep_s(const KernelGrid& kg, Complex lambda, double x) {
  auto sinc_t = [&](double t) -> Complex {
    if (std::abs(lambda) * t < 1e-8) return t;
    return std::sin(lambda * t) / lambda;
  };
  if (x == 0.0) return 0.0;
  const int n = std::max(2, 2 * static_cast<int>(std::ceil(x / kg.step())));
  const double h = x / n;
  Complex sum{};
  for (int k = 0; k <= n; ++k) {
    const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    const double t = k * h;
    sum += w * kg.K1(x, t) * sinc_t(t);
  }
  return sinc_t(x) + sum * h / 3.0;
}

}  // namespace regge
