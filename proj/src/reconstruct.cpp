#include "regge/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "regge/special.hpp"

namespace regge {

std::vector<Complex> ZeroSet::expanded() const {
  std::vector<Complex> out;
  for (const auto& [z, m] : zeros)
    for (int k = 0; k < m; ++k) out.push_back(z);
  return out;
}

std::size_t ZeroSet::total() const {
  std::size_t n = static_cast<std::size_t>(order_at_origin);
  for (const auto& zm : zeros) n += static_cast<std::size_t>(zm.second);
  return n;
}

ZeroSet make_zero_set(const std::vector<Complex>& values, double merge_tol) {
  ZeroSet zs;
  for (const Complex& v : values) {
    if (std::abs(v) <= merge_tol) {
      ++zs.order_at_origin;
      continue;
    }
    auto it = std::find_if(zs.zeros.begin(), zs.zeros.end(), [&](const auto& zm) {
      return std::abs(zm.first - v) <= merge_tol * (1.0 + std::abs(v));
    });
    if (it != zs.zeros.end()) {
      ++it->second;
    } else {
      zs.zeros.emplace_back(v, 1);
    }
  }
  return zs;
}

namespace {

// Principal log, with negative reals sent to +i pi regardless of the sign of zero.
Complex factor_log(Complex f) {
  if (f.imag() == 0.0 && f.real() < 0.0) return {std::log(-f.real()), kPi};
  return std::log(f);
}

// sum_{k>=0} [ln(1 - w/(c+k)) + w/(c+k)] for Re(c - w) > 0.
Complex lattice_tail_sum(Complex c, Complex w) {
  return log_gamma(c) - log_gamma(c - w) - w * digamma(c);
}

struct Richardson {
  Complex value;
  double spread;
};

// Extrapolates values sampled at n, 2n, 4n, ... assuming an error series in 1/n.
Richardson richardson(const std::vector<Complex>& v) {
  std::vector<Complex> level = v;
  for (int order = 1; order <= 2 && level.size() >= 3; ++order) {
    const double f = std::pow(2.0, order);
    std::vector<Complex> next;
    for (std::size_t j = 0; j + 1 < level.size(); ++j) {
      next.push_back((f * level[j + 1] - level[j]) / (f - 1.0));
    }
    level = std::move(next);
  }
  const Complex last = level.back();
  const double spread = level.size() >= 2
                            ? std::abs(last - level[level.size() - 2]) / std::max(1.0, std::abs(last))
                            : INFINITY;
  return {last, spread};
}

}  // namespace

Complex HadamardModel::log_E(Complex z) const { return log_product(z, use_tail_); }

Complex HadamardModel::log_product(Complex z, bool with_tail) const {
  Complex sum{};
  if (zs_.order_at_origin > 0) sum += double(zs_.order_at_origin) * std::log(z);
  for (const Complex& zn : kept_) {
    const Complex r = z / zn;
    sum += factor_log(1.0 - r) + r;
  }
  if (with_tail) {
    sum += lattice_tail_sum(right_tail_ / spacing_, z / spacing_);
    sum += lattice_tail_sum(-left_tail_ / spacing_, -z / spacing_);
  }
  return sum;
}

Complex HadamardModel::evaluate(Complex z) const {
  if (std::abs(z) > radius_) {
    throw Error(ErrorCode::OutOfDomain, "evaluation point beyond the trusted product radius");
  }
  if (z == Complex{} && zs_.order_at_origin > 0) return 0.0;
  return c_ * std::exp(b_ * z + log_E(z));
}

HadamardModel hadamard_build(const ZeroSet& zs, KnownCoefficient c0, HadamardOptions opt) {
  if (c0.value == Complex{}) throw Error(ErrorCode::InvalidArgument, "known coefficient is zero");
  if (!(opt.a > 0.0)) throw Error(ErrorCode::InvalidArgument, "type a must be positive");
  HadamardModel m;
  m.zs_ = zs;
  m.known_ = c0;
  m.spacing_ = kPi / opt.a;

  std::vector<Complex> right, left;
  for (const Complex& z : zs.expanded()) (z.real() >= 0.0 ? right : left).push_back(z);
  auto by_modulus = [](Complex x, Complex y) { return std::abs(x) < std::abs(y); };
  std::sort(right.begin(), right.end(), by_modulus);
  std::sort(left.begin(), left.end(), by_modulus);
  if (opt.truncation > 0) {
    if (right.size() > opt.truncation) right.resize(opt.truncation);
    if (left.size() > opt.truncation) left.resize(opt.truncation);
  }
  m.truncation_ = std::max(right.size(), left.size());
  m.kept_ = right;
  m.kept_.insert(m.kept_.end(), left.begin(), left.end());
  if (right.empty() || left.empty()) {
    throw Error(ErrorCode::InvalidArgument, "zero set needs zeros on both sides of the imaginary axis");
  }

  auto max_re = [](const std::vector<Complex>& v, bool largest) {
    return *std::max_element(v.begin(), v.end(), [&](Complex x, Complex y) {
      return largest ? x.real() < y.real() : x.real() > y.real();
    });
  };
  m.right_tail_ = max_re(right, true) + m.spacing_;
  m.left_tail_ = max_re(left, false) - m.spacing_;
  const double edge = std::min(std::abs(m.right_tail_), std::abs(m.left_tail_));
  m.use_tail_ = opt.lattice_tail;
  if (opt.lattice_tail) m.radius_ = 0.9 * edge;

  // Asymptotic side of the imaginary parts, from the outer tenth of the zeros.
  double im_mean = 0.0;
  std::size_t count = 0;
  for (const auto* side : {&right, &left}) {
    const std::size_t from = side->size() - std::max<std::size_t>(1, side->size() / 10);
    for (std::size_t i = from; i < side->size(); ++i, ++count) im_mean += (*side)[i].imag();
  }
  im_mean /= double(count);
  const double sigma = im_mean >= -1e-12 ? 1.0 : -1.0;

  double offset = 0.0;
  Complex target = c0.value;
  switch (c0.which) {
    case Coefficient::C1: offset = 0.0; break;
    case Coefficient::C2: offset = 0.5; break;
    case Coefficient::C1PlusC2: offset = 0.25; target /= std::sqrt(2.0); break;
    case Coefficient::C1MinusC2: offset = -0.25; target /= std::sqrt(2.0); break;
  }
  std::vector<long> ns;
  std::vector<double> xs;
  for (int e = opt.n_min_exp; e <= opt.n_max_exp; ++e) {
    const long n = 1L << e;
    const double x = (2.0 * n + offset) * kPi / opt.a;
    if (x > 0.5 * edge) break;
    ns.push_back(n);
    xs.push_back(x);
  }
  if (ns.size() < 3) {
    throw Error(ErrorCode::LimitNotConverged, "too few zeros to sample the limits");
  }
  // The limits always see the completed product; the tail switch only
  // affects evaluation.
  std::vector<Complex> logs(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) logs[j] = m.log_product(xs[j], true);
  // Differences between samples sharing one offset cancel the constant phase
  // of the trigonometric factor, which otherwise decays only like 1/x.
  std::vector<Complex> bs;
  for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
    const Complex l0 = logs[j] - std::log(xs[j]), l1 = logs[j + 1] - std::log(xs[j + 1]);
    bs.push_back(kI * opt.a * sigma - (l1 - l0) / (xs[j + 1] - xs[j]));
  }
  const Richardson rb = richardson(bs);
  m.b_ = rb.value;
  m.b_trace_ = {std::vector<long>(ns.begin() + 1, ns.end()), bs, rb.value, rb.spread};
  std::vector<Complex> cs(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    cs[j] = target * xs[j] * std::exp(-(m.b_ * xs[j] + logs[j]));
  }
  const Richardson rc = richardson(cs);
  m.c_ = rc.value;
  m.c_trace_ = {ns, cs, rc.value, rc.spread};
  if (rb.spread > opt.tolerance || rc.spread > opt.tolerance) {
    throw Error(ErrorCode::LimitNotConverged,
                "b spread " + std::to_string(rb.spread) + ", c spread " + std::to_string(rc.spread));
  }
  return m;
}

EvenDeltaMinus::EvenDeltaMinus(ComplexFn delta_plus, double alpha, double a, double path_end,
                               double step)
    : dp_(std::move(delta_plus)),
      alpha_(alpha),
      step_(step > 0.0 ? step : kPi / (50.0 * a)) {
  const Complex v0 = dp_(0.0);
  if (std::abs(v0) == 0.0) {
    throw Error(ErrorCode::ZeroAtOrigin, "Delta+(0) = 0: the even branch is not determined");
  }
  scale_ = std::abs(v0);
  xs_ = {0.0};
  vals_ = {v0};
  extend_to(path_end);
}

std::size_t EvenDeltaMinus::anchors() const {
  std::lock_guard<std::mutex> lock(mu_);
  return xs_.size();
}

EvenDeltaMinus::Radicand EvenDeltaMinus::radicand(Complex lambda) const {
  const Complex product = dp_(lambda) * dp_(-lambda);
  const Complex square = 4.0 * alpha_ * alpha_ * lambda * lambda;
  return {product - square, std::abs(product) + std::abs(square)};
}

Complex EvenDeltaMinus::choose(Complex lambda, Complex predicted, Complex previous) const {
  const Radicand r = radicand(lambda);
  const Complex root = std::sqrt(r.value);
  const double d1 = std::abs(root - predicted), d2 = std::abs(-root - predicted);
  const double lo = std::min(d1, d2), hi = std::max(d1, d2);
  // Near a zero of Delta- the radicand is a cancellation remainder and its
  // root carries no sign information; the prediction decides.
  const bool rounding = std::abs(r.value) <= 1e3 * std::numeric_limits<double>::epsilon() * r.terms;
  const bool tiny = rounding || std::abs(root) <= 1e-9 * std::max({1.0, std::abs(previous), scale_});
  if (lo <= 0.25 * hi || tiny) return d1 <= d2 ? root : -root;
  throw Error(ErrorCode::BranchAmbiguity, "both square-root branches fit the continuation");
}

Complex EvenDeltaMinus::track(Complex from, Complex from_value, Complex from_slope,
                              Complex to) const {
  Complex z = from, v = from_value, slope = from_slope;
  const double total = std::abs(to - from);
  if (total == 0.0) return v;
  const Complex dir = (to - from) / total;
  double done = 0.0;
  double h = std::min(step_, total);
  int halvings = 0;
  while (done < total) {
    const double hs = std::min(h, total - done);
    const Complex zn = done + hs >= total ? to : from + dir * (done + hs);
    const Complex dz = zn - z;
    try {
      const Complex vn = choose(zn, v + slope * dz, v);
      slope = (vn - v) / dz;
      v = vn;
      z = zn;
      done += hs;
      if (halvings > 0) {
        --halvings;
        h *= 2.0;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BranchAmbiguity || halvings >= 20) throw;
      ++halvings;
      h *= 0.5;
    }
  }
  return v;
}

void EvenDeltaMinus::extend_to(double x) const {
  while (xs_.back() < x) {
    const std::size_t n = xs_.size();
    const Complex slope =
        n >= 2 ? (vals_[n - 1] - vals_[n - 2]) / (xs_[n - 1] - xs_[n - 2]) : Complex{};
    const double next = xs_.back() + step_;
    vals_.push_back(track(xs_.back(), vals_.back(), slope, next));
    xs_.push_back(next);
  }
}

Complex EvenDeltaMinus::operator()(Complex lambda) const {
  if (lambda.real() < 0.0) lambda = -lambda;  // Delta- is even
  std::lock_guard<std::mutex> lock(mu_);
  extend_to(lambda.real());
  const std::size_t i = std::min<std::size_t>(
      xs_.size() - 1, static_cast<std::size_t>(std::llround(lambda.real() / step_)));
  const std::size_t j = i > 0 ? i - 1 : 1;
  const Complex slope = (vals_[i] - vals_[j]) / (xs_[i] - xs_[j]);
  if (lambda == Complex(xs_[i], 0.0)) return vals_[i];
  return track(xs_[i], vals_[i], slope, lambda);
}

std::shared_ptr<EvenDeltaMinus> even_delta_minus(ComplexFn delta_plus, double alpha, double a,
                                                 double path_end, double step) {
  return std::make_shared<EvenDeltaMinus>(std::move(delta_plus), alpha, a, path_end, step);
}

Complex delta0_from_pair(const ComplexFn& dp, const ComplexFn& dm, double alpha, Complex lambda) {
  if (std::abs(lambda) < 1e-6) {
    const double h = 1e-4;
    const Complex d = (dp(h) - dm(h) - dp(-h) + dm(-h)) / (2.0 * h);
    return d / (2.0 * kI * alpha);
  }
  return (dp(lambda) - dm(lambda)) / (2.0 * kI * alpha * lambda);
}

Complex two_spectra_robin(const ComplexFn& dp, const ComplexFn& dm, Complex lambda) {
  return 0.5 * (dp(lambda) + dm(lambda));
}

ZeroSet sign_disambiguate(const std::vector<Complex>& g_zeros_upper, const std::vector<int>& signs) {
  if (g_zeros_upper.size() != signs.size()) {
    throw Error(ErrorCode::MisalignedInput, "zero and sign lists differ in length");
  }
  std::vector<Complex> out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != 0 && signs[i] != -1) {
      throw Error(ErrorCode::InvalidArgument, "signs must be -1, 0 or +1");
    }
    out.push_back(signs[i] == -1 ? std::conj(g_zeros_upper[i]) : g_zeros_upper[i]);
  }
  return make_zero_set(out, 0.0);
}

}  // namespace regge
