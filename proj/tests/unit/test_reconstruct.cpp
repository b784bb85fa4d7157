#include "helpers.hpp"

#include "regge/reconstruct.hpp"
#include "regge/roots.hpp"

using namespace regge;
using testing::near;

namespace {

// Zeros z_k = shift + k pi for k in [-n, n], skipping those within 1e-12 of 0.
std::vector<Complex> lattice(double shift, long n) {
  std::vector<Complex> v;
  for (long k = -n; k <= n; ++k) {
    const double x = shift + double(k) * kPi;
    if (std::abs(x) > 1e-12) v.push_back(x);
  }
  return v;
}

ZeroSet with_origin(std::vector<Complex> v, int s) {
  ZeroSet zs = make_zero_set(v);
  zs.order_at_origin = s;
  return zs;
}

const ReggeProblem kEvenZero = make_problem(1.0, 2.0, 1.0, 2.0, 1.0, Potential::zero(1.0));

}  // namespace

TEST_CASE("make_zero_set") {
  const ZeroSet zs = make_zero_set({0.0, 1e-12, {1, 1}, {1, 1}, 2.0});
  CHECK(zs.order_at_origin == 2);
  REQUIRE(zs.zeros.size() == 2);
  CHECK(zs.zeros[0].second == 2);
  CHECK(zs.total() == 5);
  CHECK(zs.expanded().size() == 3);
}

TEST_CASE("lattice tail closes the product exactly") {
  // Exact lattices: the completed product must reproduce the entire function.
  HadamardOptions opt;
  opt.n_min_exp = 4;
  opt.n_max_exp = 7;
  const HadamardModel cosm = hadamard_build(with_origin(lattice(kPi / 2, 600), 1), {Coefficient::C1, 1.0}, opt);
  const HadamardModel mixed =
      hadamard_build(with_origin(lattice(-kPi / 4, 600), 1), {Coefficient::C1, 1.0}, opt);
  for (Complex z : {Complex(0.7, 0.0), Complex(1.3, 0.4), Complex(-2.2, -0.9), Complex(5.0, 1.0)}) {
    CHECK(std::abs(std::exp(cosm.log_E(z)) - z * std::cos(z)) <= 1e-10 * std::abs(z * std::cos(z)));
    const Complex want = z * std::exp(-z) * (std::cos(z) + std::sin(z));
    CHECK(std::abs(std::exp(mixed.log_E(z)) - want) <= 1e-10 * std::abs(want));
  }
}

TEST_CASE("hadamard_build: z cos z and z (cos z + sin z)") {
  const HadamardModel m = hadamard_build(with_origin(lattice(kPi / 2, 2000), 1), {Coefficient::C1, 1.0});
  CHECK(std::abs(m.b()) <= 1e-6);
  CHECK(std::abs(m.c() - 1.0) <= 1e-6);
  CHECK(std::abs(m.evaluate(1.0) - std::cos(1.0)) <= 1e-3);
  CHECK(m.evaluate(0.0) == Complex(0.0));
  CHECK_THROWS_CODE(m.evaluate(m.radius() + 1.0), ErrorCode::OutOfDomain);

  const HadamardModel s = hadamard_build(with_origin(lattice(-kPi / 4, 2000), 1), {Coefficient::C1, 1.0});
  CHECK(std::abs(s.evaluate(2.0) - 2.0 * (std::cos(2.0) + std::sin(2.0))) <= 1e-3);
}

TEST_CASE("hadamard_build with each coefficient selector") {
  // z sin z: c1 = 0, c2 = 1, double zero at the origin.
  const HadamardModel s2 = hadamard_build(with_origin(lattice(0.0, 2000), 2), {Coefficient::C2, 1.0});
  for (double x : {0.4, 1.3, 2.9}) CHECK(std::abs(s2.evaluate(x) - x * std::sin(x)) <= 1e-6);

  // z (cos z + sin z): c1 + c2 = 2.
  const HadamardModel sp = hadamard_build(with_origin(lattice(-kPi / 4, 2000), 1), {Coefficient::C1PlusC2, 2.0});
  for (double x : {0.4, 1.3, 2.9}) CHECK(std::abs(sp.evaluate(x) - x * (std::cos(x) + std::sin(x))) <= 1e-6);

  // z (2 cos z + sin z): zeros where tan z = -2, c1 - c2 = 1.
  const HadamardModel sm =
      hadamard_build(with_origin(lattice(-std::atan(2.0), 2000), 1), {Coefficient::C1MinusC2, 1.0});
  for (double x : {0.4, 1.3, 2.9}) {
    CHECK(std::abs(sm.evaluate(x) - x * (2.0 * std::cos(x) + std::sin(x))) <= 1e-6);
  }
}

TEST_CASE("-i Delta+ rebuilt from its closed-form zeros") {
  const double eta = std::log(6.0) / 2.0;
  std::vector<Complex> z;
  for (long n = -3000; n <= 3000; ++n) z.push_back({n * kPi, eta});
  const HadamardModel m = hadamard_build(with_origin(z, 1), {Coefficient::C1, 5.0});
  const CharFn cf(make_problem(1.0, 2.0, 0.0, 3.0, 0.0, Potential::zero(1.0)));
  for (double x = -5.0; x <= 5.0; x += 0.37) {
    const Complex want = -kI * cf.value(CharKind::Plus, x);
    CHECK(std::abs(m.evaluate(x) - want) <= 1e-3 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("property: without the tail, doubling N shrinks the error") {
  HadamardOptions opt;
  opt.lattice_tail = false;
  opt.n_min_exp = 3;
  double previous = INFINITY;
  for (long n : {500L, 1000L, 2000L, 4000L}) {
    const HadamardModel m = hadamard_build(with_origin(lattice(kPi / 2, n), 1), {Coefficient::C1, 1.0}, opt);
    double err = 0.0;
    for (double x : {0.5, 1.0, 2.0}) err = std::max(err, std::abs(m.evaluate(x) - x * std::cos(x)));
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("hadamard_build errors") {
  CHECK_THROWS_CODE(hadamard_build(with_origin(lattice(kPi / 2, 20), 1), {Coefficient::C1, 1.0}),
                    ErrorCode::LimitNotConverged);
  std::vector<Complex> right;
  for (long k = 1; k < 500; ++k) right.push_back(k * kPi);
  CHECK_THROWS_CODE(hadamard_build(make_zero_set(right), {Coefficient::C1, 1.0}), ErrorCode::InvalidArgument);
  CHECK_THROWS_CODE(hadamard_build(with_origin(lattice(kPi / 2, 500), 1), {Coefficient::C1, 0.0}),
                    ErrorCode::InvalidArgument);
  // Wrong coefficient scale for the samples: a perturbed lattice whose limits drift.
  std::vector<Complex> drift;
  for (long k = -3000; k <= 3000; ++k) drift.push_back((k + 0.5) * kPi * (1.0 + 0.3 / std::sqrt(std::abs(k) + 1.0)));
  HadamardOptions strict;
  strict.tolerance = 1e-12;
  CHECK_THROWS_CODE(hadamard_build(with_origin(drift, 1), {Coefficient::C1, 1.0}, strict),
                    ErrorCode::LimitNotConverged);
}

TEST_CASE("even_delta_minus") {
  const CharFn cf(kEvenZero);
  const auto dm = even_delta_minus(cf.fn(CharKind::Plus), 2.0, 1.0, 12.0);
  CHECK(near((*dm)(0.0), 3.0, 1e-12));
  CHECK(near((*dm)(kPi), -2.0, 1e-9));
  const ReggeProblem zero_origin = make_problem(1.0, 2.0, 0.0, 2.0, 0.0, Potential::zero(1.0));
  CHECK_THROWS_CODE(even_delta_minus(CharFn(zero_origin).fn(CharKind::Plus), 2.0, 1.0, 5.0),
                    ErrorCode::ZeroAtOrigin);
}

TEST_CASE("property: even_delta_minus matches the direct Delta- and its defining relation") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 3; ++trial) {
    std::uniform_real_distribution<double> u(-3.0, 3.0), pos(0.3, 3.0);
    std::vector<Complex> half(7);
    for (auto& v : half) v = u(rng);
    std::vector<Complex> samples = half;
    for (int i = 5; i >= 0; --i) samples.push_back(half[std::size_t(i)]);  // symmetric about a/2
    const double alpha = pos(rng), beta = u(rng);
    const ReggeProblem p = make_problem(1.0, alpha, beta, alpha, beta, Potential::grid(samples, 1.0));
    const CharFn cf(p);
    const auto dm = even_delta_minus(cf.fn(CharKind::Plus), alpha, 1.0, 10.0);
    for (double x = 0.0; x <= 10.0; x += 0.61) {
      const Complex got = (*dm)(x);
      const Complex direct = cf.value(CharKind::Minus, x);
      CHECK(std::abs(got - direct) <= 1e-7 * std::max(1.0, std::abs(direct)));
      const Complex rel = got * got + 4.0 * alpha * alpha * x * x -
                          cf.value(CharKind::Plus, x) * cf.value(CharKind::Plus, -x);
      CHECK(std::abs(rel) <= 1e-8 * std::max(1.0, std::abs(got * got)));
    }
  }
}

TEST_CASE("reconstructed Delta- zeros match the direct spectrum") {
  const ReggeProblem p = make_problem(1.0, 2.0, 1.0, 2.0, 1.0, Potential::constant(1.0, 1.0));
  const CharFn cf(p);
  const auto dm = even_delta_minus(cf.fn(CharKind::Plus), 2.0, 1.0, 10.0);
  const ComplexFn dmf = [dm](Complex z) { return (*dm)(z); };
  const Rectangle r{-9.1, 9.3, -1.7, 2.2};
  // Near its zeros the square-root route keeps only about half the digits.
  const Spectrum got = find_zeros(dmf, {}, r, 1e-5);
  const Spectrum want = find_zeros(cf.fn(CharKind::Minus), cf.dfn(CharKind::Minus), r, 1e-10);
  REQUIRE(got.entries.size() == want.entries.size());
  CHECK(want.entries.size() >= 5);
  for (std::size_t i = 0; i < got.entries.size(); ++i) {
    CHECK(std::abs(got.entries[i].lambda - want.entries[i].lambda) <= 1e-6);
  }
}

TEST_CASE("delta0_from_pair") {
  const CharFn even(kEvenZero);
  const ComplexFn dp = even.fn(CharKind::Plus), dm = even.fn(CharKind::Minus);
  CHECK(near(delta0_from_pair(dp, dm, 2.0, kPi), -1.0, 1e-10));
  const CharFn closed(make_problem(1.0, 2.0, 0.0, 3.0, 0.0, Potential::zero(1.0)));
  CHECK(near(delta0_from_pair(closed.fn(CharKind::Plus), closed.fn(CharKind::Minus), 3.0, kPi / 2), Complex(0, 2),
             1e-10));

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const ReggeProblem p = make_problem(1.0, 1.5, 0.2, 2.5, -0.7, testing::random_grid(rng, 1.0, false));
    const CharFn cf(p);
    const ComplexFn fp = cf.fn(CharKind::Plus), fm = cf.fn(CharKind::Minus);
    const Complex at0 = delta_zero(p, 0.0);
    CHECK(std::abs(delta0_from_pair(fp, fm, 2.5, 0.0) - at0) <= 1e-6 * std::max(1.0, std::abs(at0)));
    for (int i = 0; i < 5; ++i) {
      const Complex l = testing::random_in_disc(rng, 8.0);
      const Complex want = delta_zero(p, l);
      CHECK(std::abs(delta0_from_pair(fp, fm, 2.5, l) - want) <= 1e-6 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("two_spectra_robin") {
  const CharFn even(kEvenZero);
  CHECK(near(two_spectra_robin(even.fn(CharKind::Plus), even.fn(CharKind::Minus), kPi), Complex(-2, -2 * kPi),
             1e-9));
  const ReggeProblem closed = make_problem(1.0, 2.0, 0.0, 3.0, 0.0, Potential::zero(1.0));
  const CharFn cf(closed);
  CHECK(near(two_spectra_robin(cf.fn(CharKind::Plus), cf.fn(CharKind::Minus), kPi / 2), -kPi / 2, 1e-10));

  const ReggeProblem p = make_problem(1.0, 2.0, 0.5, 3.0, -1.0, Potential::constant(2.0, 1.0));
  const CharFn c2(p);
  const ComplexFn dp = c2.fn(CharKind::Plus), dm = c2.fn(CharKind::Minus);
  const Rectangle r{-10.2, 10.1, -2.3, 2.4};
  const Spectrum got = find_zeros([&](Complex z) { return two_spectra_robin(dp, dm, z); }, {}, r, 1e-10);
  const Spectrum want = find_zeros(c2.fn(CharKind::Robin), c2.dfn(CharKind::Robin), r, 1e-10);
  REQUIRE(got.entries.size() == want.entries.size());
  for (std::size_t i = 0; i < got.entries.size(); ++i) {
    CHECK(std::abs(got.entries[i].lambda - want.entries[i].lambda) <= 1e-8);
  }
}

TEST_CASE("sign_disambiguate") {
  const ZeroSet a = sign_disambiguate({{1, 1}, 2.0}, {1, 0});
  REQUIRE(a.zeros.size() == 2);
  CHECK(a.zeros[0].first == Complex(1, 1));
  CHECK(a.zeros[1].first == Complex(2, 0));
  const ZeroSet b = sign_disambiguate({{1, 1}, 2.0}, {-1, 0});
  CHECK(b.zeros[0].first == Complex(1, -1));
  CHECK_THROWS_CODE(sign_disambiguate({{1, 1}}, {1, 1}), ErrorCode::MisalignedInput);
  CHECK_THROWS_CODE(sign_disambiguate({{1, 1}}, {2}), ErrorCode::InvalidArgument);
}

TEST_CASE("sign_disambiguate round trip through g zeros") {
  const ReggeProblem p = make_problem(1.0, 2.0, 0.5, 3.0, -5.0, Potential::constant(1.0, 1.0));
  const CharFn cf(p);
  const ComplexFn dm = cf.fn(CharKind::Minus);
  const Spectrum direct = find_zeros(dm, cf.dfn(CharKind::Minus), {-9.3, 9.1, -3.3, 3.2}, 1e-10);
  REQUIRE(direct.entries.size() >= 5);
  std::vector<Complex> upper;
  std::vector<int> signs;
  for (const SpectrumEntry& e : direct.entries) {
    const Complex l = e.lambda;
    const int s = std::abs(l.imag()) < 1e-12 ? 0 : (l.imag() > 0 ? 1 : -1);
    const Complex xi = s < 0 ? std::conj(l) : l;
    // xi is a zero of g(l) = Delta-(l) Delta-(-l) in the closed upper half-plane.
    CHECK(xi.imag() >= 0.0);
    CHECK(std::abs(dm(xi) * dm(-xi)) <= 1e-6 * std::max(1.0, std::abs(dm(-xi))));
    upper.push_back(xi);
    signs.push_back(s);
  }
  const ZeroSet back = sign_disambiguate(upper, signs);
  REQUIRE(back.total() == direct.entries.size());
  for (std::size_t i = 0; i < direct.entries.size(); ++i) {
    CHECK(back.zeros[i].first == direct.entries[i].lambda);
  }
}
