#include "regge/special.hpp"

#include <cmath>

namespace regge {

namespace {

constexpr double kShift = 10.0;

// Stirling series for log Gamma, valid for Re z >= kShift.
Complex log_gamma_stirling(Complex z) {
  static constexpr double kB[] = {1.0 / 12.0,    -1.0 / 360.0,   1.0 / 1260.0,
                                  -1.0 / 1680.0, 1.0 / 1188.0,   -691.0 / 360360.0,
                                  1.0 / 156.0,   -3617.0 / 122400.0};
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex sum{};
  Complex pw = inv;
  for (double b : kB) {
    sum += b * pw;
    pw *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + sum;
}

Complex digamma_asymptotic(Complex z) {
  static constexpr double kB[] = {1.0 / 12.0,   -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
                                  1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0};
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex sum{};
  Complex pw = inv2;
  for (double b : kB) {
    sum += b * pw;
    pw *= inv2;
  }
  return std::log(z) - 0.5 * inv - sum;
}

}  // namespace

Complex log_gamma(Complex z) {
  // lnGamma(z) = lnGamma(z + n) - sum_{k<n} ln(z + k); summing principal
  // logs keeps the result continuous in the right half-plane.
  Complex correction{};
  while (z.real() < kShift) {
    correction += std::log(z);
    z += 1.0;
  }
  return log_gamma_stirling(z) - correction;
}

Complex digamma(Complex z) {
  Complex correction{};
  while (z.real() < kShift) {
    correction += 1.0 / z;
    z += 1.0;
  }
  return digamma_asymptotic(z) - correction;
}

}  // namespace regge
