#pragma once

#include <doctest.h>

#include <random>

#include "regge/error.hpp"
#include "regge/model.hpp"

// Passes when expr throws regge::Error with the given code.
#define CHECK_THROWS_CODE(expr, expected)                          \
  do {                                                             \
    bool thrown_ = false;                                          \
    try {                                                          \
      (void)(expr);                                                \
    } catch (const regge::Error& e_) {                             \
      thrown_ = true;                                              \
      CHECK_MESSAGE(e_.code() == (expected), regge::to_string(e_.code())); \
    }                                                              \
    CHECK_MESSAGE(thrown_, "no regge::Error thrown");              \
  } while (0)

namespace testing {

inline regge::Potential random_grid(std::mt19937_64& rng, double a, bool real, int lo = 9,
                                    int hi = 41, double amp = 4.0) {
  std::uniform_int_distribution<int> count(lo, hi);
  std::uniform_real_distribution<double> u(-amp, amp);
  std::vector<regge::Complex> s(static_cast<std::size_t>(count(rng)));
  for (auto& v : s) v = real ? regge::Complex(u(rng), 0.0) : regge::Complex(u(rng), u(rng));
  return regge::Potential::grid(s, a);
}

inline regge::Complex random_in_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const regge::Complex z(u(rng), u(rng));
    if (std::abs(z) <= 1.0) return radius * z;
  }
}

inline bool near(regge::Complex a, regge::Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace testing
