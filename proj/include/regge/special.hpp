#pragma once

#include "regge/model.hpp"

namespace regge {

/// Principal-branch-continuous log Gamma for complex arguments away from the
/// non-positive real axis (Re z > 0 is all the library needs).
Complex log_gamma(Complex z);

/// Digamma function psi(z) = Gamma'(z) / Gamma(z) for Re z > 0.
Complex digamma(Complex z);

}  // namespace regge
