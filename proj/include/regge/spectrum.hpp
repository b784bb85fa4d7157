#pragma once

#include <optional>
#include <vector>

#include "regge/model.hpp"

namespace regge {

struct Rectangle {
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;

  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
  bool contains(Complex z, double slack = 0.0) const {
    return z.real() >= re_min - slack && z.real() <= re_max + slack &&
           z.imag() >= im_min - slack && z.imag() <= im_max + slack;
  }
};

/// Throws InvalidArgument unless the rectangle has positive width and height.
void check_rectangle(const Rectangle& r);

struct SpectrumEntry {
  long k = 0;
  Complex lambda{};
  int multiplicity = 1;
  double residual = 0.0;
};

struct Spectrum {
  std::vector<SpectrumEntry> entries;
  std::optional<Sign> sign;
  Rectangle region;
  bool indexed = false;

  std::vector<Complex> values() const;
};

/// Strict ordering by real part, then imaginary part, treating real parts
/// within 1e-9 (1 + |z|) as equal.
bool spectral_less(Complex a, Complex b);
void sort_entries(std::vector<SpectrumEntry>& entries);

}  // namespace regge
