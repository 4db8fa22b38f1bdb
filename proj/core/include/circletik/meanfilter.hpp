#pragma once

#include <cstddef>
#include <vector>

#include "circletik/circle.hpp"

namespace circletik {

struct FilterResult {
  ComplexVec filtered;          // weighted averages before renormalization
  CircleSignal x;               // per-pixel renormalization
  std::vector<bool> degenerate; // pixels whose average had no direction
};

// Separable Gaussian average of the complex pixel values followed by
// renormalization (pointwise circular mean under a Gaussian window).
// The kernel is sampled at integer offsets, truncated at radius
// ceil(4 kernel_std) and renormalized to unit sum; kernel_std < 0.5
// degenerates to the identity kernel. Borders use half-sample symmetric
// extension. Input is row major height x width.
FilterResult circular_mean_filter(std::size_t height, std::size_t width,
                                  const ComplexVec& y, double kernel_std);

}  // namespace circletik
