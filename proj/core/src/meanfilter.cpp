#include "circletik/meanfilter.hpp"

#include <cmath>
#include <cstdint>

#include "circletik/error.hpp"

namespace circletik {

namespace {

// Half-sample symmetric index: ... 2 1 0 | 0 1 2 ... n-1 | n-1 n-2 ...
std::size_t reflect(std::int64_t i, std::int64_t n) {
  while (i < 0 || i >= n) {
    if (i < 0) i = -1 - i;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return static_cast<std::size_t>(i);
}

std::vector<double> gaussian_taps(double std_dev) {
  if (std_dev < 0.5) return {1.0};
  const std::int64_t radius = static_cast<std::int64_t>(std::ceil(4.0 * std_dev));
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (std::int64_t t = -radius; t <= radius; ++t) {
    const double v = std::exp(-0.5 * (t * t) / (std_dev * std_dev));
    taps[t + radius] = v;
    sum += v;
  }
  for (double& v : taps) v /= sum;
  return taps;
}

void convolve_rows(std::size_t height, std::size_t width,
                   const std::vector<double>& taps, const ComplexVec& in,
                   ComplexVec& out) {
  const std::int64_t radius = static_cast<std::int64_t>(taps.size() / 2);
  const std::int64_t w = static_cast<std::int64_t>(width);
  for (std::size_t r = 0; r < height; ++r) {
    const Complex* row = &in[r * width];
    for (std::int64_t c = 0; c < w; ++c) {
      Complex acc{0.0, 0.0};
      for (std::int64_t t = -radius; t <= radius; ++t) {
        acc += taps[t + radius] * row[reflect(c + t, w)];
      }
      out[r * width + c] = acc;
    }
  }
}

void convolve_cols(std::size_t height, std::size_t width,
                   const std::vector<double>& taps, const ComplexVec& in,
                   ComplexVec& out) {
  const std::int64_t radius = static_cast<std::int64_t>(taps.size() / 2);
  const std::int64_t h = static_cast<std::int64_t>(height);
  for (std::int64_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      Complex acc{0.0, 0.0};
      for (std::int64_t t = -radius; t <= radius; ++t) {
        acc += taps[t + radius] * in[reflect(r + t, h) * width + c];
      }
      out[r * width + c] = acc;
    }
  }
}

}  // namespace

FilterResult circular_mean_filter(std::size_t height, std::size_t width,
                                  const ComplexVec& y, double kernel_std) {
  if (height < 1 || width < 1) {
    throw Error(ErrorCategory::invalid_size, "image must be nonempty");
  }
  if (y.size() != height * width) {
    throw Error(ErrorCategory::dimension_mismatch,
                "pixel count does not match height x width");
  }
  if (!(kernel_std > 0.0) || !std::isfinite(kernel_std)) {
    throw Error(ErrorCategory::invalid_input,
                "kernel std must be positive and finite");
  }

  const std::vector<double> taps = gaussian_taps(kernel_std);
  FilterResult out;
  ComplexVec tmp(y.size());
  out.filtered.resize(y.size());
  convolve_rows(height, width, taps, y, tmp);
  convolve_cols(height, width, taps, tmp, out.filtered);
  out.x = CircleSignal::project(out.filtered, out.degenerate);
  return out;
}

}  // namespace circletik
