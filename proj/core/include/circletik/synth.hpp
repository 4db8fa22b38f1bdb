#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "circletik/circle.hpp"

namespace circletik {

// 1-D phase random walk: omega_0 = initial_angle,
// omega_n = omega_{n-1} + increment_std * g_n, then per-node phase noise
// alpha_n = omega_n + noise_std * h_n. Draw order: the n-1 increments
// first, then the n noise samples.
struct SyntheticSpec1D {
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  double initial_angle = 1.0;
  double increment_std = 0.1;
  double noise_std = std::sqrt(50.0) / 10.0;
};

// 2-D smooth phase: a control_grid x control_grid panel of Gaussian control
// phases (std control_std, drawn row major) is upsampled to height x width
// with Catmull-Rom bicubic interpolation (edge rows and columns clamped),
// then per-pixel phase noise of std noise_std is added, drawn row major
// after all control draws.
struct SyntheticSpec2D {
  std::size_t height = 97;
  std::size_t width = 97;
  std::uint64_t seed = 0;
  std::size_t control_grid = 4;
  double control_std = 2.0;
  double noise_std = 0.5;
};

struct SyntheticPair {
  CircleSignal ground_truth;
  CircleSignal noisy;
};

SyntheticPair gen_1d(const SyntheticSpec1D& spec);
SyntheticPair gen_2d(const SyntheticSpec2D& spec);

}  // namespace circletik
