#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace circletik {

// Deterministic Gaussian stream, fully specified so that a reimplementation
// can reproduce test fixtures bit for bit: mt19937_64 raw draws are mapped
// to 53-bit uniforms and fed to the polar Box-Muller transform
//
//   u1 = (draw >> 11) * 2^-53 + 2^-53   in (0, 1]
//   u2 = (draw >> 11) * 2^-53           in [0, 1)
//   z0 = sqrt(-2 ln u1) cos(2 pi u2),  z1 = sqrt(-2 ln u1) sin(2 pi u2),
//
// returning z0 then the cached z1. std::normal_distribution is avoided on
// purpose: its draw sequence is implementation defined.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 =
        static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    spare_ = mag * std::sin(ang);
    has_spare_ = true;
    return mag * std::cos(ang);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace circletik
