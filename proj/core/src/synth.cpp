#include "circletik/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "circletik/error.hpp"
#include "circletik/rng.hpp"

namespace circletik {

namespace {

void check_std(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCategory::invalid_input,
                std::string(what) + " must be finite and nonnegative");
  }
}

// Catmull-Rom cubic through p1 and p2, t in [0, 1].
double catmull_rom(double p0, double p1, double p2, double p3, double t) {
  const double a = -p0 + 3.0 * p1 - 3.0 * p2 + p3;
  const double b = 2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3;
  const double c = -p0 + p2;
  return 0.5 * (2.0 * p1 + t * (c + t * (b + t * a)));
}

double control_at(const std::vector<double>& control, std::size_t g,
                  std::int64_t i, std::int64_t j) {
  i = std::clamp<std::int64_t>(i, 0, static_cast<std::int64_t>(g) - 1);
  j = std::clamp<std::int64_t>(j, 0, static_cast<std::int64_t>(g) - 1);
  return control[static_cast<std::size_t>(i) * g +
                 static_cast<std::size_t>(j)];
}

double bicubic(const std::vector<double>& control, std::size_t g, double u,
               double v) {
  const std::int64_t iu = static_cast<std::int64_t>(std::floor(u));
  const std::int64_t iv = static_cast<std::int64_t>(std::floor(v));
  const double fu = u - static_cast<double>(iu);
  const double fv = v - static_cast<double>(iv);
  double rows[4];
  for (std::int64_t k = -1; k <= 2; ++k) {
    rows[k + 1] = catmull_rom(control_at(control, g, iu + k, iv - 1),
                              control_at(control, g, iu + k, iv),
                              control_at(control, g, iu + k, iv + 1),
                              control_at(control, g, iu + k, iv + 2), fv);
  }
  return catmull_rom(rows[0], rows[1], rows[2], rows[3], fu);
}

}  // namespace

SyntheticPair gen_1d(const SyntheticSpec1D& spec) {
  if (spec.n < 2) {
    throw Error(ErrorCategory::invalid_size, "need at least 2 samples");
  }
  check_std(spec.increment_std, "increment std");
  check_std(spec.noise_std, "noise std");
  if (!std::isfinite(spec.initial_angle)) {
    throw Error(ErrorCategory::invalid_input, "initial angle must be finite");
  }

  GaussianSampler rng(spec.seed);
  std::vector<double> omega(spec.n);
  omega[0] = spec.initial_angle;
  for (std::size_t n = 1; n < spec.n; ++n) {
    omega[n] = omega[n - 1] + spec.increment_std * rng.gaussian();
  }
  std::vector<double> alpha(spec.n);
  for (std::size_t n = 0; n < spec.n; ++n) {
    alpha[n] = omega[n] + spec.noise_std * rng.gaussian();
  }
  return {CircleSignal::from_angles(omega), CircleSignal::from_angles(alpha)};
}

SyntheticPair gen_2d(const SyntheticSpec2D& spec) {
  if (spec.control_grid < 2) {
    throw Error(ErrorCategory::invalid_size, "control grid needs >= 2 rows");
  }
  if (spec.height < spec.control_grid || spec.width < spec.control_grid) {
    throw Error(ErrorCategory::invalid_size,
                "image must be at least as large as the control grid");
  }
  check_std(spec.control_std, "control std");
  check_std(spec.noise_std, "noise std");

  GaussianSampler rng(spec.seed);
  const std::size_t g = spec.control_grid;
  std::vector<double> control(g * g);
  for (double& v : control) v = spec.control_std * rng.gaussian();

  std::vector<double> omega(spec.height * spec.width);
  const double su = spec.height > 1 ? static_cast<double>(g - 1) /
                                          static_cast<double>(spec.height - 1)
                                    : 0.0;
  const double sv = spec.width > 1 ? static_cast<double>(g - 1) /
                                         static_cast<double>(spec.width - 1)
                                   : 0.0;
  for (std::size_t i = 0; i < spec.height; ++i) {
    for (std::size_t j = 0; j < spec.width; ++j) {
      omega[i * spec.width + j] =
          bicubic(control, g, su * static_cast<double>(i),
                  sv * static_cast<double>(j));
    }
  }
  std::vector<double> alpha(omega.size());
  for (std::size_t p = 0; p < omega.size(); ++p) {
    alpha[p] = omega[p] + spec.noise_std * rng.gaussian();
  }
  return {CircleSignal::from_angles(omega), CircleSignal::from_angles(alpha)};
}

}  // namespace circletik
