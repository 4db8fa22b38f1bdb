#include "circletik/circle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "circletik/error.hpp"

namespace circletik {

double arg_principal(Complex z) {
  if (z.real() == 0.0 && z.imag() == 0.0) {
    throw Error(ErrorCategory::undefined_argument,
                "argument of 0 is undefined");
  }
  double a = std::arg(z);
  // std::arg(x - 0i) returns -pi on the negative real axis; fold onto +pi.
  if (a == -std::numbers::pi) a = std::numbers::pi;
  return a;
}

CircleProjection project_to_circle(Complex z) {
  const double m = std::abs(z);
  if (m < kDegenerateTol) {
    return {Complex{1.0, 0.0}, true};
  }
  return {z / m, false};
}

CircleSignal::CircleSignal(ComplexVec values) : values_(std::move(values)) {
  for (std::size_t n = 0; n < values_.size(); ++n) {
    if (std::abs(std::abs(values_[n]) - 1.0) > kCircleTol) {
      throw Error(ErrorCategory::invalid_input,
                  "value off the unit circle at index " + std::to_string(n));
    }
  }
}

CircleSignal CircleSignal::from_angles(const std::vector<double>& angles) {
  ComplexVec v(angles.size());
  for (std::size_t n = 0; n < angles.size(); ++n) {
    if (!std::isfinite(angles[n])) {
      throw Error(ErrorCategory::invalid_input,
                  "non-finite angle at index " + std::to_string(n));
    }
    v[n] = std::polar(1.0, angles[n]);
  }
  return CircleSignal(std::move(v), Unchecked{});
}

CircleSignal CircleSignal::project(const ComplexVec& values) {
  std::vector<bool> ignored;
  return project(values, ignored);
}

CircleSignal CircleSignal::project(const ComplexVec& values,
                                   std::vector<bool>& degenerate) {
  ComplexVec v(values.size());
  degenerate.assign(values.size(), false);
  for (std::size_t n = 0; n < values.size(); ++n) {
    const CircleProjection p = project_to_circle(values[n]);
    v[n] = p.point;
    degenerate[n] = p.degenerate;
  }
  return CircleSignal(std::move(v), Unchecked{});
}

std::vector<double> CircleSignal::angles() const {
  std::vector<double> a(values_.size());
  for (std::size_t n = 0; n < values_.size(); ++n) {
    a[n] = arg_principal(values_[n]);
  }
  return a;
}

CircleProjection circular_mean(const ComplexVec& points,
                               const std::vector<double>& weights) {
  if (points.empty()) {
    throw Error(ErrorCategory::invalid_input, "circular mean of nothing");
  }
  if (points.size() != weights.size()) {
    throw Error(ErrorCategory::dimension_mismatch,
                "points and weights differ in length");
  }
  Complex sum{0.0, 0.0};
  bool any_positive = false;
  for (std::size_t n = 0; n < points.size(); ++n) {
    if (!(weights[n] >= 0.0) || !std::isfinite(weights[n])) {
      throw Error(ErrorCategory::invalid_input,
                  "circular mean weights must be finite and nonnegative");
    }
    if (weights[n] > 0.0) any_positive = true;
    sum += weights[n] * points[n];
  }
  if (!any_positive) {
    throw Error(ErrorCategory::invalid_input,
                "circular mean needs a positive weight");
  }
  return project_to_circle(sum);
}

ComplexVec orientation_double(const ComplexVec& values) {
  ComplexVec out(values.size());
  for (std::size_t n = 0; n < values.size(); ++n) {
    out[n] = values[n] * values[n];
  }
  return out;
}

CircleSignal orientation_halve(const CircleSignal& values) {
  std::vector<double> half(values.size());
  for (std::size_t n = 0; n < values.size(); ++n) {
    half[n] = 0.5 * arg_principal(values[n]);
  }
  return CircleSignal::from_angles(half);
}

}  // namespace circletik
