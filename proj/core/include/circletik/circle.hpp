#pragma once

#include <complex>
#include <vector>

namespace circletik {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

// Moduli below this have no usable direction; projecting such a value onto
// the circle falls back to 1+0i and raises the degenerate flag.
inline constexpr double kDegenerateTol = 1e-12;

// Tolerance for "lies on the unit circle" validation.
inline constexpr double kCircleTol = 1e-9;

// Principal argument in (-pi, pi]; the branch cut maps to +pi, so
// arg(-1) = +pi. Throws undefined-argument for z = 0.
double arg_principal(Complex z);

struct CircleProjection {
  Complex point{1.0, 0.0};
  bool degenerate = false;
};

// z / |z| for usable z, otherwise the degenerate fallback above.
CircleProjection project_to_circle(Complex z);

// Finite vector of unit modulus complex values.
class CircleSignal {
 public:
  CircleSignal() = default;

  // Validates |v_n| = 1 within kCircleTol.
  explicit CircleSignal(ComplexVec values);

  static CircleSignal from_angles(const std::vector<double>& angles);

  // Renormalizes each entry; degenerate entries fall back to 1+0i.
  static CircleSignal project(const ComplexVec& values);
  static CircleSignal project(const ComplexVec& values,
                              std::vector<bool>& degenerate);

  std::size_t size() const { return values_.size(); }
  const ComplexVec& values() const { return values_; }
  Complex operator[](std::size_t n) const { return values_[n]; }
  std::vector<double> angles() const;

 private:
  struct Unchecked {};
  CircleSignal(ComplexVec values, Unchecked) : values_(std::move(values)) {}

  ComplexVec values_;
};

// Weighted circular mean: the projection of sum_n w_n y_n onto the circle.
// Weights must be nonnegative and finite with at least one positive entry;
// a vanishing weighted sum comes back flagged degenerate.
CircleProjection circular_mean(const ComplexVec& points,
                               const std::vector<double>& weights);

// z -> z^2 maps antipodal pairs (orientations) to single circle points.
ComplexVec orientation_double(const ComplexVec& values);

// Principal square root e^{i arg(z)/2}, the inverse of the doubling map up
// to sign; results have argument in (-pi/2, pi/2].
CircleSignal orientation_halve(const CircleSignal& values);

}  // namespace circletik
