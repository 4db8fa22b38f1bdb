#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "circletik/baseline.hpp"
#include "circletik/error.hpp"
#include "circletik/rng.hpp"

using namespace circletik;
using std::numbers::pi;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("baseline interpolation is linear in the plane") {
  const std::size_t n = 10;
  ComplexVec y(n, Complex{1.0, 0.0});
  std::vector<double> w(n, 0.0);
  y[0] = std::polar(1.0, -1.0);
  y[9] = std::polar(1.0, 2.0);
  w[0] = kInf;
  w[9] = kInf;
  const ProblemInstance inst(Graph::chain(n), y, w,
                             std::vector<double>(n - 1, 1.0));
  const BaselineResult res = solve_baseline(inst);

  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / 9.0;
    const Complex expected = (1.0 - t) * y[0] + t * y[9];
    CHECK(std::abs(res.x_unconstrained[i] - expected) <= 1e-9);
  }
  // The chord shrinks inside the circle, so renormalization moves interior
  // nodes and the rounded cost exceeds the geodesic value.
  CHECK(res.psi_orig > 9.0 * (1.0 - std::cos(1.0 / 3.0)));
}

TEST_CASE("baseline with no smoothing returns the observations") {
  GaussianSampler rng(9);
  const std::size_t n = 7;
  ComplexVec y(n);
  for (Complex& v : y) v = Complex{rng.gaussian(), rng.gaussian()};
  const ProblemInstance inst(Graph::chain(n), y, std::vector<double>(n, 2.0),
                             std::vector<double>(n - 1, 0.0));
  const BaselineResult res = solve_baseline(inst);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(res.x_unconstrained[i] - y[i]) <= 1e-12);
  }
}

TEST_CASE("baseline keeps constants fixed") {
  const Complex c = std::polar(1.0, 0.4);
  const std::size_t n = 6;
  const ProblemInstance inst(Graph::grid(2, 3), ComplexVec(n, c),
                             std::vector<double>(n, 1.0),
                             std::vector<double>(7, 3.0));
  const BaselineResult res = solve_baseline(inst);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(res.x_unconstrained[i] - c) <= 1e-12);
    CHECK(std::abs(res.x_rounded[i] - c) <= 1e-12);
  }
  CHECK(res.psi_orig == doctest::Approx(0.0));
}

TEST_CASE("baseline solution stays in the convex hull of the data") {
  // With |y_n| <= 1 the averaging system cannot leave the unit disc.
  GaussianSampler rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 8;
    ComplexVec y(n);
    std::vector<double> w(n), lam(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = std::polar(rng.uniform(), pi * (2.0 * rng.uniform() - 1.0));
      w[i] = 0.05 + 2.0 * rng.uniform();
    }
    for (double& l : lam) l = 3.0 * rng.uniform();
    const ProblemInstance inst(Graph::chain(n), y, w, lam);
    const BaselineResult res = solve_baseline(inst);
    for (const Complex& x : res.x_unconstrained) {
      CHECK(std::abs(x) <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("baseline flags directionless averages") {
  // Symmetric antipodal data with equal pull leaves the middle node at 0.
  const Graph g = Graph::chain(3);
  const ProblemInstance inst(
      g, {Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{-1.0, 0.0}},
      {kInf, 0.0, kInf}, {1.0, 1.0});
  const BaselineResult res = solve_baseline(inst);
  CHECK(std::abs(res.x_unconstrained[1]) <= 1e-12);
  CHECK(res.degenerate[1]);
  CHECK(res.x_rounded[1] == Complex{1.0, 0.0});
}

TEST_CASE("baseline error cases") {
  const Graph g = Graph::chain(3);
  // Nothing anchors the system.
  const ProblemInstance all_zero(g, ComplexVec(3, Complex{1.0, 0.0}),
                                 std::vector<double>(3, 0.0),
                                 std::vector<double>(2, 1.0));
  CHECK_THROWS_AS(solve_baseline(all_zero), Error);

  // A zero-weight edge cuts the free half from all data: singular system.
  const ProblemInstance cut(g, ComplexVec(3, Complex{1.0, 0.0}),
                            {1.0, 0.0, 0.0}, {0.0, 1.0});
  try {
    solve_baseline(cut);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::singular_system);
  }
}
