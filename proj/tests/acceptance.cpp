// Acceptance gate for the library: every shipped guarantee is exercised end
// to end and reported as exactly one PASS/FAIL line. The binary exits with
// the number of failed criteria, so ctest treats any red line as a failure.
//
// Expected runtime is a few minutes on one core; the 2-D study dominates.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <exception>
#include <filesystem>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "circletik/baseline.hpp"
#include "circletik/circle.hpp"
#include "circletik/graph.hpp"
#include "circletik/lifting.hpp"
#include "circletik/oracle.hpp"
#include "circletik/problem.hpp"
#include "circletik/rng.hpp"
#include "circletik/sigio.hpp"
#include "circletik/solver.hpp"
#include "circletik/synth.hpp"

namespace {

using namespace circletik;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, ...) {
  char buf[768];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

double angular_error(Complex a, Complex b) {
  return std::abs(std::arg(a * std::conj(b)));
}

ComplexVec random_phases(std::size_t n, GaussianSampler& rng) {
  ComplexVec y(n);
  for (Complex& v : y) v = std::polar(1.0, -kPi + 2.0 * kPi * rng.uniform());
  return y;
}

// Random tree: node i >= 1 attaches to a uniform earlier node.
Graph attachment_tree(std::size_t n, GaussianSampler& rng) {
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::uint32_t i = 1; i < n; ++i) {
    const auto j = static_cast<std::uint32_t>(rng.uniform() * i);
    edges.push_back({j, i});
  }
  return Graph(n, edges);
}

Hermitian3 random_block(GaussianSampler& rng) {
  Hermitian3 b;
  b.d0 = rng.gaussian();
  b.d1 = rng.gaussian();
  b.d2 = rng.gaussian();
  b.l10 = {rng.gaussian(), rng.gaussian()};
  b.l20 = {rng.gaussian(), rng.gaussian()};
  b.l21 = {rng.gaussian(), rng.gaussian()};
  return b;
}

double trace(const Hermitian3& a) { return a.d0 + a.d1 + a.d2; }

// ---------------------------------------------------------------------------
// 1. The 10-node endpoint interpolation problem has the geodesic as its
//    closed-form solution; the relaxation must recover it exactly (tight
//    certificate, max angular error 1e-6) within 10 seconds, and the
//    unconstrained baseline must return the planar chord interpolation.

Verdict geodesic_interpolation() {
  const std::size_t n = 10;
  const Complex left = std::polar(1.0, -1.0);
  const Complex right = std::polar(1.0, 2.0);
  ComplexVec y(n, Complex{0.0, 0.0});
  y.front() = left;
  y.back() = right;
  std::vector<double> w(n, 0.0);
  w.front() = w.back() = kInf;
  const ProblemInstance inst(Graph::chain(n), y, w,
                             std::vector<double>(n - 1, 1.0));

  Stopwatch watch;
  SolverConfig cfg;
  cfg.max_iters = 20000;
  const SolveReport r = solve_relaxation(inst, cfg);
  const double solve_seconds = watch.seconds();

  double solver_err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex target = std::polar(1.0, (static_cast<double>(i) - 3.0) / 3.0);
    solver_err = std::max(solver_err, angular_error(r.x_rounded[i], target));
  }

  const BaselineResult base = solve_baseline(inst);
  double chord_err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / 9.0;
    chord_err = std::max(chord_err,
                         std::abs(base.x_unconstrained[i] -
                                  (t * right + (1.0 - t) * left)));
  }

  const bool pass = solver_err <= 1e-6 && r.certificate.tight &&
                    solve_seconds < 10.0 && chord_err <= 1e-9;
  return {pass,
          fmt("relaxation angle err %.2e (tol 1e-6), tight=%d, %.2fs "
              "(limit 10s); baseline chord err %.2e (tol 1e-9)",
              solver_err, r.certificate.tight ? 1 : 0, solve_seconds,
              chord_err)};
}

// ---------------------------------------------------------------------------
// 2. On random chains (N <= 100) and grids (<= 16x16) with lambda in
//    [0.5, 50] and noise std <= 0.7, the solved relaxation never exceeds the
//    baseline objective or the rounded objective by more than 1e-6, and a
//    tight certificate implies the two objectives agree to 1e-4 relative.

Verdict sandwich_and_certification() {
  Stopwatch watch;
  GaussianSampler rng(8142);
  SolverConfig cfg;
  cfg.max_iters = 20000;

  int tight_count = 0;
  double worst_over_baseline = -kInf;  // psi_conv - psi_baseline, want <= 1e-6
  double worst_over_approx = -kInf;    // psi_conv - psi_approx,   want <= 1e-6
  double worst_tight_gap = 0.0;        // |conv - approx| / max(1, conv)

  for (int k = 0; k < 25; ++k) {
    const double noise = 0.05 + 0.65 * rng.uniform();
    const double lambda = 0.5 * std::pow(100.0, rng.uniform());
    ComplexVec y;
    Graph g = Graph::chain(2);
    if (k % 2 == 0) {
      SyntheticSpec1D spec;
      spec.n = 10 + static_cast<std::size_t>(rng.uniform() * 91.0);
      spec.seed = 9000 + static_cast<std::uint64_t>(k);
      spec.noise_std = noise;
      y = gen_1d(spec).noisy.values();
      g = Graph::chain(spec.n);
    } else {
      SyntheticSpec2D spec;
      spec.height = 4 + static_cast<std::size_t>(rng.uniform() * 13.0);
      spec.width = 4 + static_cast<std::size_t>(rng.uniform() * 13.0);
      spec.seed = 9000 + static_cast<std::uint64_t>(k);
      spec.noise_std = noise;
      y = gen_2d(spec).noisy.values();
      g = Graph::grid(spec.height, spec.width);
    }
    const std::size_t nodes = g.node_count();
    const std::size_t edges = g.edge_count();
    const ProblemInstance inst(std::move(g), std::move(y),
                               std::vector<double>(nodes, 1.0),
                               std::vector<double>(edges, lambda));
    const SolveReport r = solve_relaxation(inst, cfg);
    const BaselineResult base = solve_baseline(inst);

    worst_over_baseline =
        std::max(worst_over_baseline, r.psi_conv_star - base.psi_orig);
    worst_over_approx =
        std::max(worst_over_approx, r.psi_conv_star - r.psi_approx);
    if (r.certificate.tight) {
      ++tight_count;
      worst_tight_gap =
          std::max(worst_tight_gap, std::abs(r.psi_conv_star - r.psi_approx) /
                                        std::max(1.0, r.psi_conv_star));
    }
  }

  const bool pass = worst_over_baseline <= 1e-6 && worst_over_approx <= 1e-6 &&
                    worst_tight_gap <= 1e-4;
  return {pass,
          fmt("25 instances, %d tight; conv-baseline max %.2e, conv-approx "
              "max %.2e (tol 1e-6); tight scaled gap max %.2e (tol 1e-4); "
              "%.1fs",
              tight_count, worst_over_baseline, worst_over_approx,
              worst_tight_gap, watch.seconds())};
}

// ---------------------------------------------------------------------------
// 3. On 20 random tree instances (|V| <= 12) that come back with a tight
//    certificate, the relaxed optimum matches the dynamic-programming
//    oracle at 4096 angular levels within 1e-3 relative, in under 30
//    seconds total. Tightness on trees is typical, not guaranteed: with
//    widely spread observations and strong coupling the relaxation can sit
//    strictly below the true minimum (a frozen example lives in the unit
//    tests), so non-tight draws are skipped and counted here.

Verdict tree_oracle_agreement() {
  Stopwatch watch;
  GaussianSampler rng(31415);
  SolverConfig cfg;
  cfg.max_iters = 30000;

  int tight_count = 0;
  int draws = 0;
  double worst_rel = 0.0;
  bool conv_positive = true;

  while (tight_count < 20 && draws < 80) {
    ++draws;
    const std::size_t n = 4 + static_cast<std::size_t>(rng.uniform() * 9.0);
    Graph g = attachment_tree(n, rng);
    ComplexVec y = random_phases(n, rng);
    std::vector<double> lambda(g.edge_count());
    for (double& l : lambda) l = 0.5 + 4.5 * rng.uniform();
    const ProblemInstance inst(std::move(g), std::move(y),
                               std::vector<double>(n, 1.0), std::move(lambda));

    const SolveReport r = solve_relaxation(inst, cfg);
    if (!r.certificate.tight) continue;
    ++tight_count;
    const OracleResult dp = dp_min_tree(inst, 4096);
    if (r.psi_conv_star <= 0.0) {
      conv_positive = false;
      continue;
    }
    worst_rel = std::max(
        worst_rel, std::abs(dp.psi - r.psi_conv_star) / r.psi_conv_star);
  }

  const double seconds = watch.seconds();
  const bool pass = tight_count == 20 && conv_positive && worst_rel <= 1e-3 &&
                    seconds < 30.0;
  return {pass,
          fmt("%d tight instances from %d draws (need 20); dp vs conv rel "
              "err max %.2e (tol 1e-3); %.1fs (limit 30s)",
              tight_count, draws, worst_rel, seconds)};
}

// ---------------------------------------------------------------------------
// 4. Ten seeds of the default 1-D synthetic study (N=1000, lambda=50,
//    tau=0.1): every run certified tight, converged to a relative step
//    change of 1e-12 within 2000 iterations, and at least as good as the
//    baseline.

Verdict study_1d() {
  Stopwatch watch;
  SolverConfig cfg;
  cfg.tau = 0.1;
  cfg.max_iters = 2000;
  cfg.tol = 1e-12;

  int tight_count = 0;
  int converged_count = 0;
  int beats_baseline = 0;
  int max_iters_seen = 0;

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SyntheticSpec1D spec;
    spec.seed = seed;
    const SyntheticPair data = gen_1d(spec);
    const ProblemInstance inst(Graph::chain(spec.n), data.noisy.values(),
                               std::vector<double>(spec.n, 1.0),
                               std::vector<double>(spec.n - 1, 50.0));
    const SolveReport r = solve_relaxation(inst, cfg);
    const BaselineResult base = solve_baseline(inst);

    if (r.certificate.tight) ++tight_count;
    if (r.final_step_change <= 1e-12) ++converged_count;
    if (r.psi_conv_star <= base.psi_orig) ++beats_baseline;
    max_iters_seen = std::max(max_iters_seen, r.iterations_run);
  }

  const bool pass =
      tight_count == 10 && converged_count == 10 && beats_baseline == 10;
  return {pass,
          fmt("10 seeds: %d tight, %d at step<=1e-12 within 2000 iters "
              "(max %d), %d with conv <= baseline (all need 10); %.1fs",
              tight_count, converged_count, max_iters_seen, beats_baseline,
              watch.seconds())};
}

// ---------------------------------------------------------------------------
// 5. Five seeds of the 32x32 2-D study at noise 0.5 / lambda 5: tight in at
//    least 4 runs and strictly better than the baseline in all 5. At noise
//    1.0 / lambda 10 the relaxation is allowed to fail: at least one run
//    must come back non-tight with a positive reported gap.

Verdict study_2d() {
  Stopwatch watch;
  SolverConfig cfg;
  cfg.max_iters = 8000;

  int tight_low = 0;
  int below_baseline = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SyntheticSpec2D spec;
    spec.height = 32;
    spec.width = 32;
    spec.seed = seed;
    const SyntheticPair data = gen_2d(spec);
    const Graph g = Graph::grid(spec.height, spec.width);
    const std::size_t edges = g.edge_count();
    const ProblemInstance inst(g, data.noisy.values(),
                               std::vector<double>(g.node_count(), 1.0),
                               std::vector<double>(edges, 5.0));
    const SolveReport r = solve_relaxation(inst, cfg);
    const BaselineResult base = solve_baseline(inst);
    if (r.certificate.tight) ++tight_low;
    if (r.psi_conv_star < base.psi_orig) ++below_baseline;
  }

  int nontight_with_gap = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SyntheticSpec2D spec;
    spec.height = 32;
    spec.width = 32;
    spec.seed = seed;
    spec.noise_std = 1.0;
    const SyntheticPair data = gen_2d(spec);
    const Graph g = Graph::grid(spec.height, spec.width);
    const std::size_t edges = g.edge_count();
    const ProblemInstance inst(g, data.noisy.values(),
                               std::vector<double>(g.node_count(), 1.0),
                               std::vector<double>(edges, 10.0));
    const SolveReport r = solve_relaxation(inst, cfg);
    if (!r.certificate.tight && r.relative_gap > 0.0) ++nontight_with_gap;
  }

  const bool pass =
      tight_low >= 4 && below_baseline == 5 && nontight_with_gap >= 1;
  return {pass,
          fmt("noise 0.5: %d/5 tight (need >=4), %d/5 below baseline (need "
              "5); noise 1.0: %d/5 non-tight with gap>0 (need >=1); %.1fs",
              tight_low, below_baseline, nontight_with_gap,
              watch.seconds())};
}

// ---------------------------------------------------------------------------
// 6. Numeric kernels: adjoint identity, NSD projection invariants, the prox
//    optimality inequality and the principal-minor PSD test.

Verdict numeric_kernels() {
  // <L s, Q> == <s, L* Q> over random pairs on assorted topologies.
  const std::vector<Graph> graphs = {Graph::chain(2), Graph::chain(50),
                                     Graph::grid(4, 4), Graph::grid(7, 13),
                                     [] {
                                       GaussianSampler r(4242);
                                       return attachment_tree(30, r);
                                     }()};
  double adjoint_max = 0.0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    adjoint_max = std::max(
        adjoint_max, adjoint_selftest(graphs[i], 555 + i, 100));
  }

  // Projection onto the NSD cone: result is NSD, projecting twice is a
  // no-op, and the residual U - P is the orthogonal PSD part.
  GaussianSampler rng(77);
  double proj_pos_eig = -kInf;
  double proj_idem = 0.0;
  double proj_inner = 0.0;
  double resid_min_eig = kInf;
  for (int t = 0; t < 500; ++t) {
    const Hermitian3 u = random_block(rng);
    const Hermitian3 p = project_nsd(u);
    const Hermitian3 d = u - p;
    proj_pos_eig = std::max(proj_pos_eig, eigenvalues(p)[2]);
    proj_idem = std::max(
        proj_idem, std::sqrt(frobenius_norm_sq(project_nsd(p) - p)));
    proj_inner = std::max(proj_inner, std::abs(frobenius_inner(p, d)));
    resid_min_eig = std::min(resid_min_eig, eigenvalues(d)[0]);
  }
  const bool proj_ok = proj_pos_eig <= 1e-10 && proj_idem <= 1e-10 &&
                       proj_inner <= 1e-10 && resid_min_eig >= -1e-10;

  // prox_dual(U, sigma) minimizes 1/2 |q - U|^2 - sigma tr(q) over NSD q:
  // no random NSD competitor may do better.
  double prox_margin = -kInf;
  for (int t = 0; t < 1000; ++t) {
    const Hermitian3 u = random_block(rng);
    const double sigma = 0.01 + 2.0 * rng.uniform();
    const Hermitian3 p = prox_dual(u, sigma);
    const double value_p =
        0.5 * frobenius_norm_sq(p - u) - sigma * trace(p);
    for (int c = 0; c < 100; ++c) {
      const Hermitian3 q = project_nsd(random_block(rng));
      const double value_q =
          0.5 * frobenius_norm_sq(q - u) - sigma * trace(q);
      prox_margin = std::max(prox_margin, value_p - value_q);
    }
  }
  const bool prox_ok = prox_margin <= 1e-9;

  // Principal-minor test agrees with the eigenvalue sign away from the
  // decision boundary.
  int checked = 0;
  int disagreements = 0;
  for (int t = 0; t < 1000; ++t) {
    const double scale = t % 2 == 0 ? 0.7 : 0.42;
    const Complex c10{scale * rng.gaussian(), scale * rng.gaussian()};
    const Complex c01{scale * rng.gaussian(), scale * rng.gaussian()};
    const Complex cm11{scale * rng.gaussian(), scale * rng.gaussian()};
    Hermitian3 block;
    block.d0 = block.d1 = block.d2 = 1.0;
    block.l10 = c10;
    block.l20 = c01;
    block.l21 = cm11;
    const double min_eig = eigenvalues(block)[0];
    if (std::abs(min_eig) < 1e-9) continue;
    ++checked;
    if (psd_minors_check(c10, c01, cm11, 0.0).pass != (min_eig > 0.0)) {
      ++disagreements;
    }
  }
  const bool minors_ok = disagreements == 0 && checked >= 900;

  const bool pass = adjoint_max <= 1e-12 && proj_ok && prox_ok && minors_ok;
  return {pass,
          fmt("adjoint max %.2e (tol 1e-12); nsd proj: max eig %.2e, idem "
              "%.2e, <P,U-P> %.2e, resid min eig %.2e (tol 1e-10); prox "
              "margin %.2e (tol 1e-9); minors %d/%d agree",
              adjoint_max, proj_pos_eig, proj_idem, proj_inner, resid_min_eig,
              prox_margin, checked - disagreements, checked)};
}

// ---------------------------------------------------------------------------
// 7. Coupling limits: lambda -> inf collapses the solution onto the weighted
//    circular mean; lambda = 0 decouples the nodes onto their projected
//    observations.

Verdict coupling_limits() {
  GaussianSampler rng(99);

  // Stiff coupling: the iteration is convergent for any tau > 0, but a
  // primal step around 1e-3 lets the rigidly coupled configuration drift
  // onto the mean in a reasonable number of iterations (much smaller steps
  // converge too slowly, much larger ones slow the dual).
  const std::size_t n_stiff = 8;
  const double lambda = 1e6;
  ComplexVec y_stiff = random_phases(n_stiff, rng);
  std::vector<double> w(n_stiff);
  for (double& v : w) v = 0.5 + 1.5 * rng.uniform();
  const ProblemInstance stiff(Graph::chain(n_stiff), y_stiff, w,
                              std::vector<double>(n_stiff - 1, lambda));
  SolverConfig stiff_cfg;
  stiff_cfg.tau = 5e-3;
  stiff_cfg.max_iters = 50000;
  const SolveReport stiff_report = solve_relaxation(stiff, stiff_cfg);
  const CircleProjection mean = circular_mean(y_stiff, w);
  double mean_err = 0.0;
  for (std::size_t i = 0; i < n_stiff; ++i) {
    mean_err =
        std::max(mean_err, std::abs(stiff_report.x_rounded[i] - mean.point));
  }
  const bool stiff_ok = !mean.degenerate && mean_err <= 1e-3;

  // Decoupled: every node projects its own observation.
  const std::size_t n_free = 12;
  ComplexVec y_free(n_free);
  for (Complex& v : y_free) {
    v = (0.5 + rng.uniform()) * std::polar(1.0, -kPi + 2.0 * kPi * rng.uniform());
  }
  const ProblemInstance free_inst(Graph::chain(n_free), y_free,
                                  std::vector<double>(n_free, 1.0),
                                  std::vector<double>(n_free - 1, 0.0));
  SolverConfig free_cfg;
  free_cfg.max_iters = 20000;
  const SolveReport free_report = solve_relaxation(free_inst, free_cfg);
  const CircleSignal target = CircleSignal::project(y_free);
  double proj_err = 0.0;
  for (std::size_t i = 0; i < n_free; ++i) {
    proj_err =
        std::max(proj_err, std::abs(free_report.x_rounded[i] - target[i]));
  }
  const bool free_ok = proj_err <= 1e-8;

  return {stiff_ok && free_ok,
          fmt("lambda=1e6: dist to circular mean %.2e (tol 1e-3); lambda=0: "
              "dist to projected data %.2e (tol 1e-8)",
              mean_err, proj_err)};
}

// ---------------------------------------------------------------------------
// 8. File formats: the raw image is bit-lossless, PGM quantization stays
//    within pi/65535, and signal text survives a round trip at the printed
//    precision.

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("circletik-acceptance-" +
            std::to_string(
                std::chrono::steady_clock::now().time_since_epoch().count()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

bool same_bits(double a, double b) {
  std::uint64_t ba, bb;
  std::memcpy(&ba, &a, sizeof ba);
  std::memcpy(&bb, &b, sizeof bb);
  return ba == bb;
}

Verdict format_round_trips() {
  TempDir tmp;
  GaussianSampler rng(2468);

  // Raw float image: every bit pattern survives, including NaN and -0.0.
  PhaseImage raw;
  raw.height = 3;
  raw.width = 4;
  raw.angles = {0.0,
                -0.0,
                kPi,
                -kPi,
                std::numeric_limits<double>::quiet_NaN(),
                1e-300,
                -2.5,
                1e300,
                0.1,
                std::nextafter(kPi, 0.0),
                -3.1,
                2.7};
  write_phase_image_raw(tmp.path / "a.raw", raw);
  const PhaseImage raw_back = read_phase_image_raw(tmp.path / "a.raw");
  bool raw_ok =
      raw_back.height == raw.height && raw_back.width == raw.width &&
      raw_back.angles.size() == raw.angles.size();
  if (raw_ok) {
    for (std::size_t i = 0; i < raw.angles.size(); ++i) {
      raw_ok = raw_ok && same_bits(raw.angles[i], raw_back.angles[i]);
    }
  }

  // PGM: circular quantization error at most half a level (plus roundoff).
  PhaseImage pgm;
  pgm.height = 6;
  pgm.width = 7;
  pgm.angles.resize(42);
  for (double& a : pgm.angles) a = -kPi + 2.0 * kPi * rng.uniform();
  pgm.angles[0] = kPi;
  pgm.angles[1] = -kPi + 1e-14;
  write_phase_image_pgm(tmp.path / "a.pgm", pgm);
  const PhaseImage pgm_back = read_phase_image_pgm(tmp.path / "a.pgm");
  const double pgm_bound = kPi / 65535.0;
  double pgm_err = 0.0;
  bool pgm_ok = pgm_back.height == pgm.height && pgm_back.width == pgm.width;
  if (pgm_ok) {
    for (std::size_t i = 0; i < pgm.angles.size(); ++i) {
      pgm_err = std::max(pgm_err,
                         angular_error(std::polar(1.0, pgm.angles[i]),
                                       std::polar(1.0, pgm_back.angles[i])));
    }
    pgm_ok = pgm_err <= pgm_bound + 1e-12;
  }

  // Signal text: 17 significant digits reproduce the double exactly; "nan"
  // marks missing samples.
  std::vector<double> sig = {0.0,
                             -0.0,
                             kPi,
                             -kPi,
                             1.0 / 3.0,
                             std::numeric_limits<double>::quiet_NaN(),
                             -1e-17,
                             0.30000000000000004,
                             -2.2250738585072014e-308};
  write_signal(tmp.path / "a.sig", sig);
  const std::vector<double> sig_back = read_signal(tmp.path / "a.sig");
  bool sig_ok = sig_back.size() == sig.size();
  if (sig_ok) {
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (std::isnan(sig[i])) {
        sig_ok = sig_ok && std::isnan(sig_back[i]);
      } else {
        sig_ok = sig_ok && same_bits(sig[i], sig_back[i]);
      }
    }
  }

  return {raw_ok && pgm_ok && sig_ok,
          fmt("raw bit-exact=%d; pgm err %.3e (bound %.3e); text exact=%d",
              raw_ok ? 1 : 0, pgm_err, pgm_bound, sig_ok ? 1 : 0)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"geodesic interpolation", geodesic_interpolation},
      {"sandwich and certification", sandwich_and_certification},
      {"tree oracle agreement", tree_oracle_agreement},
      {"1-D denoising study", study_1d},
      {"2-D denoising study", study_2d},
      {"numeric kernels", numeric_kernels},
      {"coupling limits", coupling_limits},
      {"format round trips", format_round_trips},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& ex) {
      v = {false, std::string("exception: ") + ex.what()};
    }
    std::printf("%s  %zu. %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("%d of %zu criteria FAILED\n", failures, criteria.size());
  }
  return failures;
}
