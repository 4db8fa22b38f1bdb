// Command line front end: synthesize, denoise, interpolate, certify and
// cross-check circle-valued signals on chains and grids.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "circletik/baseline.hpp"
#include "circletik/circle.hpp"
#include "circletik/error.hpp"
#include "circletik/meanfilter.hpp"
#include "circletik/oracle.hpp"
#include "circletik/sigio.hpp"
#include "circletik/solver.hpp"
#include "circletik/synth.hpp"

namespace ct = circletik;
using nlohmann::json;

namespace {

int exit_code(ct::ErrorCategory c) {
  switch (c) {
    case ct::ErrorCategory::io: return 3;
    case ct::ErrorCategory::invalid_size:
    case ct::ErrorCategory::dimension_mismatch:
    case ct::ErrorCategory::invalid_input:
    case ct::ErrorCategory::undefined_argument: return 4;
    case ct::ErrorCategory::unsupported_topology: return 5;
    case ct::ErrorCategory::singular_system: return 6;
  }
  return 2;
}

struct LoadedInput {
  bool is_image = false;
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> angles;  // NaN marks a missing sample
};

LoadedInput load_input(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) {
    throw ct::Error(ct::ErrorCategory::io, "cannot open " + path.string());
  }
  char head[8] = {};
  probe.read(head, sizeof head);
  const std::string_view sig(head, static_cast<std::size_t>(probe.gcount()));
  probe.close();

  LoadedInput in;
  if (sig.starts_with("P5")) {
    const ct::PhaseImage img = ct::read_phase_image_pgm(path);
    in = {true, img.height, img.width, img.angles};
  } else if (sig.starts_with("CPHIMG01")) {
    const ct::PhaseImage img = ct::read_phase_image_raw(path);
    in = {true, img.height, img.width, img.angles};
  } else if (sig.starts_with("# circle")) {
    in.angles = ct::read_signal(path);
  } else {
    throw ct::Error(ct::ErrorCategory::io,
                    "unrecognized input format: " + path.string());
  }
  return in;
}

ct::Graph make_graph(const LoadedInput& in) {
  return in.is_image ? ct::Graph::grid(in.height, in.width)
                     : ct::Graph::chain(in.angles.size());
}

struct InstanceFlags {
  double lambda = 1.0;
  std::string lambda_file;
  double node_weight = 1.0;
  std::string weight_file;
  std::string pins_file;
  bool interpolate = false;  // default weight 0, pins carry the data
  bool double_orientation = false;
};

std::vector<double> edge_weights(const ct::Graph& g, const InstanceFlags& f) {
  std::vector<double> lambda(g.edge_count(), f.lambda);
  if (f.lambda_file.empty()) return lambda;

  std::unordered_map<std::uint64_t, std::size_t> ids;
  ids.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ids[static_cast<std::uint64_t>(g.edge(e).a) * g.node_count() +
        g.edge(e).b] = e;
  }
  const ct::EdgeListFile file = ct::read_edge_list(f.lambda_file);
  for (std::size_t i = 0; i < file.edges.size(); ++i) {
    std::uint32_t a = file.edges[i].a, b = file.edges[i].b;
    if (a > b) std::swap(a, b);
    const auto it =
        ids.find(static_cast<std::uint64_t>(a) * g.node_count() + b);
    if (it == ids.end()) {
      throw ct::Error(ct::ErrorCategory::invalid_input,
                      "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") is not in the graph");
    }
    lambda[it->second] = file.lambda[i];
  }
  return lambda;
}

ct::ProblemInstance build_instance(const LoadedInput& in,
                                   const InstanceFlags& f) {
  ct::Graph g = make_graph(in);
  std::vector<double> lambda = edge_weights(g, f);
  const std::size_t nn = g.node_count();

  ct::ComplexVec y(nn, ct::Complex{1.0, 0.0});
  std::vector<double> w(nn, f.interpolate ? 0.0 : f.node_weight);
  for (std::size_t n = 0; n < nn; ++n) {
    if (std::isnan(in.angles[n])) {
      w[n] = 0.0;
    } else {
      const double a =
          f.double_orientation ? 2.0 * in.angles[n] : in.angles[n];
      y[n] = std::polar(1.0, a);
      if (f.interpolate && f.pins_file.empty()) {
        w[n] = std::numeric_limits<double>::infinity();
      }
    }
  }
  if (!f.pins_file.empty()) {
    const ct::PinFile pins = ct::read_pins(f.pins_file);
    for (std::size_t i = 0; i < pins.node.size(); ++i) {
      if (pins.node[i] >= nn) {
        throw ct::Error(ct::ErrorCategory::invalid_input,
                        "pinned node out of range");
      }
      const double a = f.double_orientation ? 2.0 * pins.angle[i]
                                            : pins.angle[i];
      y[pins.node[i]] = std::polar(1.0, a);
      w[pins.node[i]] = std::numeric_limits<double>::infinity();
    }
  }
  if (!f.weight_file.empty()) {
    const ct::NodeWeightFile file = ct::read_node_weights(f.weight_file);
    for (std::size_t i = 0; i < file.node.size(); ++i) {
      if (file.node[i] >= nn) {
        throw ct::Error(ct::ErrorCategory::invalid_input,
                        "weighted node out of range");
      }
      w[file.node[i]] = file.weight[i];
    }
  }
  return ct::ProblemInstance(std::move(g), std::move(y), std::move(w),
                             std::move(lambda));
}

std::vector<double> output_angles(const ct::CircleSignal& x,
                                  bool double_orientation) {
  return double_orientation ? ct::orientation_halve(x).angles() : x.angles();
}

void write_output(const std::filesystem::path& path, const LoadedInput& in,
                  const std::vector<double>& angles) {
  if (in.is_image) {
    const ct::PhaseImage img{in.height, in.width, angles};
    if (path.extension() == ".pgm") {
      ct::write_phase_image_pgm(path, img);
    } else {
      ct::write_phase_image_raw(path, img);
    }
  } else {
    ct::write_signal(path, angles);
  }
}

void dump_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw ct::Error(ct::ErrorCategory::io, "cannot create " + path.string());
  }
  out << j.dump(2) << "\n";
  if (!out.good()) {
    throw ct::Error(ct::ErrorCategory::io, "cannot write " + path.string());
  }
}

struct CommonOpts {
  std::string input;
  std::string output;
  std::string report;
  std::string solution;
  InstanceFlags flags;
  ct::SolverConfig cfg;
  std::optional<std::uint64_t> seed;
};

void add_instance_flags(CLI::App* cmd, CommonOpts& o, bool interpolate) {
  o.flags.interpolate = interpolate;
  cmd->add_option("--input", o.input, "signal text, 16-bit PGM or raw image")
      ->required();
  cmd->add_option("--lambda", o.flags.lambda,
                  "uniform smoothing weight per edge");
  cmd->add_option("--lambda-file", o.flags.lambda_file,
                  "per-edge weights, lines 'a b lambda' (overrides --lambda)");
  if (!interpolate) {
    cmd->add_option("--w", o.flags.node_weight, "uniform data weight");
  }
  cmd->add_option("--w-file", o.flags.weight_file,
                  "per-node weights, lines 'node w' ('inf' pins the node)");
  cmd->add_option("--pins", o.flags.pins_file,
                  "pinned nodes, lines 'node angle'");
  cmd->add_flag("--double-orientation", o.flags.double_orientation,
                "double input angles, halve output angles (orientation data)");
  cmd->add_option("--tau", o.cfg.tau, "primal step size");
  cmd->add_option("--max-iters", o.cfg.max_iters, "iteration cap");
  cmd->add_option("--tol", o.cfg.tol, "relative step change stop");
  cmd->add_option("--tight-tol", o.cfg.tight_tol, "certificate tolerance");
  cmd->add_option("--seed", o.seed, "seed echoed into the report");
}

int run_relaxation(const CommonOpts& o) {
  const LoadedInput in = load_input(o.input);
  const ct::ProblemInstance inst = build_instance(in, o.flags);
  const ct::SolveReport rep = ct::solve_relaxation(inst, o.cfg);

  ct::ReportExtras extras;
  extras.seed = o.seed;
  try {
    extras.psi_orig_baseline = ct::solve_baseline(inst).psi_orig;
  } catch (const ct::Error&) {
    // The baseline needs data the relaxation can do without; skip it then.
  }

  if (!o.output.empty()) {
    write_output(o.output, in,
                 output_angles(rep.x_rounded, o.flags.double_orientation));
  }
  if (!o.solution.empty()) ct::write_lifted(o.solution, rep.s_star);
  if (!o.report.empty()) ct::write_report(o.report, rep, o.cfg, extras);

  std::printf(
      "sdp: psi_conv=%.10g psi_approx=%.10g gap=%.3g tight=%s iters=%d\n",
      rep.psi_conv_star, rep.psi_approx, rep.relative_gap,
      rep.certificate.tight ? "yes" : "no", rep.iterations_run);
  return 0;
}

int run_baseline_method(const CommonOpts& o) {
  const LoadedInput in = load_input(o.input);
  const ct::ProblemInstance inst = build_instance(in, o.flags);
  const ct::BaselineResult res = ct::solve_baseline(inst);
  if (!o.output.empty()) {
    write_output(o.output, in,
                 output_angles(res.x_rounded, o.flags.double_orientation));
  }
  if (!o.report.empty()) {
    json j = {{"method", "baseline"}, {"psi_orig_baseline", res.psi_orig}};
    if (o.seed) j["seed"] = *o.seed;
    dump_json(o.report, j);
  }
  std::printf("baseline: psi_orig=%.10g\n", res.psi_orig);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Tikhonov-type smoothing and interpolation of circle-valued signals "
      "on chains and grids, via a semidefinite lifting with an exactness "
      "certificate"};
  app.require_subcommand(1);

  // denoise
  CommonOpts dn;
  std::string method = "sdp";
  double kernel_std = 3.0;
  CLI::App* denoise = app.add_subcommand(
      "denoise", "smooth a noisy signal or phase image");
  add_instance_flags(denoise, dn, false);
  denoise->add_option("--method", method, "sdp, baseline or meanfilter")
      ->check(CLI::IsMember({"sdp", "baseline", "meanfilter"}));
  denoise->add_option("--kernel-std", kernel_std,
                      "gaussian std for --method meanfilter");
  denoise->add_option("--output", dn.output, "smoothed angles");
  denoise->add_option("--report", dn.report, "JSON run report");
  denoise->add_option("--solution", dn.solution,
                      "lifted solution JSON (sdp only)");

  // interpolate
  CommonOpts ip;
  CLI::App* interpolate = app.add_subcommand(
      "interpolate", "fill a signal from pinned nodes (data weight 0)");
  add_instance_flags(interpolate, ip, true);
  std::string ip_method = "sdp";
  interpolate->add_option("--method", ip_method, "sdp or baseline")
      ->check(CLI::IsMember({"sdp", "baseline"}));
  interpolate->add_option("--output", ip.output, "interpolated angles");
  interpolate->add_option("--report", ip.report, "JSON run report");
  interpolate->add_option("--solution", ip.solution,
                          "lifted solution JSON (sdp only)");

  // synth
  CLI::App* synth = app.add_subcommand(
      "synth", "generate a smooth ground truth and its noisy observation");
  bool d2 = false;
  ct::SyntheticSpec1D s1;
  ct::SyntheticSpec2D s2;
  std::uint64_t synth_seed = 0;
  double noise_std = -1.0;
  std::string truth_path, noisy_path;
  synth->add_flag("--d2", d2, "2-D phase image instead of a 1-D signal");
  synth->add_option("--n", s1.n, "1-D sample count");
  synth->add_option("--initial-angle", s1.initial_angle, "1-D walk start");
  synth->add_option("--increment-std", s1.increment_std, "1-D walk step std");
  synth->add_option("--height", s2.height, "2-D image height");
  synth->add_option("--width", s2.width, "2-D image width");
  synth->add_option("--control-grid", s2.control_grid,
                    "2-D control panel size");
  synth->add_option("--control-std", s2.control_std,
                    "2-D control phase std");
  synth->add_option("--noise-std", noise_std, "observation phase noise std");
  synth->add_option("--seed", synth_seed, "generator seed");
  synth->add_option("--truth", truth_path, "ground truth output")->required();
  synth->add_option("--noisy", noisy_path, "noisy output")->required();

  // certify
  CommonOpts ct_opts;
  std::string lifted_path;
  CLI::App* certify = app.add_subcommand(
      "certify", "recompute objectives and the certificate for a solution");
  add_instance_flags(certify, ct_opts, false);
  certify->add_option("--solution", lifted_path, "lifted solution JSON")
      ->required();
  certify->add_option("--report", ct_opts.report, "JSON certificate report");

  // oracle
  CommonOpts oc;
  std::size_t levels = 4096;
  bool exhaustive = false;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "compare sdp and baseline against a brute-force minimum");
  add_instance_flags(oracle, oc, false);
  oracle->add_option("--levels", levels, "angular discretization");
  oracle->add_flag("--exhaustive", exhaustive,
                   "full enumeration instead of tree dynamic programming");
  oracle->add_option("--report", oc.report, "JSON comparison report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (denoise->parsed()) {
      if (method == "sdp") return run_relaxation(dn);
      if (method == "baseline") return run_baseline_method(dn);
      // meanfilter
      const LoadedInput in = load_input(dn.input);
      if (!in.is_image) {
        throw ct::Error(ct::ErrorCategory::unsupported_topology,
                        "the mean filter needs an image input");
      }
      const ct::ProblemInstance inst = build_instance(in, dn.flags);
      ct::ComplexVec y(in.angles.size());
      for (std::size_t p = 0; p < y.size(); ++p) {
        y[p] = std::isnan(in.angles[p]) ? ct::Complex{0.0, 0.0}
                                        : std::polar(1.0, in.angles[p]);
      }
      const ct::FilterResult res =
          ct::circular_mean_filter(in.height, in.width, y, kernel_std);
      const double psi = ct::cost_orig(inst, res.x);
      int degenerate = 0;
      for (bool d : res.degenerate) degenerate += d ? 1 : 0;
      if (!dn.output.empty()) {
        write_output(dn.output, in, res.x.angles());
      }
      if (!dn.report.empty()) {
        json j = {{"method", "meanfilter"},
                  {"kernel_std", kernel_std},
                  {"psi_orig", psi},
                  {"degenerate_pixels", degenerate}};
        if (dn.seed) j["seed"] = *dn.seed;
        dump_json(dn.report, j);
      }
      std::printf("meanfilter: psi_orig=%.10g degenerate_pixels=%d\n", psi,
                  degenerate);
      return 0;
    }

    if (interpolate->parsed()) {
      return ip_method == "sdp" ? run_relaxation(ip)
                                : run_baseline_method(ip);
    }

    if (synth->parsed()) {
      std::vector<double> truth, noisy;
      if (d2) {
        s2.seed = synth_seed;
        if (noise_std >= 0.0) s2.noise_std = noise_std;
        const ct::SyntheticPair pair = ct::gen_2d(s2);
        const ct::PhaseImage t{s2.height, s2.width,
                               pair.ground_truth.angles()};
        const ct::PhaseImage n{s2.height, s2.width, pair.noisy.angles()};
        if (std::filesystem::path(truth_path).extension() == ".pgm") {
          ct::write_phase_image_pgm(truth_path, t);
          ct::write_phase_image_pgm(noisy_path, n);
        } else {
          ct::write_phase_image_raw(truth_path, t);
          ct::write_phase_image_raw(noisy_path, n);
        }
        std::printf("synth 2d: %zux%zu seed=%llu noise_std=%g\n", s2.height,
                    s2.width, static_cast<unsigned long long>(synth_seed),
                    s2.noise_std);
      } else {
        s1.seed = synth_seed;
        if (noise_std >= 0.0) s1.noise_std = noise_std;
        const ct::SyntheticPair pair = ct::gen_1d(s1);
        ct::write_signal(truth_path, pair.ground_truth.angles());
        ct::write_signal(noisy_path, pair.noisy.angles());
        std::printf("synth 1d: n=%zu seed=%llu noise_std=%g\n", s1.n,
                    static_cast<unsigned long long>(synth_seed),
                    s1.noise_std);
      }
      return 0;
    }

    if (certify->parsed()) {
      const LoadedInput in = load_input(ct_opts.input);
      const ct::ProblemInstance inst = build_instance(in, ct_opts.flags);
      const ct::LiftedVariables s = ct::read_lifted(lifted_path);

      ct::SolveReport rep;
      rep.s_star = s;
      rep.x_rounded = ct::CircleSignal::project(s.x);
      rep.psi_conv_star = ct::cost_conv(inst, s);
      rep.psi_approx = ct::cost_orig(inst, rep.x_rounded);
      rep.certificate = ct::tightness_certificate(inst.graph(), s,
                                                  ct_opts.cfg.tight_tol);
      rep.relative_gap =
          rep.psi_conv_star > 0.0
              ? ct::relative_gap(rep.psi_approx, rep.psi_conv_star)
              : 0.0;
      rep.rotation_degenerate = inst.rotation_degenerate();

      ct::ReportExtras extras;
      extras.seed = ct_opts.seed;
      if (!ct_opts.report.empty()) {
        ct::write_report(ct_opts.report, rep, ct_opts.cfg, extras);
      }
      std::printf(
          "certify: psi_conv=%.10g psi_approx=%.10g gap=%.3g tight=%s "
          "modulus_dev=%.3g rank1_resid=%.3g\n",
          rep.psi_conv_star, rep.psi_approx, rep.relative_gap,
          rep.certificate.tight ? "yes" : "no",
          rep.certificate.max_modulus_deviation,
          rep.certificate.max_rank1_residual);
      return 0;
    }

    if (oracle->parsed()) {
      const LoadedInput in = load_input(oc.input);
      const ct::ProblemInstance inst = build_instance(in, oc.flags);
      const ct::SolveReport rep = ct::solve_relaxation(inst, oc.cfg);
      std::optional<double> psi_baseline;
      try {
        psi_baseline = ct::solve_baseline(inst).psi_orig;
      } catch (const ct::Error&) {
      }
      const ct::OracleResult ora = exhaustive
                                       ? ct::exhaustive_min(inst, levels)
                                       : ct::dp_min_tree(inst, levels);
      const double residual = ct::adjoint_selftest(inst.graph(), 7);

      std::printf("%-22s %-18s %s\n", "method", "psi", "tight");
      std::printf("%-22s %-18.10g %s\n", "sdp(psi_conv)", rep.psi_conv_star,
                  rep.certificate.tight ? "yes" : "no");
      std::printf("%-22s %-18.10g %s\n", "sdp(psi_approx)", rep.psi_approx,
                  "-");
      if (psi_baseline) {
        std::printf("%-22s %-18.10g %s\n", "baseline", *psi_baseline, "-");
      }
      const std::string oracle_name =
          (exhaustive ? "exhaustive(K=" : "dp(K=") + std::to_string(levels) +
          ")";
      std::printf("%-22s %-18.10g %s\n", oracle_name.c_str(), ora.psi, "-");
      std::printf("adjoint residual: %.3g\n", residual);

      if (!oc.report.empty()) {
        json j = {{"psi_conv_star", rep.psi_conv_star},
                  {"psi_approx", rep.psi_approx},
                  {"psi_oracle", ora.psi},
                  {"levels", levels},
                  {"tight", rep.certificate.tight},
                  {"adjoint_residual", residual}};
        if (psi_baseline) j["psi_orig_baseline"] = *psi_baseline;
        if (oc.seed) j["seed"] = *oc.seed;
        dump_json(oc.report, j);
      }
      return 0;
    }
  } catch (const ct::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
