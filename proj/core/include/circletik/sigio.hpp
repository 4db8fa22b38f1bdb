#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "circletik/graph.hpp"
#include "circletik/lifting.hpp"
#include "circletik/solver.hpp"

namespace circletik {

// --- 1-D signal text format ------------------------------------------------
// Header line "# circle-signal v1 n=<N>" followed by N lines, each either an
// angle in radians printed with 17 significant digits (lossless for double)
// or the token "nan" for a missing sample.

void write_signal(const std::filesystem::path& path,
                  const std::vector<double>& angles);
std::vector<double> read_signal(const std::filesystem::path& path);

// --- phase images ------------------------------------------------------

struct PhaseImage {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> angles;  // row major; NaN marks a missing pixel
};

// Binary 16-bit PGM (maxval 65535, big-endian samples). Angles quantize as
// round((theta + pi) / (2 pi) * 65535); NaN pixels are not representable.
// Decoding maps level q to -pi + q * 2 pi / 65535, with level 0 folded to
// +pi to stay inside (-pi, pi]; the circular quantization error is at most
// pi / 65535.
void write_phase_image_pgm(const std::filesystem::path& path,
                           const PhaseImage& image);
PhaseImage read_phase_image_pgm(const std::filesystem::path& path);

// Lossless raw image: 8-byte magic "CPHIMG01", uint32 little-endian height
// and width, then height*width float64 little-endian angles row major (NaN
// allowed).
void write_phase_image_raw(const std::filesystem::path& path,
                           const PhaseImage& image);
PhaseImage read_phase_image_raw(const std::filesystem::path& path);

// --- solver reports ----------------------------------------------------

struct ReportExtras {
  std::optional<double> psi_orig_baseline;
  std::optional<std::uint64_t> seed;
};

// JSON object with the objective values, tightness certificate, gap,
// iteration counts and an echo of the solver configuration.
void write_report(const std::filesystem::path& path, const SolveReport& report,
                  const SolverConfig& cfg, const ReportExtras& extras = {});

// --- lifted solutions ----------------------------------------------------
// JSON object {"x": [[re, im], ...], "r": [[re, im], ...]} so a solve can
// be certified later or by another tool.

void write_lifted(const std::filesystem::path& path, const LiftedVariables& s);
LiftedVariables read_lifted(const std::filesystem::path& path);

// --- auxiliary inputs ----------------------------------------------------

// Edge list text: one "a b lambda" triple per line, '#' comments and blank
// lines ignored.
struct EdgeListFile {
  std::vector<Edge> edges;
  std::vector<double> lambda;
};
EdgeListFile read_edge_list(const std::filesystem::path& path);

// Pin list text: one "node angle" pair per line, same comment rules.
struct PinFile {
  std::vector<std::uint32_t> node;
  std::vector<double> angle;
};
PinFile read_pins(const std::filesystem::path& path);

// Node weight text: one "node weight" pair per line ("inf" pins the node).
struct NodeWeightFile {
  std::vector<std::uint32_t> node;
  std::vector<double> weight;
};
NodeWeightFile read_node_weights(const std::filesystem::path& path);

}  // namespace circletik
