#include "circletik/sigio.hpp"

#include <json.hpp>

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string_view>

#include "circletik/error.hpp"

namespace circletik {

namespace {

using nlohmann::json;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCategory::io, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw Error(ErrorCategory::io, "cannot read " + path.string());
  }
  return std::move(buf).str();
}

void dump(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCategory::io, "cannot create " + path.string());
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out.good()) {
    throw Error(ErrorCategory::io, "cannot write " + path.string());
  }
}

// Lines without their terminators; a trailing '\r' (CRLF input) is dropped.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

double parse_double(std::string_view token, const std::filesystem::path& path) {
  const std::string buf(token);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty()) {
    throw Error(ErrorCategory::io,
                "bad number '" + buf + "' in " + path.string());
  }
  return v;
}

std::string format_angle(double a) {
  if (std::isnan(a)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

void put_u16_be(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v >> 8));
  out.push_back(static_cast<char>(v & 0xff));
}

void put_u32_le(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64_le(std::string& out, double v) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

std::uint32_t get_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

double get_f64_le(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | p[i];
  return std::bit_cast<double>(bits);
}

json parse_json(const std::filesystem::path& path) {
  json j = json::parse(slurp(path), nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCategory::io, "malformed JSON in " + path.string());
  }
  return j;
}

constexpr char kRawMagic[8] = {'C', 'P', 'H', 'I', 'M', 'G', '0', '1'};

}  // namespace

void write_signal(const std::filesystem::path& path,
                  const std::vector<double>& angles) {
  std::string out = "# circle-signal v1 n=" + std::to_string(angles.size());
  out.push_back('\n');
  for (double a : angles) {
    out += format_angle(a);
    out.push_back('\n');
  }
  dump(path, out);
}

std::vector<double> read_signal(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  const auto lines = split_lines(text);
  constexpr std::string_view prefix = "# circle-signal v1 n=";
  if (lines.empty() || !lines[0].starts_with(prefix)) {
    throw Error(ErrorCategory::io, "missing signal header in " + path.string());
  }
  const std::size_t n = static_cast<std::size_t>(
      parse_double(lines[0].substr(prefix.size()), path));
  if (lines.size() != n + 1) {
    throw Error(ErrorCategory::io,
                "expected " + std::to_string(n) + " samples in " +
                    path.string() + ", found " +
                    std::to_string(lines.size() - 1));
  }
  std::vector<double> angles(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view line = lines[i + 1];
    angles[i] = (line == "nan") ? std::nan("")
                                : parse_double(line, path);
  }
  return angles;
}

void write_phase_image_pgm(const std::filesystem::path& path,
                           const PhaseImage& image) {
  if (image.angles.size() != image.height * image.width ||
      image.height == 0 || image.width == 0) {
    throw Error(ErrorCategory::dimension_mismatch, "bad image dimensions");
  }
  std::string out = "P5\n" + std::to_string(image.width) + " " +
                    std::to_string(image.height) + "\n65535\n";
  out.reserve(out.size() + 2 * image.angles.size());
  for (double a : image.angles) {
    if (std::isnan(a)) {
      throw Error(ErrorCategory::invalid_input,
                  "NaN pixels cannot be stored as PGM");
    }
    double level =
        std::round((a + std::numbers::pi) / (2.0 * std::numbers::pi) * 65535.0);
    level = std::min(std::max(level, 0.0), 65535.0);
    put_u16_be(out, static_cast<std::uint16_t>(level));
  }
  dump(path, out);
}

PhaseImage read_phase_image_pgm(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  std::size_t pos = 0;
  // PGM header tokens may be separated by whitespace and '#' comments.
  auto next_token = [&]() -> std::string {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return text.substr(start, pos - start);
  };

  if (next_token() != "P5") {
    throw Error(ErrorCategory::io, "not a binary PGM: " + path.string());
  }
  PhaseImage image;
  image.width = static_cast<std::size_t>(parse_double(next_token(), path));
  image.height = static_cast<std::size_t>(parse_double(next_token(), path));
  const std::string maxval = next_token();
  if (maxval != "65535") {
    throw Error(ErrorCategory::io,
                "expected 16-bit PGM (maxval 65535) in " + path.string());
  }
  ++pos;  // single whitespace after maxval
  const std::size_t count = image.height * image.width;
  if (image.height == 0 || image.width == 0 ||
      text.size() - pos < 2 * count) {
    throw Error(ErrorCategory::io, "truncated PGM: " + path.string());
  }
  image.angles.resize(count);
  const unsigned char* p = reinterpret_cast<const unsigned char*>(text.data() + pos);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint16_t q = static_cast<std::uint16_t>(
        (static_cast<std::uint16_t>(p[2 * i]) << 8) | p[2 * i + 1]);
    image.angles[i] =
        q == 0 ? std::numbers::pi
               : -std::numbers::pi + q * (2.0 * std::numbers::pi / 65535.0);
  }
  return image;
}

void write_phase_image_raw(const std::filesystem::path& path,
                           const PhaseImage& image) {
  if (image.angles.size() != image.height * image.width ||
      image.height == 0 || image.width == 0) {
    throw Error(ErrorCategory::dimension_mismatch, "bad image dimensions");
  }
  std::string out(kRawMagic, sizeof kRawMagic);
  put_u32_le(out, static_cast<std::uint32_t>(image.height));
  put_u32_le(out, static_cast<std::uint32_t>(image.width));
  for (double a : image.angles) put_f64_le(out, a);
  dump(path, out);
}

PhaseImage read_phase_image_raw(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  if (text.size() < 16 || std::memcmp(text.data(), kRawMagic, 8) != 0) {
    throw Error(ErrorCategory::io, "not a raw phase image: " + path.string());
  }
  const unsigned char* p = reinterpret_cast<const unsigned char*>(text.data());
  PhaseImage image;
  image.height = get_u32_le(p + 8);
  image.width = get_u32_le(p + 12);
  const std::size_t count = image.height * image.width;
  if (image.height == 0 || image.width == 0 ||
      text.size() != 16 + 8 * count) {
    throw Error(ErrorCategory::io,
                "raw phase image size mismatch: " + path.string());
  }
  image.angles.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    image.angles[i] = get_f64_le(p + 16 + 8 * i);
  }
  return image;
}

void write_report(const std::filesystem::path& path, const SolveReport& report,
                  const SolverConfig& cfg, const ReportExtras& extras) {
  json j = {
      {"psi_conv_star", report.psi_conv_star},
      {"psi_approx", report.psi_approx},
      {"relative_gap", report.relative_gap},
      {"tight", report.certificate.tight},
      {"max_modulus_deviation", report.certificate.max_modulus_deviation},
      {"max_rank1_residual", report.certificate.max_rank1_residual},
      {"iterations_run", report.iterations_run},
      {"final_step_change", report.final_step_change},
      {"rotation_degenerate", report.rotation_degenerate},
      {"config",
       {{"tau", cfg.tau},
        {"max_iters", cfg.max_iters},
        {"tol", cfg.tol},
        {"tight_tol", cfg.tight_tol}}},
  };
  if (extras.psi_orig_baseline) {
    j["psi_orig_baseline"] = *extras.psi_orig_baseline;
  }
  if (extras.seed) j["seed"] = *extras.seed;
  dump(path, j.dump(2) + "\n");
}

void write_lifted(const std::filesystem::path& path,
                  const LiftedVariables& s) {
  json jx = json::array();
  for (const Complex& v : s.x) jx.push_back({v.real(), v.imag()});
  json jr = json::array();
  for (const Complex& v : s.r) jr.push_back({v.real(), v.imag()});
  dump(path, json{{"x", jx}, {"r", jr}}.dump(2) + "\n");
}

LiftedVariables read_lifted(const std::filesystem::path& path) {
  const json j = parse_json(path);
  if (!j.is_object() || !j.contains("x") || !j.contains("r")) {
    throw Error(ErrorCategory::io,
                "lifted solution must contain x and r: " + path.string());
  }
  auto parse_vec = [&](const json& arr) {
    if (!arr.is_array()) {
      throw Error(ErrorCategory::io, "bad lifted solution: " + path.string());
    }
    ComplexVec v;
    v.reserve(arr.size());
    for (const json& item : arr) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
          !item[1].is_number()) {
        throw Error(ErrorCategory::io,
                    "bad complex entry in " + path.string());
      }
      v.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    return v;
  };
  return {parse_vec(j["x"]), parse_vec(j["r"])};
}

namespace {

// Shared reader for "a b value" / "a value" line formats.
std::vector<std::vector<std::string>> data_lines(
    const std::filesystem::path& path) {
  const std::string text = slurp(path);
  std::vector<std::vector<std::string>> rows;
  for (std::string_view line : split_lines(text)) {
    std::vector<std::string> tokens;
    std::istringstream ss{std::string(line)};
    std::string tok;
    while (ss >> tok) {
      if (tok.starts_with('#')) break;
      tokens.push_back(tok);
    }
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  return rows;
}

std::uint32_t parse_index(const std::string& tok,
                          const std::filesystem::path& path) {
  const double v = parse_double(tok, path);
  if (v < 0 || v != std::floor(v)) {
    throw Error(ErrorCategory::io,
                "bad node index '" + tok + "' in " + path.string());
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

EdgeListFile read_edge_list(const std::filesystem::path& path) {
  EdgeListFile out;
  for (const auto& row : data_lines(path)) {
    if (row.size() != 3) {
      throw Error(ErrorCategory::io,
                  "edge list lines must be 'a b lambda' in " + path.string());
    }
    out.edges.push_back({parse_index(row[0], path), parse_index(row[1], path)});
    out.lambda.push_back(parse_double(row[2], path));
  }
  return out;
}

PinFile read_pins(const std::filesystem::path& path) {
  PinFile out;
  for (const auto& row : data_lines(path)) {
    if (row.size() != 2) {
      throw Error(ErrorCategory::io,
                  "pin lines must be 'node angle' in " + path.string());
    }
    out.node.push_back(parse_index(row[0], path));
    out.angle.push_back(parse_double(row[1], path));
  }
  return out;
}

NodeWeightFile read_node_weights(const std::filesystem::path& path) {
  NodeWeightFile out;
  for (const auto& row : data_lines(path)) {
    if (row.size() != 2) {
      throw Error(ErrorCategory::io,
                  "weight lines must be 'node weight' in " + path.string());
    }
    out.node.push_back(parse_index(row[0], path));
    out.weight.push_back(parse_double(row[1], path));
  }
  return out;
}

}  // namespace circletik
