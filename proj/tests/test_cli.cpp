// End-to-end runs of the installed command line tool. Each case shells out
// to the real binary (path injected by the build) with files in a scratch
// directory, then inspects exit codes, reports and outputs.

#include <doctest.h>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include <json.hpp>

#include "circletik/sigio.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace circletik;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("circletik-cli-" +
           std::to_string(
               std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  fs::path operator/(const char* name) const { return dir / name; }
};

// Runs the tool with stdout+stderr captured into `log`; returns the exit
// code (or a negative value when the process did not exit normally).
int run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string(CIRCLETIK_CLI_PATH) + " " + args + " > " +
                          log.string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -2;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

json load_json(const fs::path& p) { return json::parse(slurp(p)); }

}  // namespace

TEST_CASE("cli denoises a generated 1-D signal and reports the certificate") {
  Scratch tmp;
  const fs::path log = tmp / "log.txt";

  REQUIRE(run_cli("synth --n 200 --seed 5 --truth " + (tmp / "t.txt").string() +
                      " --noisy " + (tmp / "n.txt").string(),
                  log) == 0);

  const int rc = run_cli("denoise --input " + (tmp / "n.txt").string() +
                             " --lambda 20 --output " +
                             (tmp / "out.txt").string() + " --report " +
                             (tmp / "r.json").string() + " --solution " +
                             (tmp / "s.json").string(),
                         log);
  REQUIRE(rc == 0);
  CHECK(slurp(log).find("sdp:") != std::string::npos);

  const json r = load_json(tmp / "r.json");
  CHECK(r.at("tight").get<bool>());
  CHECK(r.at("relative_gap").get<double>() >= 0.0);
  CHECK(r.at("psi_conv_star").get<double>() <=
        r.at("psi_approx").get<double>() + 1e-6);
  CHECK(r.at("psi_conv_star").get<double>() <=
        r.at("psi_orig_baseline").get<double>() + 1e-6);
  CHECK(r.at("iterations_run").get<int>() >= 1);

  const std::vector<double> out = read_signal(tmp / "out.txt");
  REQUIRE(out.size() == 200);
  for (double a : out) CHECK(std::isfinite(a));

  // The stored lifted solution certifies independently to the same values.
  REQUIRE(run_cli("certify --input " + (tmp / "n.txt").string() +
                      " --lambda 20 --solution " + (tmp / "s.json").string() +
                      " --report " + (tmp / "c.json").string(),
                  log) == 0);
  const json c = load_json(tmp / "c.json");
  CHECK(c.at("psi_conv_star").get<double>() ==
        doctest::Approx(r.at("psi_conv_star").get<double>()).epsilon(1e-12));
  CHECK(c.at("tight").get<bool>() == r.at("tight").get<bool>());
}

TEST_CASE("cli interpolates missing samples through pinned endpoints") {
  Scratch tmp;
  const fs::path log = tmp / "log.txt";
  const double nan = std::nan("");

  std::vector<double> angles(10, nan);
  angles.front() = -1.0;
  angles.back() = 2.0;
  write_signal(tmp / "holes.txt", angles);

  REQUIRE(run_cli("interpolate --input " + (tmp / "holes.txt").string() +
                      " --lambda 1 --max-iters 20000 --output " +
                      (tmp / "filled.txt").string() + " --report " +
                      (tmp / "r.json").string(),
                  log) == 0);

  CHECK(load_json(tmp / "r.json").at("tight").get<bool>());
  const std::vector<double> filled = read_signal(tmp / "filled.txt");
  REQUIRE(filled.size() == 10);
  for (std::size_t i = 0; i < filled.size(); ++i) {
    const double target = (static_cast<double>(i) - 3.0) / 3.0;
    CHECK(std::abs(filled[i] - target) <= 1e-5);
  }
}

TEST_CASE("cli baseline method reports its objective") {
  Scratch tmp;
  const fs::path log = tmp / "log.txt";

  REQUIRE(run_cli("synth --n 120 --seed 2 --truth " + (tmp / "t.txt").string() +
                      " --noisy " + (tmp / "n.txt").string(),
                  log) == 0);
  REQUIRE(run_cli("denoise --input " + (tmp / "n.txt").string() +
                      " --lambda 10 --method baseline --output " +
                      (tmp / "b.txt").string() + " --report " +
                      (tmp / "rb.json").string(),
                  log) == 0);

  const json rb = load_json(tmp / "rb.json");
  CHECK(rb.at("method").get<std::string>() == "baseline");
  CHECK(rb.at("psi_orig_baseline").get<double>() > 0.0);
  CHECK(read_signal(tmp / "b.txt").size() == 120);
}

TEST_CASE("cli round-trips a small image through pgm output") {
  Scratch tmp;
  const fs::path log = tmp / "log.txt";

  REQUIRE(run_cli("synth --d2 --height 8 --width 8 --seed 1 --truth " +
                      (tmp / "t.raw").string() + " --noisy " +
                      (tmp / "n.raw").string(),
                  log) == 0);
  REQUIRE(run_cli("denoise --input " + (tmp / "n.raw").string() +
                      " --lambda 2 --output " + (tmp / "out.pgm").string(),
                  log) == 0);

  const PhaseImage out = read_phase_image_pgm(tmp / "out.pgm");
  CHECK(out.height == 8);
  CHECK(out.width == 8);
}

TEST_CASE("cli oracle prints the comparison table") {
  Scratch tmp;
  const fs::path log = tmp / "log.txt";

  write_signal(tmp / "y.txt", {0.1, -0.2, 0.4, 0.3});
  REQUIRE(run_cli("oracle --input " + (tmp / "y.txt").string() +
                      " --lambda 2 --levels 512",
                  log) == 0);
  const std::string table = slurp(log);
  CHECK(table.find("dp(") != std::string::npos);
  CHECK(table.find("adjoint residual") != std::string::npos);
}

TEST_CASE("cli maps failures onto stable exit codes") {
  Scratch tmp;
  const fs::path log = tmp / "log.txt";

  // Unreadable input is an io error.
  CHECK(run_cli("denoise --input " + (tmp / "missing.txt").string(), log) ==
        3);

  // The mean filter needs a grid, so a 1-D signal is an unsupported
  // topology.
  write_signal(tmp / "y.txt", {0.1, 0.2, 0.3});
  CHECK(run_cli("denoise --input " + (tmp / "y.txt").string() +
                    " --method meanfilter --kernel-std 1.5",
                log) == 5);
}
